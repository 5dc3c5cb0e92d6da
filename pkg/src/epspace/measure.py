"""Extended probability spaces over signed events, with exact arithmetic.

A space is built from positive atom weights: nonnegative rationals summing
to exactly 1.  The probability of a measurable event is the weight sum of
its positive atoms minus the weight sum of its negated atoms, so values
range over [-1, 1] and the negative half-space genuinely carries negative
probability (the full negative event has probability -1, while the positive
family restricts to an ordinary probability measure).

Everything is ``fractions.Fraction``; there is no floating point in this
module, and every identity the validator checks holds exactly or not at all.

``with_override`` pins chosen events to arbitrary values.  It exists only so
the axiom validator in :mod:`epspace.checks` can demonstrate failures on
purpose; overridden spaces are deliberately allowed to be inconsistent.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    AlgebraError,
    EventNotMeasurableError,
    NonNegativityError,
    NormalizationError,
    SchemaError,
)
from .events import Draft, Event, annihilating_union, normalize
from .families import Family, GroundSet, compose_family, is_set_algebra, is_set_field, powerset_family

__all__ = ["ExtendedSpace", "make_space", "as_fraction", "positive_family_is_field"]


def as_fraction(value, where: str = "weight") -> Fraction:
    """Convert an exact literal to ``Fraction``; floats are rejected as inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: cannot parse {value!r} as a rational") from exc
    if isinstance(value, float):
        raise SchemaError(
            f"{where}: floats are inexact; pass a string like '0.25', an int, "
            "or a Fraction"
        )
    raise SchemaError(f"{where}: unsupported weight type {type(value).__name__}")


@dataclass(frozen=True)
class ExtendedSpace:
    """A ground set, its positive algebra, the composed measurable family, and weights.

    Construct through :func:`make_space`, which validates every invariant and
    derives the composed family.  Immutable; safe to share between threads.
    """

    ground: GroundSet
    weights: Mapping[str, Fraction]
    fplus: Family
    f: Family
    overrides: Mapping[Event, Fraction] = field(default_factory=dict)
    events_in_order: tuple = field(default=(), compare=False, repr=False)

    @property
    def omega_plus(self) -> Event:
        return self.ground.omega_plus

    @property
    def omega_minus(self) -> Event:
        return self.ground.omega_minus

    def probability(self, event: Event) -> Fraction:
        """Exact probability of a measurable event.

        Raises :class:`EventNotMeasurableError` when the event is outside the
        composed family.
        """
        if event not in self.f:
            raise EventNotMeasurableError(
                f"event {event.text()!r} is not in the measurable family"
            )
        if self.overrides:
            pinned = self.overrides.get(event)
            if pinned is not None:
                return pinned
        w = self.weights
        return sum((w[l] for l in event.positive_labels), Fraction(0)) - sum(
            (w[l] for l in event.negative_labels), Fraction(0)
        )

    def draft_probability(self, draft: "Event | Draft | str") -> Fraction:
        """Probability of a draft: annihilate first, then evaluate.

        Inserting a ``{w, -w}`` pair never changes the value, so e.g. the
        draft ``a,-a`` evaluates to 0.
        """
        return self.probability(normalize(draft))

    def complement(self, event: Event) -> Event:
        """Complement within the signed space.

        Computed part-wise -- positive part complemented in the positive
        universe, negative part in the negative one -- then joined with
        annihilation, which keeps the result measurable.
        """
        pos_comp = self.omega_plus - event.positive_part
        neg_comp = self.omega_minus - event.negative_part
        return annihilating_union(pos_comp, neg_comp)

    def with_override(self, event: Event, value) -> "ExtendedSpace":
        """Fault-injection hook: pin ``P(event)`` to an arbitrary exact value.

        Returns a new space; the validator is expected to flag the damage.
        """
        if event not in self.f:
            raise EventNotMeasurableError(
                f"cannot override non-measurable event {event.text()!r}"
            )
        pinned = dict(self.overrides)
        pinned[event] = as_fraction(value, where=f"override {event.text()!r}")
        return ExtendedSpace(
            ground=self.ground,
            weights=self.weights,
            fplus=self.fplus,
            f=self.f,
            overrides=pinned,
            events_in_order=self.events_in_order,
        )


def make_space(
    ground: "GroundSet | Iterable[str]",
    weights: Mapping[str, object],
    fplus: "Family | Iterable[Event] | None" = None,
    *,
    check: bool = True,
) -> ExtendedSpace:
    """Validate inputs and build a space; the one public constructor.

    ``fplus`` defaults to the full powerset of the positive universe.  With
    ``check=False`` the weight-sign, weight-sum, and algebra checks are
    skipped (schema consistency is still required); that path exists only to
    build broken spaces for validator fault-injection tests.
    """
    if not isinstance(ground, GroundSet):
        ground = GroundSet(tuple(ground))

    converted: dict[str, Fraction] = {}
    for label, value in weights.items():
        converted[label] = as_fraction(value, where=f"weight for {label!r}")
    missing = [l for l in ground.labels if l not in converted]
    if missing:
        raise SchemaError("missing weight(s) for label(s): " + ", ".join(missing))
    unknown = sorted(set(converted) - set(ground.labels))
    if unknown:
        raise SchemaError("weight(s) for unknown label(s): " + ", ".join(unknown))

    if check:
        for label in ground.labels:
            if converted[label] < 0:
                raise NonNegativityError(
                    f"negative weight for {label!r}: {converted[label]}"
                )
        total = sum(converted.values(), Fraction(0))
        if total != 1:
            raise NormalizationError(f"weights sum to {total}, expected exactly 1")

    if fplus is None:
        fplus = powerset_family(ground.omega_plus)
    elif not isinstance(fplus, Family):
        fplus = Family(frozenset(fplus), "positive-algebra")

    omega = ground.omega_plus
    for member in fplus:
        if not member.is_positive or not member.issubset(omega):
            raise AlgebraError(
                f"family member {member.text()!r} is not a subset of the "
                f"positive universe {omega.text()!r}"
            )
    if check:
        ok, _unit = is_set_algebra(fplus)
        if not ok:
            raise AlgebraError("positive family is not a set algebra")
        if omega not in fplus:
            raise AlgebraError(
                "positive family must contain the full positive event "
                f"{omega.text()!r}"
            )

    composed = compose_family(fplus)
    ordered = tuple(composed)
    return ExtendedSpace(
        ground=ground,
        weights=converted,
        fplus=fplus,
        f=composed,
        events_in_order=ordered,
    )


def positive_family_is_field(space: ExtendedSpace) -> bool:
    """Whether the positive family is complement-closed over its universe.

    For finite families of subsets of the positive universe that contain the
    universe, algebra and field coincide (rings are difference-closed); this
    reports the fact explicitly rather than assuming it.
    """
    return is_set_field(space.fplus, space.omega_plus)
