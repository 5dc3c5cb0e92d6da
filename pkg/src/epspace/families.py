"""Finite families of events: set rings, set algebras, set fields.

A *set ring* is a family closed under intersection and symmetric difference
(equivalently: under union, intersection, and difference).  A *set algebra*
is a ring with a unit member ``E`` satisfying ``A & E == A`` for every
member; a *set field* is an algebra over a universe that is also closed
under complement within that universe.

The ring/algebra/field predicates apply to families whose members are
sign-homogeneous (each member entirely positive or entirely negative).
:func:`mirror_family` negates a positive family elementwise, and
:func:`compose_family` pairs each positive member with each disjoint
negative mirror member, producing the measurable events of a signed space:
``A | -B`` for disjoint ``A, B`` in the positive family.  For the full
powerset over ``n`` labels the composition has exactly ``3**n`` members
(each label independently present-positive, present-negative, or absent).

All checks are exhaustive over the explicit finite families; that is the
point of this module, so no lazy representations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

from .errors import SchemaError
from .events import (
    Atom,
    Event,
    LABEL_PATTERN,
    canonical_key,
    plain_symmetric_difference,
    plain_union,
)

__all__ = [
    "GroundSet",
    "Family",
    "is_set_ring",
    "is_set_algebra",
    "is_set_field",
    "generate_algebra",
    "mirror_family",
    "compose_family",
    "powerset_family",
]


@dataclass(frozen=True)
class GroundSet:
    """The ordered positive labels; the negative half is its implicit mirror."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise SchemaError("ground set must contain at least one label")
        if len(set(labels)) != len(labels):
            raise SchemaError("ground set labels must be pairwise distinct")
        for label in labels:
            if not LABEL_PATTERN.match(label):
                raise SchemaError(f"bad ground label {label!r}")

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def omega_plus(self) -> Event:
        return Event(Atom(label) for label in self.labels)

    @property
    def omega_minus(self) -> Event:
        return Event(Atom(label, False) for label in self.labels)


@dataclass(frozen=True)
class Family:
    """An immutable finite collection of events, iterated in canonical order.

    ``kind`` is descriptive metadata ("plain", "positive-algebra",
    "negative-mirror", "composed") and does not take part in equality.
    """

    events: frozenset
    kind: str = field(default="plain", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", frozenset(self.events))

    @classmethod
    def of(cls, *events: Event, kind: str = "plain") -> "Family":
        return cls(frozenset(events), kind)

    def __iter__(self) -> Iterator[Event]:
        return iter(sorted(self.events, key=canonical_key))

    def __len__(self) -> int:
        return len(self.events)

    def __contains__(self, event: Event) -> bool:
        return event in self.events

    def issubset(self, other: "Family") -> bool:
        return self.events <= other.events

    def texts(self) -> tuple[str, ...]:
        """Member texts in canonical order; the serialized form used in docs and tests."""
        return tuple(event.text() for event in self)

    def __repr__(self) -> str:
        return f"Family([{', '.join(self.texts())}], kind={self.kind!r})"


def _require_homogeneous(family: Family) -> None:
    for member in family:
        if member.positive_labels and member.negative_labels:
            raise ValueError(
                f"mixed-sign member {member.text()!r}: ring/algebra predicates "
                "apply to sign-homogeneous families"
            )


def is_set_ring(family: Family) -> bool:
    """True iff the family is closed under intersection and symmetric difference.

    For finite families this is equivalent to closure under union,
    intersection, and difference.  Members must be sign-homogeneous.
    """
    _require_homogeneous(family)
    members = family.events
    ordered = tuple(family)
    for a in ordered:
        for b in ordered:
            if (a & b) not in members:
                return False
            delta = plain_symmetric_difference(a, b)
            if delta is None or delta not in members:
                return False
    return True


def is_set_algebra(family: Family) -> tuple[bool, Event | None]:
    """Ring-with-unit check; returns ``(ok, unit)``.

    The only possible unit is the union of all members (a unit must contain
    every member and itself be a member), so that candidate is computed and
    then verified explicitly.
    """
    if not is_set_ring(family) or not family.events:
        return (False, None)
    candidate = reduce(
        lambda acc, e: None if acc is None else plain_union(acc, e),
        family,
        Event(),
    )
    if candidate is None or candidate not in family.events:
        return (False, None)
    for member in family:
        if (member & candidate) != member:
            return (False, None)
    return (True, candidate)


def is_set_field(family: Family, universe: Event) -> bool:
    """True iff the family is a set algebra with unit ``universe`` closed under
    complement relative to ``universe``."""
    for member in family:
        if not member.issubset(universe):
            raise ValueError(
                f"member {member.text()!r} is not a subset of the universe "
                f"{universe.text()!r}"
            )
    ok, unit = is_set_algebra(family)
    if not ok or unit != universe:
        return False
    return all((universe - member) in family.events for member in family)


def generate_algebra(generators: "Iterable[Event] | Family", universe: Event) -> Family:
    """Least family containing the generators and the universe, closed under
    union, intersection, and difference.

    Built from the partition the generators induce on the universe: two atoms
    fall in the same block iff they belong to exactly the same generators,
    and the closure is precisely the set of unions of blocks.  Since the
    universe is included, the result is a set field over it.
    """
    gens = sorted(generators, key=canonical_key)
    for g in gens:
        if not g.issubset(universe):
            raise ValueError(
                f"generator {g.text()!r} is not a subset of the universe "
                f"{universe.text()!r}"
            )
    atoms = tuple(universe)
    blocks: dict[tuple[bool, ...], list[Atom]] = {}
    for atom in atoms:
        signature = tuple(atom in g for g in gens)
        blocks.setdefault(signature, []).append(atom)
    block_list = list(blocks.values())
    members = set()
    for r in range(len(block_list) + 1):
        for chosen in combinations(range(len(block_list)), r):
            picked = [atom for i in chosen for atom in block_list[i]]
            members.add(Event(picked))
    kind = "positive-algebra" if universe.is_positive else "plain"
    return Family(frozenset(members), kind)


def mirror_family(fplus: Family) -> Family:
    """Negate every member; mirrors algebra/field structure (and is an involution)."""
    return Family(frozenset(-member for member in fplus.events), "negative-mirror")


def compose_family(fplus: Family) -> Family:
    """All events ``A | -B`` with ``A``, ``B`` disjoint members of the positive family.

    Disjointness is exactly the constraint that keeps one label from carrying
    both signs, so every composed pair is a valid event.
    """
    for member in fplus:
        if not member.is_positive:
            raise ValueError(
                f"compose_family expects a positive family; got member "
                f"{member.text()!r}"
            )
    members = set()
    for a in fplus.events:
        apos = a.positive_labels
        for b in fplus.events:
            bpos = b.positive_labels
            if apos.isdisjoint(bpos):
                members.add(Event._raw(apos, bpos))
    return Family(frozenset(members), "composed")


def powerset_family(universe: "Event | GroundSet") -> Family:
    """All subsets of the universe event."""
    if isinstance(universe, GroundSet):
        universe = universe.omega_plus
    atoms = tuple(universe)
    members = set()
    for r in range(len(atoms) + 1):
        for chosen in combinations(atoms, r):
            members.add(Event(chosen))
    kind = "positive-algebra" if universe.is_positive else "plain"
    return Family(frozenset(members), kind)
