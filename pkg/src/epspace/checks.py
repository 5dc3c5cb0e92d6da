"""Executable verification: axiom validator, classical restriction, result suite.

Three report producers, all returning a :class:`ValidationReport` of
pass/fail entries with concrete counterexamples:

* :func:`validate_axioms` -- the space axioms EP1..EP10 plus the restricted
  additivity axiom EP5p.  Exhaustive by default; pass ``trials``/``seed`` to
  sample the quantifier-heavy checks (EP5, EP6, EP7, EP10) on larger spaces.
* :func:`check_kolmogorov_restriction` -- K1 (non-negativity), K2
  (normalization), K3 (finite additivity) for the restriction of the measure
  to the positive family, which is an ordinary probability space.
* :func:`run_theorem_suite` -- every catalogued algebraic/measure identity
  (ids C1..C5, L1..L11, P1..P11b, T1..T7), checked exhaustively over the
  space's measurable family.  Quantified checks enumerate all members,
  pairs, or triples, so the suite is meant for small spaces (up to four or
  five atoms); duplicate-numbered results are split as T4a/T4b and
  P11a/P11b.

Failures are report entries, never exceptions.  Enumeration follows the
canonical event order and stops at the first violation, so a reported
counterexample is the least one in that order and reports are byte-stable
across runs.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .events import (
    Atom,
    Event,
    annihilated_equals,
    annihilating_union,
    intersection,
    normalize,
    plain_union,
)
from .families import Family, is_set_algebra, is_set_field, mirror_family, compose_family
from .measure import ExtendedSpace

__all__ = [
    "CheckEntry",
    "ValidationReport",
    "validate_axioms",
    "check_kolmogorov_restriction",
    "run_theorem_suite",
    "AXIOM_IDS",
    "KOLMOGOROV_IDS",
    "SUITE_CATALOG",
    "suite_ids",
]


# ---------------------------------------------------------------------------
# Report plumbing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckEntry:
    """One verdict: check id, pass flag, optional payload.

    ``counterexample`` is an ordered tuple of ``(key, value)`` text pairs.  A
    failed entry always carries one; a passing entry may too (the
    distributivity check reports the witness it found).
    """

    check_id: str
    passed: bool
    counterexample: tuple = ()
    note: str = ""

    def line(self) -> str:
        parts = [self.check_id, "PASS" if self.passed else "FAIL"]
        if self.counterexample:
            parts.append(" ".join(f"{k}={v}" for k, v in self.counterexample))
        if self.note:
            parts.append(f"({self.note})")
        return " ".join(parts)

    def as_json(self) -> dict:
        payload = {
            "checkId": self.check_id,
            "passed": self.passed,
            "counterexample": dict(self.counterexample) if self.counterexample else None,
        }
        if self.note:
            payload["note"] = self.note
        return payload


@dataclass(frozen=True)
class ValidationReport:
    """An ordered bundle of check entries."""

    entries: tuple

    @property
    def ok(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def __iter__(self) -> Iterator[CheckEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, check_id: str) -> CheckEntry:
        for candidate in self.entries:
            if candidate.check_id == check_id:
                return candidate
        raise KeyError(check_id)

    def failures(self) -> tuple:
        return tuple(entry for entry in self.entries if not entry.passed)

    def lines(self) -> list[str]:
        return [entry.line() for entry in self.entries]

    def text(self) -> str:
        return "\n".join(self.lines())

    def as_json(self) -> str:
        return json.dumps([entry.as_json() for entry in self.entries], indent=2)


def _fmt(value) -> str:
    if isinstance(value, Event):
        return value.text()
    if isinstance(value, (Fraction, int)):
        return str(value)
    return str(value)


def _cx(**pairs) -> tuple:
    return tuple((key, _fmt(value)) for key, value in pairs.items())


_ID_RE = re.compile(r"([A-Z]+)(\d+)([a-z]*)\Z")


def _id_key(check_id: str):
    match = _ID_RE.match(check_id)
    if not match:
        return (check_id, 0, "")
    return (match.group(1), int(match.group(2)), match.group(3))


# ---------------------------------------------------------------------------
# Shared enumeration helpers
# ---------------------------------------------------------------------------


def _splits(event: Event):
    """All ordered two-part partitions ``(A, B)`` of an event's atoms."""
    atoms = tuple(event)
    n = len(atoms)
    for mask in range(1 << n):
        a_pos, a_neg, b_pos, b_neg = [], [], [], []
        for i, atom in enumerate(atoms):
            if mask >> i & 1:
                (a_pos if atom.positive else a_neg).append(atom.label)
            else:
                (b_pos if atom.positive else b_neg).append(atom.label)
        yield (
            Event._raw(frozenset(a_pos), frozenset(a_neg)),
            Event._raw(frozenset(b_pos), frozenset(b_neg)),
        )


def _pmap(space: ExtendedSpace) -> dict:
    return {event: space.probability(event) for event in space.events_in_order}


def _additivity(check_id: str, members: Family, ordered, pmap: dict) -> CheckEntry:
    """P(A) + P(B) == P(A | B) over every disjoint pair with union in the family.

    Every such pair partitions its union, so enumerating two-part splits of
    each member is exhaustive.
    """
    universe = members.events
    for union_event in ordered:
        target = pmap[union_event]
        for a, b in _splits(union_event):
            if a in universe and b in universe:
                total = pmap[a] + pmap[b]
                if total != target:
                    return CheckEntry(
                        check_id,
                        False,
                        _cx(A=a, B=b, union=union_event, lhs=total, rhs=target),
                    )
    return CheckEntry(check_id, True)


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

AXIOM_IDS = ("EP1", "EP2", "EP3", "EP4", "EP5", "EP5p", "EP6", "EP7", "EP8", "EP9", "EP10")


def _check_ep1(space: ExtendedSpace) -> CheckEntry:
    for label in space.ground.labels:
        atom = Atom(label)
        anti = -atom
        if -anti != atom or anti.positive or not atom.positive:
            return CheckEntry("EP1", False, _cx(label=label))
    if -space.omega_plus != space.omega_minus or -space.omega_minus != space.omega_plus:
        return CheckEntry("EP1", False, _cx(reason="half-space negation mismatch"))
    return CheckEntry("EP1", True)


def _check_ep2(space: ExtendedSpace) -> CheckEntry:
    ok, unit = is_set_algebra(space.fplus)
    if not ok:
        return CheckEntry("EP2", False, _cx(reason="positive family is not a set algebra"))
    if space.omega_plus not in space.fplus:
        return CheckEntry(
            "EP2", False, _cx(reason="full positive event missing", expected=space.omega_plus)
        )
    field = is_set_field(space.fplus, space.omega_plus)
    return CheckEntry("EP2", True, note=f"unit={unit.text()} field={field}")


def _check_ep3(space: ExtendedSpace, pmap: dict) -> CheckEntry:
    value = pmap[space.omega_plus]
    if value != 1:
        return CheckEntry("EP3", False, _cx(event=space.omega_plus, value=value, expected=1))
    return CheckEntry("EP3", True)


def _check_ep4(space: ExtendedSpace) -> CheckEntry:
    recomposed = compose_family(space.fplus)
    if recomposed.events != space.f.events:
        extra = sorted(space.f.events ^ recomposed.events, key=lambda e: e.text())
        return CheckEntry(
            "EP4", False, _cx(reason="family is not the disjoint composition", near=extra[0])
        )
    mirror = mirror_family(space.fplus)
    for member in space.events_in_order:
        pos, neg = member.split()
        if pos not in space.fplus or neg not in mirror:
            return CheckEntry("EP4", False, _cx(event=member, reason="part outside its family"))
        if not pos.isdisjoint(-neg):
            return CheckEntry("EP4", False, _cx(event=member, reason="sign clash between parts"))
    return CheckEntry("EP4", True)


def _check_ep5(space: ExtendedSpace, pmap: dict, trials, seed) -> CheckEntry:
    if trials is None:
        return _additivity("EP5", space.f, space.events_in_order, pmap)
    rng = Random(seed)
    events = space.events_in_order
    universe = space.f.events
    for _ in range(trials):
        union_event = events[rng.randrange(len(events))]
        atoms = tuple(union_event)
        mask = rng.getrandbits(len(atoms)) if atoms else 0
        a_atoms = [atom for i, atom in enumerate(atoms) if mask >> i & 1]
        b_atoms = [atom for i, atom in enumerate(atoms) if not mask >> i & 1]
        a, b = Event(a_atoms), Event(b_atoms)
        if a in universe and b in universe:
            total = pmap[a] + pmap[b]
            if total != pmap[union_event]:
                return CheckEntry(
                    "EP5",
                    False,
                    _cx(A=a, B=b, union=union_event, lhs=total, rhs=pmap[union_event]),
                    note=f"sampled trials={trials} seed={seed}",
                )
    return CheckEntry("EP5", True, note=f"sampled trials={trials} seed={seed}")


def _check_ep5p(space: ExtendedSpace, pmap: dict) -> CheckEntry:
    ordered = tuple(space.fplus)
    return _additivity("EP5p", space.fplus, ordered, pmap)


def _annihilation_insertions(space: ExtendedSpace, trials, seed):
    """Yield (event, label) probes; exhaustive or sampled.

    Only labels the event does not use: inserting a pair whose label is
    already resident would cancel the resident atom too (set semantics), so
    the invariance claim applies to fresh labels only.
    """
    if trials is None:
        for event in space.events_in_order:
            used = event.positive_labels | event.negative_labels
            for label in space.ground.labels:
                if label not in used:
                    yield event, label
        return
    rng = Random(seed ^ 0x5EED)
    events = space.events_in_order
    labels = space.ground.labels
    for _ in range(trials):
        event = events[rng.randrange(len(events))]
        used = event.positive_labels | event.negative_labels
        fresh = [label for label in labels if label not in used]
        if fresh:
            yield event, fresh[rng.randrange(len(fresh))]


def _check_ep6(space: ExtendedSpace, trials, seed) -> CheckEntry:
    note = "" if trials is None else f"sampled trials={trials} seed={seed}"
    for event, label in _annihilation_insertions(space, trials, seed):
        draft = tuple(event) + (Atom(label), Atom(label, False))
        if normalize(draft) != event:
            return CheckEntry("EP6", False, _cx(event=event, label=label), note=note)
    return CheckEntry("EP6", True, note=note)


def _check_ep7(space: ExtendedSpace, pmap: dict, trials, seed) -> CheckEntry:
    note = "" if trials is None else f"sampled trials={trials} seed={seed}"
    for event, label in _annihilation_insertions(space, trials, seed):
        draft = tuple(event) + (Atom(label), Atom(label, False))
        value = space.draft_probability(draft)
        if value != pmap[event]:
            return CheckEntry(
                "EP7", False, _cx(event=event, label=label, lhs=value, rhs=pmap[event]), note=note
            )
    return CheckEntry("EP7", True, note=note)


def _check_ep8(space: ExtendedSpace, pmap: dict) -> CheckEntry:
    for member in space.fplus:
        if pmap[member] < 0:
            return CheckEntry("EP8", False, _cx(event=member, value=pmap[member]))
    return CheckEntry("EP8", True)


def _check_ep9(space: ExtendedSpace, pmap: dict) -> CheckEntry:
    note = "finitely vacuous: every strictly decreasing event chain is finite"
    value = pmap[Event()]
    if value != 0:
        return CheckEntry("EP9", False, _cx(event=Event(), value=value), note=note)
    return CheckEntry("EP9", True, note=note)


def _check_ep10(space: ExtendedSpace, pmap: dict, trials, seed) -> CheckEntry:
    note = "" if trials is None else f"sampled trials={trials} seed={seed}"
    if trials is None:
        probes = space.events_in_order
    else:
        rng = Random(seed ^ 0xDEC0)
        events = space.events_in_order
        probes = [events[rng.randrange(len(events))] for _ in range(trials)]
    for event in probes:
        pos, neg = event.split()
        total = pmap[pos] + pmap[neg]
        if total != pmap[event]:
            return CheckEntry("EP10", False, _cx(event=event, lhs=total, rhs=pmap[event]), note=note)
    return CheckEntry("EP10", True, note=note)


def validate_axioms(space: ExtendedSpace, *, trials: "int | None" = None, seed: int = 0) -> ValidationReport:
    """Check every axiom; one entry per id in ``AXIOM_IDS``.

    ``trials=None`` means exhaustive.  With a trial count, the checks that
    quantify over the full measurable family (EP5, EP6, EP7, EP10) draw that
    many seeded probes instead; the structural and positive-family checks
    stay exhaustive either way.
    """
    pmap = _pmap(space)
    entries = (
        _check_ep1(space),
        _check_ep2(space),
        _check_ep3(space, pmap),
        _check_ep4(space),
        _check_ep5(space, pmap, trials, seed),
        _check_ep5p(space, pmap),
        _check_ep6(space, trials, seed),
        _check_ep7(space, pmap, trials, seed),
        _check_ep8(space, pmap),
        _check_ep9(space, pmap),
        _check_ep10(space, pmap, trials, seed),
    )
    return ValidationReport(tuple(sorted(entries, key=lambda e: _id_key(e.check_id))))


# ---------------------------------------------------------------------------
# Classical restriction
# ---------------------------------------------------------------------------

KOLMOGOROV_IDS = ("K1", "K2", "K3")


def check_kolmogorov_restriction(space: ExtendedSpace) -> ValidationReport:
    """K1-K3 for the measure restricted to the positive family.

    The restriction of any valid space is an ordinary probability space, so
    all three must pass; failures indicate an injected fault.
    """
    pmap = _pmap(space)
    entries = []

    k1 = CheckEntry("K1", True)
    for member in space.fplus:
        if pmap[member] < 0:
            k1 = CheckEntry("K1", False, _cx(event=member, value=pmap[member]))
            break
    entries.append(k1)

    value = pmap[space.omega_plus]
    if value != 1:
        entries.append(CheckEntry("K2", False, _cx(event=space.omega_plus, value=value, expected=1)))
    else:
        entries.append(CheckEntry("K2", True))

    k3 = _additivity("K3", space.fplus, tuple(space.fplus), pmap)
    entries.append(CheckEntry("K3", k3.passed, k3.counterexample))

    return ValidationReport(tuple(entries))


# ---------------------------------------------------------------------------
# Result suite
# ---------------------------------------------------------------------------


def _suite_c1(space, pmap):
    omega_plus, omega_minus = space.omega_plus, space.omega_minus
    for label in space.ground.labels:
        if (Atom(label) in omega_plus) != (Atom(label, False) in omega_minus):
            return CheckEntry("C1", False, _cx(label=label))
    return CheckEntry("C1", True)


def _suite_c2(space, pmap):
    for label in space.ground.labels:
        for atom in (Atom(label), Atom(label, False)):
            if -(-atom) != atom:
                return CheckEntry("C2", False, _cx(atom=atom.text))
    return CheckEntry("C2", True)


def _suite_c3(space, pmap):
    for event in space.events_in_order:
        if -(-event) != event:
            return CheckEntry("C3", False, _cx(event=event))
    return CheckEntry("C3", True)


def _suite_c4(space, pmap):
    mirror = mirror_family(space.fplus)
    shared = space.fplus.events & mirror.events
    if shared != {Event()}:
        culprit = sorted(shared - {Event()}, key=lambda e: e.text())
        extra = culprit[0] if culprit else Event()
        return CheckEntry("C4", False, _cx(shared=extra))
    return CheckEntry("C4", True, note="only shared member is the empty event")


def _suite_c5(space, pmap):
    for event in space.events_in_order:
        if pmap[event] > 1:
            return CheckEntry("C5", False, _cx(event=event, value=pmap[event]))
    return CheckEntry("C5", True)


def _suite_l1(space, pmap):
    if -space.omega_plus != space.omega_minus:
        return CheckEntry("L1", False, _cx(side="positive"))
    if -space.omega_minus != space.omega_plus:
        return CheckEntry("L1", False, _cx(side="negative"))
    return CheckEntry("L1", True)


def _suite_l2(space, pmap):
    for label in space.ground.labels:
        for atom in (Atom(label), Atom(label, False)):
            if -atom == atom:
                return CheckEntry("L2", False, _cx(atom=atom.text))
    return CheckEntry("L2", True)


def _suite_l3(space, pmap):
    empty = Event()
    for event in space.events_in_order:
        if annihilating_union(event, -event) != empty:
            return CheckEntry("L3", False, _cx(event=event))
        if not annihilated_equals(tuple(event) + tuple(-event), empty):
            return CheckEntry("L3", False, _cx(event=event, reason="plain union draft"))
    return CheckEntry("L3", True)


def _suite_l4(space, pmap):
    # Unrestricted associativity is inconsistent with idempotence plus
    # annihilation: ({a}+{a})+{-a} = {} but {a}+({a}+{-a}) = {a}.  The law
    # holds whenever no label occurs in all three operands, so that is the
    # checked statement; the first refutation of the unrestricted form is
    # reported in the note.
    events = space.events_in_order
    empty = Event()
    for x in events:
        if x + x != x:
            return CheckEntry("L4", False, _cx(law="idempotent", X=x))
        if x + empty != x:
            return CheckEntry("L4", False, _cx(law="unit", X=x))
    for x in events:
        for y in events:
            if x + y != y + x:
                return CheckEntry("L4", False, _cx(law="commutative", X=x, Y=y))
    positives = [e for e in events if e.is_positive]
    negatives = [e for e in events if e.is_negative]
    for pool in (positives, negatives):
        for x in pool:
            for y in pool:
                if x + y != plain_union(x, y):
                    return CheckEntry("L4", False, _cx(law="same-sign-union", X=x, Y=y))
    support = {e: e.positive_labels | e.negative_labels for e in events}
    refutation = None
    for x in events:
        for y in events:
            xy = x + y
            shared_xy = support[x] & support[y]
            for z in events:
                left = xy + z
                right = x + (y + z)
                if shared_xy and shared_xy & support[z]:
                    if refutation is None and left != right:
                        refutation = (x, y, z)
                    continue
                if left != right:
                    return CheckEntry("L4", False, _cx(law="associative", X=x, Y=y, Z=z))
    note = "associativity checked over triples with no label in all three operands"
    if refutation is not None:
        rx, ry, rz = refutation
        note += (
            "; unrestricted form refuted by "
            f"X={rx.text()} Y={ry.text()} Z={rz.text()}"
        )
    return CheckEntry("L4", True, note=note)


def _suite_l5(space, pmap):
    events = space.events_in_order
    witness_a = None
    for x in events:
        for y in events:
            xy = x + y
            for z in events:
                lhs = z & xy
                rhs = (z & x) + (z & y)
                if lhs != rhs:
                    witness_a = (x, y, z, lhs, rhs)
                    break
            if witness_a:
                break
        if witness_a:
            break
    witness_b = None
    for x in events:
        for y in events:
            for z in events:
                if x + (y & z) != (x & y) + (x & z):
                    witness_b = (x, y, z)
                    break
            if witness_b:
                break
        if witness_b:
            break
    if witness_a is None or witness_b is None:
        return CheckEntry(
            "L5", False, _cx(reason="no non-distributivity witness found")
        )
    x, y, z, lhs, rhs = witness_a
    bx, by, bz = witness_b
    return CheckEntry(
        "L5",
        True,
        _cx(X=x, Y=y, Z=z, lhs=lhs, rhs=rhs),
        note=f"second form witness X={bx.text()} Y={by.text()} Z={bz.text()}",
    )


def _suite_l6(space, pmap):
    for a in space.events_in_order:
        ap, an = a.split()
        for b in space.events_in_order:
            bp, bn = b.split()
            if (a & b) != (ap & bp) + (an & bn):
                return CheckEntry("L6", False, _cx(A=a, B=b))
    return CheckEntry("L6", True)


def _suite_l7(space, pmap):
    for a in space.events_in_order:
        ap, an = a.split()
        for b in space.events_in_order:
            bp, bn = b.split()
            if (a - b) != (ap - bp) + (an - bn):
                return CheckEntry("L7", False, _cx(A=a, B=b))
    return CheckEntry("L7", True)


def _suite_l8(space, pmap):
    for event in space.events_in_order:
        pos, neg = event.split()
        if pos + neg != event or plain_union(pos, neg) != event:
            return CheckEntry("L8", False, _cx(event=event))
    return CheckEntry("L8", True)


def _suite_l9(space, pmap):
    for a in space.events_in_order:
        ap, an = a.split()
        for b in space.events_in_order:
            bp, bn = b.split()
            if a + b != (ap + bp) + (an + bn):
                return CheckEntry("L9", False, _cx(A=a, B=b))
    return CheckEntry("L9", True)


def _suite_l10(space, pmap):
    value = pmap[Event()]
    if value != 0:
        return CheckEntry("L10", False, _cx(value=value))
    return CheckEntry("L10", True)


def _suite_l11(space, pmap):
    for event in space.events_in_order:
        pos, neg = event.split()
        if pos & neg != Event():
            return CheckEntry("L11", False, _cx(event=event))
    return CheckEntry("L11", True)


def _suite_p1(space, pmap):
    omega_plus, omega_minus = space.omega_plus, space.omega_minus
    if len(omega_plus) != len(omega_minus):
        return CheckEntry("P1", False, _cx(positive=len(omega_plus), negative=len(omega_minus)))
    negated = {-atom for atom in omega_plus} | {-atom for atom in omega_minus}
    if len(negated) != len(omega_plus) + len(omega_minus):
        return CheckEntry("P1", False, _cx(reason="negation is not injective"))
    return CheckEntry("P1", True)


def _suite_p2(space, pmap):
    if intersection(space.omega_plus, space.omega_minus) != Event():
        return CheckEntry("P2", False, _cx(reason="half-spaces intersect"))
    return CheckEntry("P2", True)


def _suite_p3(space, pmap):
    mirror = mirror_family(space.fplus)
    if not space.fplus.events <= space.f.events:
        return CheckEntry("P3", False, _cx(reason="positive family escapes the composition"))
    if not mirror.events <= space.f.events:
        return CheckEntry("P3", False, _cx(reason="mirror family escapes the composition"))
    for event in space.events_in_order:
        pos, neg = event.split()
        if pos not in space.fplus or neg not in mirror:
            return CheckEntry("P3", False, _cx(event=event, reason="part outside its family"))
    return CheckEntry("P3", True)


def _suite_p4(space, pmap):
    omega_plus, omega_minus = space.omega_plus, space.omega_minus
    for event in space.events_in_order:
        if event.issubset(omega_plus) != (-event).issubset(omega_minus):
            return CheckEntry("P4", False, _cx(event=event))
    return CheckEntry("P4", True)


def _suite_p5(space, pmap):
    mirror = mirror_family(space.fplus)
    negative_members = {event for event in space.f.events if event.is_negative}
    if negative_members != mirror.events:
        return CheckEntry("P5", False, _cx(reason="negative-supported members differ from mirror"))
    restricted = {event.negative_part for event in space.f.events}
    if restricted != mirror.events:
        return CheckEntry("P5", False, _cx(reason="negative restrictions differ from mirror"))
    return CheckEntry("P5", True)


def _suite_p6(space, pmap):
    for x in space.events_in_order:
        for y in space.events_in_order:
            joined = x + y
            if joined not in pmap:
                return CheckEntry("P6", False, _cx(X=x, Y=y, reason="union not measurable"))
            draft_value = space.draft_probability(tuple(x) + tuple(y))
            if pmap[joined] != draft_value:
                return CheckEntry("P6", False, _cx(X=x, Y=y, lhs=pmap[joined], rhs=draft_value))
    return CheckEntry("P6", True)


def _suite_p7(space, pmap):
    for x in space.events_in_order:
        for y in space.events_in_order:
            if (x & -y) != -((-x) & y):
                return CheckEntry("P7", False, _cx(X=x, Y=y))
    return CheckEntry("P7", True)


def _suite_p8(space, pmap):
    for event in space.events_in_order:
        if pmap[event] != -pmap[-event]:
            return CheckEntry(
                "P8", False, _cx(event=event, lhs=pmap[event], rhs=-pmap[-event])
            )
    return CheckEntry("P8", True)


def _suite_p9(space, pmap):
    draft = tuple(space.omega_plus) + tuple(space.omega_minus)
    value = space.draft_probability(draft)
    if value != 0:
        return CheckEntry("P9", False, _cx(value=value))
    return CheckEntry("P9", True, note="everything plus anti-everything annihilates")


def _suite_p10(space, pmap):
    for event in space.events_in_order:
        comp = space.complement(event)
        if comp not in pmap:
            return CheckEntry("P10", False, _cx(event=event, reason="complement not measurable"))
        if pmap[event] != -pmap[comp]:
            return CheckEntry(
                "P10", False, _cx(event=event, complement=comp, lhs=pmap[event], rhs=-pmap[comp])
            )
    return CheckEntry("P10", True)


def _suite_p11a(space, pmap):
    for event in space.events_in_order:
        singles = [Event([atom]) for atom in event]
        if all(single in pmap for single in singles):
            total = sum((pmap[s] for s in singles), Fraction(0))
            if total != pmap[event]:
                return CheckEntry("P11a", False, _cx(event=event, lhs=total, rhs=pmap[event]))
    return CheckEntry("P11a", True)


def _suite_p11b(space, pmap):
    for event in space.events_in_order:
        if not -1 <= pmap[event] <= 1:
            return CheckEntry("P11b", False, _cx(event=event, value=pmap[event]))
    return CheckEntry("P11b", True)


def _suite_t1(space, pmap):
    mirror = mirror_family(space.fplus)
    plus_algebra, _ = is_set_algebra(space.fplus)
    minus_algebra, _ = is_set_algebra(mirror)
    if plus_algebra and not minus_algebra:
        return CheckEntry("T1", False, _cx(reason="mirror lost the algebra structure"))
    plus_field = is_set_field(space.fplus, space.omega_plus)
    minus_field = is_set_field(mirror, space.omega_minus)
    if plus_field and not minus_field:
        return CheckEntry("T1", False, _cx(reason="mirror lost the field structure"))
    return CheckEntry("T1", True, note=f"algebra={plus_algebra} field={plus_field}")


def _suite_t2(space, pmap):
    members = space.f.events
    for x in space.events_in_order:
        for y in space.events_in_order:
            if x + y not in members:
                return CheckEntry("T2", False, _cx(op="+", X=x, Y=y))
            if x & y not in members:
                return CheckEntry("T2", False, _cx(op="&", X=x, Y=y))
            if x - y not in members:
                return CheckEntry("T2", False, _cx(op="-", X=x, Y=y))
    if is_set_field(space.fplus, space.omega_plus):
        for x in space.events_in_order:
            if space.complement(x) not in members:
                return CheckEntry("T2", False, _cx(op="complement", X=x))
    return CheckEntry("T2", True)


def _suite_t3(space, pmap):
    for event in space.events_in_order:
        pos, neg = event.split()
        by_sum = pmap[pos] + pmap[neg]
        by_diff = pmap[pos] - pmap[-neg]
        if pmap[event] != by_sum or pmap[event] != by_diff:
            return CheckEntry("T3", False, _cx(event=event, sum=by_sum, diff=by_diff, value=pmap[event]))
    return CheckEntry("T3", True)


def _suite_t4a(space, pmap):
    omega_plus = space.omega_plus
    for event in space.events_in_order:
        pos, neg = event.split()
        comp = space.complement(event)
        if comp not in pmap:
            return CheckEntry("T4a", False, _cx(event=event, reason="complement not measurable"))
        pos_comp = omega_plus - pos
        anti_comp = omega_plus - (-neg)
        if pos_comp not in pmap or anti_comp not in pmap:
            return CheckEntry("T4a", False, _cx(event=event, reason="part complement not measurable"))
        if pmap[comp] != pmap[pos_comp] - pmap[anti_comp]:
            return CheckEntry(
                "T4a",
                False,
                _cx(event=event, lhs=pmap[comp], rhs=pmap[pos_comp] - pmap[anti_comp]),
            )
    return CheckEntry("T4a", True)


def _suite_t4b(space, pmap):
    positives = tuple(space.fplus)
    for a in positives:
        for b in positives:
            if a.issubset(b) and pmap[a] > pmap[b]:
                return CheckEntry("T4b", False, _cx(side="positive", A=a, B=b, pa=pmap[a], pb=pmap[b]))
    negatives = tuple(mirror_family(space.fplus))
    for h in negatives:
        for k in negatives:
            if h.issubset(k) and pmap[h] < pmap[k]:
                return CheckEntry("T4b", False, _cx(side="negative", H=h, K=k, ph=pmap[h], pk=pmap[k]))
    return CheckEntry("T4b", True)


def _suite_t5(space, pmap):
    note = "finite spaces: decreasing chains stabilize, continuity reduces to P({})=0"
    if pmap[Event()] != 0:
        return CheckEntry("T5", False, _cx(value=pmap[Event()]), note=note)
    for event in space.events_in_order:
        pos, neg = event.split()
        if pmap[event] != pmap[pos] + pmap[neg]:
            return CheckEntry("T5", False, _cx(event=event), note=note)
    return CheckEntry("T5", True, note=note)


def _suite_t6(space, pmap):
    ep5p = _check_ep5p(space, pmap)
    ep10 = _check_ep10(space, pmap, None, 0)
    ep5 = _check_ep5(space, pmap, None, 0)
    status = (
        f"EP5p={'PASS' if ep5p.passed else 'FAIL'} "
        f"EP10={'PASS' if ep10.passed else 'FAIL'} "
        f"EP5={'PASS' if ep5.passed else 'FAIL'}"
    )
    implication = not (ep5p.passed and ep10.passed and not ep5.passed)
    if not implication:
        return CheckEntry("T6", False, ep5.counterexample, note=status)
    return CheckEntry("T6", True, note=status)


def _suite_t7(space, pmap):
    restriction = check_kolmogorov_restriction(space)
    for entry in restriction:
        if not entry.passed:
            return CheckEntry("T7", False, entry.counterexample, note=f"{entry.check_id} failed")
    return CheckEntry("T7", True, note="restriction satisfies K1,K2,K3")


SUITE_CATALOG = (
    ("C1", "a label lies in the positive half-space iff its negation lies in the negative one"),
    ("C2", "atom negation is an involution"),
    ("C3", "event negation is an involution"),
    ("C4", "positive and mirror families share only the empty event"),
    ("C5", "P(A) <= 1 on the measurable family"),
    ("L1", "negating a full half-space yields the other"),
    ("L2", "no atom equals its own negation"),
    ("L3", "X + (-X) annihilates to the empty event"),
    ("L4", "annihilating union is idempotent, commutative, has unit {}, is plain union on one sign, and associates when no label spans all three operands"),
    ("L5", "intersection does not distribute over annihilating union (witness search)"),
    ("L6", "intersection decomposes through signed parts"),
    ("L7", "difference decomposes through signed parts"),
    ("L8", "an event is the (annihilating or plain) union of its signed parts"),
    ("L9", "annihilating union decomposes through signed parts"),
    ("L10", "P({}) = 0"),
    ("L11", "positive and negative parts are disjoint"),
    ("P1", "negation is a bijection; the half-spaces have equal size"),
    ("P2", "the half-spaces are disjoint"),
    ("P3", "positive and mirror families embed in the measurable family, parts stay inside"),
    ("P4", "an event is positive iff its negation is negative"),
    ("P5", "the mirror family is exactly the negative-supported measurable events"),
    ("P6", "P of an annihilating union equals P of the plain-union draft"),
    ("P7", "intersecting with a negation commutes with negating"),
    ("P8", "P(A) = -P(-A)"),
    ("P9", "P of everything plus anti-everything is 0"),
    ("P10", "P(A) = -P(complement(A))"),
    ("P11a", "P is additive over singleton members"),
    ("P11b", "-1 <= P(A) <= 1"),
    ("T1", "the mirror of a set algebra (field) is a set algebra (field)"),
    ("T2", "the measurable family is closed under +, &, -, and complement"),
    ("T3", "P(A) = P(A+) + P(A-) = P(A+) - P(-(A-))"),
    ("T4a", "P(complement(A)) decomposes through part complements"),
    ("T4b", "P is monotone on the positive family and antimonotone on the mirror"),
    ("T5", "continuity on the measurable family (finitely vacuous)"),
    ("T6", "positive additivity plus decomposition imply full additivity"),
    ("T7", "the restriction to the positive family satisfies K1-K3"),
)

_SUITE_FUNCS = {
    "C1": _suite_c1,
    "C2": _suite_c2,
    "C3": _suite_c3,
    "C4": _suite_c4,
    "C5": _suite_c5,
    "L1": _suite_l1,
    "L2": _suite_l2,
    "L3": _suite_l3,
    "L4": _suite_l4,
    "L5": _suite_l5,
    "L6": _suite_l6,
    "L7": _suite_l7,
    "L8": _suite_l8,
    "L9": _suite_l9,
    "L10": _suite_l10,
    "L11": _suite_l11,
    "P1": _suite_p1,
    "P2": _suite_p2,
    "P3": _suite_p3,
    "P4": _suite_p4,
    "P5": _suite_p5,
    "P6": _suite_p6,
    "P7": _suite_p7,
    "P8": _suite_p8,
    "P9": _suite_p9,
    "P10": _suite_p10,
    "P11a": _suite_p11a,
    "P11b": _suite_p11b,
    "T1": _suite_t1,
    "T2": _suite_t2,
    "T3": _suite_t3,
    "T4a": _suite_t4a,
    "T4b": _suite_t4b,
    "T5": _suite_t5,
    "T6": _suite_t6,
    "T7": _suite_t7,
}


def suite_ids() -> tuple:
    """All suite check ids in report order."""
    return tuple(check_id for check_id, _ in SUITE_CATALOG)


def run_theorem_suite(space: ExtendedSpace, ids: "Iterable[str] | None" = None) -> ValidationReport:
    """Run the catalogued identity checks (all of them, or a chosen subset).

    Exhaustive over the space's measurable family; intended for spaces of up
    to four or five atoms (the associativity check alone enumerates all
    member triples).
    """
    if ids is None:
        selected = [check_id for check_id, _ in SUITE_CATALOG]
    else:
        selected = list(ids)
        known = set(_SUITE_FUNCS)
        unknown = [check_id for check_id in selected if check_id not in known]
        if unknown:
            raise ValueError(f"unknown suite id(s): {', '.join(unknown)}")
    pmap = _pmap(space)
    entries = [_SUITE_FUNCS[check_id](space, pmap) for check_id in selected]
    entries.sort(key=lambda e: _id_key(e.check_id))
    return ValidationReport(tuple(entries))
