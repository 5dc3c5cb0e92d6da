"""Set rings, algebras, fields; closure generation; mirroring; composition.

Run:  python demos/02_set_structures.py
"""

from epspace import (
    Event,
    Family,
    compose_family,
    generate_algebra,
    is_set_algebra,
    is_set_field,
    is_set_ring,
    mirror_family,
    powerset_family,
)

print("=" * 72)
print("Ring / algebra / field predicates")
print("=" * 72)

powerset = powerset_family(Event("a,b"))
print(f"powerset of {{a,b}}: {powerset.texts()}")
print(f"  is a set ring:    {is_set_ring(powerset)}")
ok, unit = is_set_algebra(powerset)
print(f"  is a set algebra: {ok} with unit {unit}")
print(f"  is a set field:   {is_set_field(powerset, Event('a,b'))}")

broken = Family.of(Event("a"), Event("b"))
print(f"\n{{{{a}},{{b}}}} is a ring?  {is_set_ring(broken)}   (A \\ A = {{}} is missing)")

print()
print("=" * 72)
print("Generating the least field over a universe")
print("=" * 72)

universe = Event("a,b,c")
for gens in ([], [Event("a")], [Event("a"), Event("b")]):
    produced = generate_algebra(gens, universe)
    names = [g.text() for g in gens] or ["(none)"]
    print(f"generators {names}: {len(produced)} members -> {produced.texts()}")

print()
print("=" * 72)
print("Mirroring and composing")
print("=" * 72)

fplus = powerset_family(Event("a,b"))
fminus = mirror_family(fplus)
print(f"mirror of the powerset:  {fminus.texts()}")
print(f"mirror twice gives it back: {mirror_family(fminus) == fplus}")

composed = compose_family(fplus)
print(f"\ncomposed family ({len(composed)} members): {composed.texts()}")
print("Each member pairs a positive part with a disjoint negative part;")
print("every label is independently present-positive, present-negative,")
print("or absent, so the powerset composition has 3^n members:")
for n in range(1, 7):
    labels = ",".join(f"w{i + 1}" for i in range(n))
    size = len(compose_family(powerset_family(Event(labels))))
    print(f"  n={n}: {size} == 3^{n} = {3 ** n}")
