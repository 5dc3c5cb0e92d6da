"""The axiom validator, the classical restriction, and fault injection.

Run:  python demos/04_validation.py
"""

from epspace import (
    Event,
    check_kolmogorov_restriction,
    make_space,
    run_theorem_suite,
    validate_axioms,
)

space = make_space(("a", "b"), {"a": "1/2", "b": "1/2"})

print("=" * 72)
print("Axioms on a sound space")
print("=" * 72)
print(validate_axioms(space).text())

print()
print("=" * 72)
print("Classical restriction (positive family only)")
print("=" * 72)
print(check_kolmogorov_restriction(space).text())

print()
print("=" * 72)
print("Identity suite (36 catalogued results, exhaustive)")
print("=" * 72)
report = run_theorem_suite(space)
print(report.text())
print(f"\nall pass: {report.ok}")

print()
print("=" * 72)
print("Fault injection: the validator must notice sabotage")
print("=" * 72)

print("\n1. a negative atom weight (built with check=False):")
negative = make_space(("a", "b"), {"a": "3/2", "b": "-1/2"}, check=False)
for entry in validate_axioms(negative).failures():
    print(f"   {entry.line()}")
for entry in check_kolmogorov_restriction(negative).failures():
    print(f"   {entry.line()}")

print("\n2. pinning P({a}) to 2 via the override hook:")
broken = space.with_override(Event("a"), 2)
for entry in validate_axioms(broken).failures():
    print(f"   {entry.line()}")
