"""Building a space and evaluating exact, negative-capable probabilities.

Run:  python demos/03_extended_probability.py
"""

from epspace import Event, make_space

print("=" * 72)
print("A three-outcome space")
print("=" * 72)

space = make_space(("a", "b", "c"), {"a": "1/2", "b": "3/10", "c": "1/5"})
print("weights: a=1/2  b=3/10  c=1/5   (exact rationals, sum forced to 1)")
print(f"measurable events: {len(space.f)} (= 3^3)")

print("\nanchor values:")
print(f"  P(a,b,c)     = {space.probability(space.omega_plus)}")
print(f"  P(-a,-b,-c)  = {space.probability(space.omega_minus)}")
print(f"  P({{}})        = {space.probability(Event())}")

print("\nmixed events subtract the weights of their anti-atoms:")
for text in ("a", "-a", "a,-b", "-a,b,c", "a,b,-c"):
    value = space.probability(Event(text))
    print(f"  P({text:7s}) = {str(value):6s} (= {float(value)})")

print("\ndrafts annihilate before evaluating:")
for text in ("a,-a", "a,-a,b", "{}"):
    print(f"  P({text:7s}) = {space.draft_probability(text)}")

print()
print("=" * 72)
print("Negation and complement both flip the sign of P")
print("=" * 72)
event = Event("a,-b")
comp = space.complement(event)
print(f"event {event}:  P = {space.probability(event)}")
print(f"  negation   {-event}:  P = {space.probability(-event)}")
print(f"  complement {comp}:  P = {space.probability(comp)}")

print()
print("=" * 72)
print("The restriction to positive events is an ordinary probability")
print("=" * 72)
for member in list(space.fplus)[:6]:
    print(f"  P({member.text():7s}) = {space.probability(member)}")
print("  ... nonnegative, normalized, additive: the classical axioms hold")
print("  (see demos/04_validation.py for the executable verification).")
