"""Signed atoms and events: negation, annihilation, and the event algebra.

Run:  python demos/01_signed_events.py
"""

from epspace import Atom, Event, annihilated_equals, normalize

print("=" * 72)
print("Atoms and events")
print("=" * 72)

a = Atom("a")
print(f"an atom and its anti-atom:        {a}  /  {-a}")
print(f"negation is an involution:        -(-a) == a  ->  {-(-a) == a}")

x = Event("a,-b,c")
print(f"\nan event:                         {x}")
print(f"its negation:                     {-x}")
pos, neg = x.split()
print(f"positive / negative parts:        {pos}  /  {neg}")

print("\nA well-formed event never carries both signs of one label:")
try:
    Event("a,-a")
except Exception as exc:
    print(f"  Event('a,-a') -> {type(exc).__name__}: {exc}")

print("\nDrafts may, and normalize cancels the pairs:")
draft = [Atom("a"), Atom("a", False), Atom("b")]
print(f"  normalize([a, -a, b]) = {normalize(draft)}")
print(f"  annihilated_equals('a,-a', '{{}}') = {annihilated_equals('a,-a', '{}')}")

print()
print("=" * 72)
print("Annihilating union:  X + Y")
print("=" * 72)

print(f"{Event('a')} + {Event('-a')} = {Event('a') + Event('-a')}   (total annihilation)")
print(f"{Event('a,-b')} + {Event('b,c')} = {Event('a,-b') + Event('b,c')}   (elementwise cancellation)")

x, y = Event("a,-b"), Event("b,c")
print(f"\ncommutative:   X + Y == Y + X          ->  {x + y == y + x}")
print(f"idempotent:    X + X == X              ->  {x + x == x}")
print(f"unit:          X + {{}} == X             ->  {x + Event() == x}")

print("\nBut it does NOT associate in general -- idempotence plus")
print("annihilation rule that out.  The minimal refutation:")
x, y, z = Event("a"), Event("a"), Event("-a")
print(f"  ({x} + {y}) + {z} = {(x + y) + z}")
print(f"  {x} + ({y} + {z}) = {x + (y + z)}")
print("It does associate whenever no label occurs in all three operands,")
print("which is the only shape the part-decomposition identities need.")

print()
print("=" * 72)
print("Intersection and difference are plain set operations")
print("=" * 72)
left, right = Event("a,-b"), Event("-b,c")
print(f"{left} & {right} = {left & right}")
print(f"{left} - {right} = {left - right}")
