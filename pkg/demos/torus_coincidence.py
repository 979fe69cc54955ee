"""A torus knot that is also a primitive/Seifert twisted torus knot."""

from ttbraid.braid import half_twist
from ttbraid.families import p1_torus_pair, verify_p1_theorem
from ttbraid.garside import is_conjugate_by
from ttbraid.invariants import alexander, torus_alexander
from ttbraid.twisted import classify, ttk_braid

q, k = 5, 2
pair = p1_torus_pair(q, k)
w1, w2 = ttk_braid(pair.first), ttk_braid(pair.second)
print(pair.first, classify(pair.first).verdict.value)
print(pair.second, classify(pair.second).verdict.value)
print("slopes:", pair.slopes())

# The half twist carries one braid to the other.
print("Delta^-1 w1 Delta == w2:", is_conjugate_by(w1, w2, half_twist(q)))

# Independent evidence from the Burau side.
print("Alexander w1:", alexander(w1))
print("Alexander w2:", alexander(w2))
print("T(11,5)     :", torus_alexander(k * q + 1, q))

for q in range(3, 10):
    rep = verify_p1_theorem(q, 2)
    print(f"q={q}: {rep.status}")
