"""Alexander polynomials as an independent check on braid computations."""

import random

from ttbraid.braid import BraidWord, conjugate
from ttbraid.invariants import alexander, closure_components, reduced_burau, torus_alexander

trefoil = BraidWord(2, (1, 1, 1))
figure_eight = BraidWord(3, (1, -2, 1, -2))
print("trefoil:", alexander(trefoil))
print("figure eight:", alexander(figure_eight))
print("Burau of s1 in B_3:", [[str(x) for x in row] for row in reduced_burau(BraidWord(3, (1,))).entries])

# Conjugation and stabilization leave the polynomial alone.
rng = random.Random(1)
w = BraidWord(4, (1, 2, 3, -2, 1, -3, 2))
assert closure_components(w) == 1
c = BraidWord(4, tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(8)))
stab = BraidWord(5, w.letters + (4,))
print(alexander(w), "|", alexander(conjugate(w, c)), "|", alexander(stab))

# Burau against the closed formula for torus knots.
for p, q in ((7, 3), (11, 5), (22, 7)):
    w = BraidWord(q, tuple(range(q - 1, 0, -1)) * p)
    print(f"T({p},{q}) agrees:", alexander(w) == torus_alexander(p, q))
