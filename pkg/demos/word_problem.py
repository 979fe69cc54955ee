"""Deciding equality of braids with the Garside left normal form."""

from ttbraid.braid import BraidWord, half_twist, power
from ttbraid.garside import center_full_twist, equals, tau, to_normal_form

# A negative generator becomes Delta^-1 times a positive simple factor.
nf = to_normal_form(BraidWord(3, (-1,)))
print("s1^-1 in B_3:", nf.to_json())

# Two very different spellings of the full twist on five strands.
up = power(BraidWord(5, (1, 2, 3, 4)), 5)
down = power(BraidWord(5, (4, 3, 2, 1)), 5)
print("(s1 s2 s3 s4)^5 == (s4 s3 s2 s1)^5:", equals(up, down))
print("normal form:", to_normal_form(up).to_json())

# The full twist is central; conjugating by Delta reflects indices.
w = BraidWord(5, (1, -2, 3, 3, -4))
z = center_full_twist(5)
print("Delta^2 central:", equals(z * w, w * z))
print("tau(w) =", tau(w), "equals Delta^-1 w Delta:",
      equals(tau(w), ~half_twist(5) * w * half_twist(5)))

# Long words stay cheap: the normal form is computed in linear passes.
import random
import time

rng = random.Random(0)
letters = tuple(rng.choice((1, -1)) * rng.randint(1, 4) for _ in range(50_000))
start = time.perf_counter()
nf = to_normal_form(BraidWord(5, letters))
print(f"50k-letter word: inf={nf.inf}, {nf.canonical_length} factors, "
      f"{time.perf_counter() - start:.2f} s")
