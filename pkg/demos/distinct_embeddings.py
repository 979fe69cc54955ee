"""Checking the conjugacy behind two knots sharing a surface slope."""

from ttbraid.families import (
    beta_words,
    p1_conjugator,
    verify_equation_chain,
    verify_lemma,
    verify_p1,
    verify_t1,
)
from ttbraid.garside import is_conjugate_by

b1, b2 = beta_words(3)
c = p1_conjugator(3)
print("beta1 =", b1)
print("beta2 =", b2)
print("c     =", c)
print("c^-1 beta1 c == beta2:", is_conjugate_by(b1, b2, c))

for r in range(2, 9):
    print(verify_p1(r).to_json()["status"], "r =", r)

# Every step is checked on its own, so one wrong step cannot hide behind another.
for rep in verify_equation_chain(4):
    print(f"  {rep.claim_id:8} {rep.status}")
for lemma in ("L5", "L6", "L7", "L8"):
    print(lemma, all(verify_lemma(lemma, r=r).ok for r in range(2, 9)))

# Whole twisted torus braids, not just the cores.
for q in (5, 7, 9):
    rep = verify_t1(q, 2)
    print(f"T1 q={q}: {rep.status}; {rep.notes}")
