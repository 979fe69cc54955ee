"""Twisted torus knots: braid words, surface slopes and the primitive/Seifert classification."""

from ttbraid.twisted import TwistedTorusKnot, classify, surface_slope, surgery_description, ttk_braid
from ttbraid.families import verify_seifert_example, verify_p1_slopes

pair = [TwistedTorusKnot(17, 5, 2, -1), TwistedTorusKnot(18, 5, 3, -1)]
for knot in pair:
    cls = classify(knot)
    print(f"{knot}: slope {surface_slope(knot)}, {cls.verdict.value}, "
          f"Seifert on H {cls.seifert_H.multiplicities if cls.seifert_H else None}")
    print("   ", surgery_description(knot))

print("braid of K(17,5,2,-1) ends with", ttk_braid(pair[0]).letters[-6:])

# The printed values come straight from the formulas. Where a stated value
# disagrees, the report says so instead of picking a side.
print(verify_seifert_example().notes.replace("; ", "\n    "))
print(verify_p1_slopes(5, 2).notes)
