"""Enumerate the 24 lines on a smooth fiber and rebuild the Gram matrix.

At t = 17/4 both t - 2 = 9/4 and t + 2 = 25/4 are rational squares, so all
line data is rational.  At t = 5 neither is a square and coordinates live in
the biquadratic extension; incidence counts are still decided exactly.
"""

from fractions import Fraction

from charcubic import (VANISHING_CYCLE_GRAM, class_gram, line_contained_in_fiber,
                       line_incidence, lines_on_fiber)

for t in (Fraction(17, 4), 5):
    lns = lines_on_fiber(t)
    print("t = %s: %d lines, all on the fiber: %s" % (
        t, len(lns), all(line_contained_in_fiber(ln) for ln in lns)))
    for ln in lns[:8]:
        print("   ", ln)
    print()

lns = {(l.projection, l.label): l for l in lines_on_fiber(Fraction(17, 4))}
l1 = lns[("z", "L1")]
l2 = lns[("z", "L2")]
l3 = lns[("z", "L3")]
print("L1 . L2 =", line_incidence(l1, l2), " (translates meet at infinity)")
print("L1 . L3 =", line_incidence(l1, l3), " (skew)")
print()

g = class_gram(Fraction(17, 4))
print("Gram matrix of the five difference classes:")
for row in g.to_lists():
    print("   ", row)
print("matches the vanishing-cycle intersection form:",
      g == VANISHING_CYCLE_GRAM)
print("same matrix from the irrational fiber t = 5:",
      class_gram(5) == VANISHING_CYCLE_GRAM)
