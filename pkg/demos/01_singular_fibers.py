"""Walk the singular-fiber bookkeeping for a few parameter triples.

For each (P, Q, R) the surface x^2+y^2+z^2-xyz-Px-Qy-Rz-2 = t has critical
points where the gradient vanishes; eliminating x and y leaves a degree-5
polynomial in z, so counted with multiplicity there are always five critical
points, hence at most five singular fibers.
"""

from fractions import Fraction

from charcubic import (build_kappa, critical_points, critical_values,
                       eliminant, fiber_is_smooth, hessian, total_multiplicity)
from charcubic import univariate as uni


def show(params):
    print("parameters (P, Q, R) =", params)
    print("  eliminant:", uni.to_string(eliminant(params)))
    for cp in critical_points(params):
        print("  critical point:", cp)
    for value, mult in critical_values(params):
        shown = value if not isinstance(value, tuple) else \
            "root of " + uni.to_string(list(value), "v")
        print("  singular fiber at t = %s  (weight %d)" % (shown, mult))
    print("  total multiplicity:", total_multiplicity(params))
    print()


# the symmetric case: four conjugate nodes on t = 2 plus one at t = -2
show((0, 0, 0))

# Hessians certify that these are honest nondegenerate critical points
h, nondeg = hessian((0, 0, 0), (2, 2, 2))
print("Hessian at (2,2,2):", h.to_lists(), "nondegenerate:", nondeg)
print()

# a triple with one rational critical point and two quadratic-irrational pairs
show((1, 0, 0))

# a triple where the z = 2 boundary branch carries critical points
show((4, -4, 1))

# random-looking rational parameters: still five in total
show((Fraction(1, 2), Fraction(-2, 3), 3))

for t in (2, -2, Fraction(17, 4)):
    print("fiber t = %s of the (0,0,0) member smooth?" % t,
          fiber_is_smooth((0, 0, 0), t))

k = build_kappa((0, 0, 0))
print("check: kappa(2,2,2) =", k.evaluate({"x": 2, "y": 2, "z": 2}))
