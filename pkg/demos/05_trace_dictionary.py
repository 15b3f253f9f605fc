"""From SL(2) representations to points of the cubic family.

Torus side: for any A, B in SL(2), the traces x = tr A, y = tr B, z = tr AB
satisfy x^2+y^2+z^2-xyz-2 = tr[A,B].  Four-holed-sphere side: boundary traces
(t1..t4) determine coefficients (P, Q, R) and a level S, and the pair-traces
point lands on that member at that level.
"""

import random

from charcubic import (BoundaryTraces, Sl2Matrix, build_kappa, sphere_character,
                       torus_character, traces_to_params)
from charcubic.multipoly import MultiPoly

A = Sl2Matrix(1, 1, 0, 1)
B = Sl2Matrix(1, 0, 1, 1)
ch = torus_character(A, B)
print("tr A, tr B, tr AB =", (ch.x, ch.y, ch.z))
print("tr [A, B] =", ch.commutator_trace)
print()

t1, t2, t3, t4 = MultiPoly.gens("t1", "t2", "t3", "t4")
(p, q, r), s = traces_to_params(BoundaryTraces(t1, t2, t3, t4))
print("symbolic dictionary:")
print("  P =", p)
print("  Q =", q)
print("  R =", r)
print("  S =", s)
print()

rng = random.Random(7)


def rand_sl2():
    m = Sl2Matrix.identity()
    for _ in range(4):
        n = rng.randint(-3, 3)
        m = m * (Sl2Matrix(1, n, 0, 1) if rng.random() < 0.5 else Sl2Matrix(1, 0, n, 1))
    return m


checked = 0
for _ in range(200):
    sp = sphere_character(rand_sl2(), rand_sl2(), rand_sl2())
    assert sp.on_surface
    checked += 1
print("sphere dictionary verified on %d random triples" % checked)

sp = sphere_character(Sl2Matrix(1, 1, 0, 1), Sl2Matrix(1, 0, 1, 1),
                      Sl2Matrix(0, 1, -1, 0))
pp, qq, rr = sp.params
print("example: boundary traces", sp.traces)
print("  (P, Q, R) =", (pp, qq, rr), " S =", sp.s_value)
print("  point", sp.point, "on the member:",
      build_kappa(sp.params).evaluate(dict(zip("xyz", sp.point))) == sp.s_value)
