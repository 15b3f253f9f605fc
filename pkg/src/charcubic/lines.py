"""The 24 affine lines on a smooth fiber of the parameter-free member.

For each coordinate projection the fiber kappa = t carries eight lines in the
four planes where the projected coordinate equals +-2 or +-sqrt(t+2); their
coefficients live in the algebra generated by rm = sqrt(t-2) and rp =
sqrt(t+2), or in Q itself when both square roots are rational.  Incidence of
two lines (affine meeting point, or a shared direction at infinity) assembles
the Gram matrix of the five standard difference classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix
from .sqrtalgebra import SqrtAlgebraElem, ZeroDivisorError, _sqrt_fraction, instantiation


@dataclass(frozen=True)
class Line:
    """An affine line: points base + s * direction, s a free parameter."""

    label: str          # L1 .. L8
    projection: str     # coordinate held constant on the line: "x", "y" or "z"
    t: Fraction
    base: tuple         # three SqrtAlgebraElem
    direction: tuple    # three SqrtAlgebraElem
    plane: str          # human-readable constraint, e.g. "z = 2" or "z = rp"

    def key(self):
        return (self.projection, self.label)

    def to_jsonable(self):
        return {"label": self.label, "projection": self.projection,
                "plane": self.plane,
                "base": [str(c) for c in self.base],
                "direction": [str(c) for c in self.direction]}

    def __str__(self):
        return "%s (%s-projection): %s, base (%s), direction (%s)" % (
            self.label, self.projection, self.plane,
            ", ".join(str(c) for c in self.base),
            ", ".join(str(c) for c in self.direction))


def _elems(t):
    """(zero, one, rm, rp) over t, instantiated into Q when possible."""
    inst = instantiation(t)
    if inst is not None:
        rm = SqrtAlgebraElem(t, inst[0])
        rp = SqrtAlgebraElem(t, inst[1])
    else:
        rm = SqrtAlgebraElem.rm(t)
        rp = SqrtAlgebraElem.rp(t)
    return SqrtAlgebraElem(t, 0), SqrtAlgebraElem(t, 1), rm, rp


def lines_on_fiber(t) -> list:
    """All 24 affine lines on the fiber kappa = t, eight per projection.

    The z-projection list is explicit; the x- and y-projection lines are its
    images under the two cyclic coordinate permutations (which preserve the
    fiber).  Raises ValueError at t = +-2 where the fiber is singular.
    """
    t = Fraction(t)
    if t == 2 or t == -2:
        raise ValueError("fiber at t = %s is singular; no line enumeration" % t)
    zero, one, rm, rp = _elems(t)
    half = Fraction(1, 2)
    a_plus = (rp + rm) * half
    a_minus = (rp - rm) * half
    two = SqrtAlgebraElem(t, 2)

    def pl(c):
        """plane constant as display text"""
        return str(c)

    z_lines = [
        Line("L1", "z", t, (rm, zero, two), (one, one, zero), "z = " + pl(two)),
        Line("L2", "z", t, (-rm, zero, two), (one, one, zero), "z = " + pl(two)),
        Line("L3", "z", t, (zero, zero, rp), (a_plus, one, zero), "z = " + pl(rp)),
        Line("L4", "z", t, (zero, zero, rp), (a_minus, one, zero), "z = " + pl(rp)),
        Line("L5", "z", t, (zero, zero, -rp), (-a_plus, one, zero), "z = " + pl(-rp)),
        Line("L6", "z", t, (zero, zero, -rp), (-a_minus, one, zero), "z = " + pl(-rp)),
        Line("L7", "z", t, (rm, zero, -two), (-one, one, zero), "z = " + pl(-two)),
        Line("L8", "z", t, (-rm, zero, -two), (-one, one, zero), "z = " + pl(-two)),
    ]
    out = list(z_lines)
    # cyclic images: (x,y,z) -> (z,x,y) moves the constant coordinate to x,
    # (x,y,z) -> (y,z,x) moves it to y; both preserve kappa
    for proj, shuffle in (("x", lambda v: (v[2], v[0], v[1])),
                          ("y", lambda v: (v[1], v[2], v[0]))):
        for ln in z_lines:
            out.append(Line(ln.label, proj, t, shuffle(ln.base), shuffle(ln.direction),
                            proj + ln.plane[1:]))
    return out


def fiber_residual(line: Line) -> list:
    """Coefficients (in the algebra, degree 0..3) of kappa(base + s*dir) - t
    as a polynomial in the line parameter s; all zero iff the line lies on
    the fiber."""
    t = line.t
    zero = SqrtAlgebraElem(t, 0)
    comps = [[line.base[i], line.direction[i]] for i in range(3)]

    def pmul(f, g):
        out = [zero] * (len(f) + len(g) - 1)
        for i, fi in enumerate(f):
            for j, gj in enumerate(g):
                out[i + j] = out[i + j] + fi * gj
        return out

    def padd(f, g):
        n = max(len(f), len(g))
        return [(f[i] if i < len(f) else zero) + (g[i] if i < len(g) else zero)
                for i in range(n)]

    def pneg(f):
        return [-c for c in f]

    acc = [SqrtAlgebraElem(t, -2 - t)]
    for i in range(3):
        acc = padd(acc, pmul(comps[i], comps[i]))
    acc = padd(acc, pneg(pmul(pmul(comps[0], comps[1]), comps[2])))
    return acc


def line_contained_in_fiber(line: Line) -> bool:
    return all(c.is_zero() for c in fiber_residual(line))


def _decidable(t):
    """Incidence needs either a rational instantiation or a zero-divisor-free
    algebra: all of t-2, t+2, (t-2)(t+2) must be rational non-squares."""
    if instantiation(t) is not None:
        return
    if (_sqrt_fraction(t - 2) is None and _sqrt_fraction(t + 2) is None
            and _sqrt_fraction((t - 2) * (t + 2)) is None):
        return
    raise ZeroDivisorError(
        "t = %s gives zero divisors without a rational instantiation; "
        "incidence is not decided here" % t)


def line_incidence(a: Line, b: Line) -> int:
    """1 if the two distinct lines meet (in affine space, or at infinity via
    proportional directions), else 0."""
    if a.t != b.t:
        raise ValueError("lines live on different fibers: t = %s vs %s" % (a.t, b.t))
    if a.key() == b.key():
        raise ValueError("incidence needs two distinct lines, got %s twice" % (a.key(),))
    _decidable(a.t)
    u, v = a.direction, b.direction
    cross = (u[1] * v[2] - u[2] * v[1],
             u[2] * v[0] - u[0] * v[2],
             u[0] * v[1] - u[1] * v[0])
    if all(c.is_zero() for c in cross):
        return 1
    w = tuple(b.base[i] - a.base[i] for i in range(3))
    det = cross[0] * w[0] + cross[1] * w[1] + cross[2] * w[2]
    if det.is_zero():
        return 1
    if not det.is_unit():
        raise ZeroDivisorError("triple product %s is a zero divisor at t = %s"
                               % (det, a.t))
    return 0


_CLASS_PAIRS = (("L8", "L5"), ("L7", "L5"), ("L1", "L3"), ("L2", "L3"), ("L5", "L4"))


def class_gram(t) -> Matrix:
    """Gram matrix of the five difference classes (L8-L5, L7-L5, L1-L3,
    L2-L3, L5-L4) of z-projection lines, using self-intersection -1 for every
    line and line_incidence for distinct pairs."""
    t = Fraction(t)
    zl = {ln.label: ln for ln in lines_on_fiber(t) if ln.projection == "z"}

    def dot(p, q):
        if p == q:
            return -1
        return line_incidence(zl[p], zl[q])

    rows = []
    for (a, b) in _CLASS_PAIRS:
        row = []
        for (c, d) in _CLASS_PAIRS:
            row.append(dot(a, c) - dot(a, d) - dot(b, c) + dot(b, d))
        rows.append(row)
    return Matrix(rows)
