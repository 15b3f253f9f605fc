"""Polynomial symmetries of the cubic family.

Generator maps, signed permutations, group words, the degree-reduction normal
form for compositions of the three quadratic involutions, and the action on
the four distinguished points of the parameter-free member.

Composition convention everywhere: (f o g)(p) = f(g(p)), and a word
[w1, ..., wk] denotes w1 o w2 o ... o wk, so the rightmost letter acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Optional

from .family import as_params, build_kappa
from .multipoly import (MAP_VARS, MultiPoly, PolyMap, jacobian_determinant,
                        map_compose)

GAMMA_LETTERS = ("alpha", "beta", "gamma", "sigma_x", "sigma_y", "sigma_z")
TAU_LETTERS = ("tau1", "tau2", "tau3")
ALL_LETTERS = GAMMA_LETTERS + TAU_LETTERS

# Jacobian determinant of each generator map (all are constants)
LETTER_SIGNS = {
    "alpha": 1, "beta": 1, "gamma": -1,
    "sigma_x": 1, "sigma_y": 1, "sigma_z": 1,
    "tau1": -1, "tau2": -1, "tau3": -1,
}

# the four distinguished rational critical points of the parameter-free member
FOUR_POINTS = (
    (Fraction(2), Fraction(-2), Fraction(-2)),
    (Fraction(-2), Fraction(2), Fraction(-2)),
    (Fraction(-2), Fraction(-2), Fraction(2)),
    (Fraction(2), Fraction(2), Fraction(2)),
)

_AXES = "xyz"


class SignedPerm:
    """Monomial linear map: component i is signs[i] * coordinate perm[i].

    perm is a permutation of (0, 1, 2) listing which input coordinate each
    output slot reads; signs is a vector in {+1, -1}^3 applied after the
    permutation.  The textual form matches the word-grammar tail literal,
    e.g. (-y, -x, z) prints as perm(yxz)flip(xy).
    """

    __slots__ = ("perm", "signs")

    def __init__(self, perm=(0, 1, 2), signs=(1, 1, 1)):
        perm = tuple(perm)
        signs = tuple(signs)
        if sorted(perm) != [0, 1, 2]:
            raise ValueError("perm must be a permutation of (0, 1, 2): %r" % (perm,))
        if len(signs) != 3 or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be three values in {+1, -1}: %r" % (signs,))
        self.perm = perm
        self.signs = signs

    @classmethod
    def identity(cls):
        return cls()

    def is_identity(self):
        return self.perm == (0, 1, 2) and self.signs == (1, 1, 1)

    def to_poly_map(self) -> PolyMap:
        comps = tuple(
            MultiPoly.variable(_AXES[self.perm[i]], MAP_VARS) * self.signs[i]
            for i in range(3))
        return PolyMap(comps)

    def apply(self, point):
        point = tuple(point)
        return tuple(self.signs[i] * point[self.perm[i]] for i in range(3))

    def compose(self, other: "SignedPerm") -> "SignedPerm":
        """self o other as maps (other acts first)."""
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(3))
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        perm = [0, 0, 0]
        signs = [1, 1, 1]
        for i in range(3):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return SignedPerm(tuple(perm), tuple(signs))

    def jacobian_sign(self) -> int:
        sgn = 1
        p = list(self.perm)
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    sgn = -sgn
        return sgn * self.signs[0] * self.signs[1] * self.signs[2]

    def preserves(self, params) -> bool:
        return is_automorphism(self.to_poly_map(), params)

    def __eq__(self, other):
        if not isinstance(other, SignedPerm):
            return NotImplemented
        return self.perm == other.perm and self.signs == other.signs

    def __hash__(self):
        return hash((self.perm, self.signs))

    def __str__(self):
        out = "perm(%s)" % "".join(_AXES[self.perm[i]] for i in range(3))
        flips = "".join(_AXES[i] for i in range(3) if self.signs[i] < 0)
        if flips:
            out += "flip(%s)" % flips
        return out

    def __repr__(self):
        return "SignedPerm(%r, %r)" % (self.perm, self.signs)


def generator(name: str, params=(0, 0, 0)) -> PolyMap:
    """The generator map for a letter; quadratic-involution letters take any
    parameters, the parameter-free alphabet requires params = (0, 0, 0)."""
    params = as_params(params)
    p, q, r = params
    x, y, z = MultiPoly.gens(*MAP_VARS)
    if name in GAMMA_LETTERS and tuple(params) != (0, 0, 0):
        raise ValueError("letter %r is only defined at parameters (0, 0, 0)" % name)
    if name == "alpha":
        return PolyMap((y, x, x * y - z))
    if name == "beta":
        return PolyMap((y, z, x))
    if name == "gamma":
        return PolyMap((x, y, x * y - z))
    if name == "sigma_x":
        return PolyMap((x, -y, -z))
    if name == "sigma_y":
        return PolyMap((-x, y, -z))
    if name == "sigma_z":
        return PolyMap((-x, -y, z))
    if name == "tau1":
        return PolyMap((x, y, x * y - z + r))
    if name == "tau2":
        return PolyMap((y * z - x + p, y, z))
    if name == "tau3":
        return PolyMap((x, x * z - y + q, z))
    raise ValueError("unknown letter %r" % name)


@dataclass(frozen=True)
class GroupWord:
    """An ordered tuple of letters plus an optional trailing signed permutation
    (applied first, i.e. rightmost in the composition)."""

    letters: tuple
    tail: Optional[SignedPerm] = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for name in self.letters:
            if name not in ALL_LETTERS:
                raise ValueError("unknown letter %r" % name)

    def __len__(self):
        return len(self.letters)

    def is_reduced(self) -> bool:
        """No two consecutive equal quadratic-involution letters."""
        return all(not (a == b and a in TAU_LETTERS)
                   for a, b in zip(self.letters, self.letters[1:]))

    def __str__(self):
        bits = list(self.letters)
        if self.tail is not None and not self.tail.is_identity():
            bits.append(str(self.tail))
        return " ".join(bits) if bits else "(empty)"


def reduce_tau_word(letters) -> tuple:
    """Cancel adjacent equal involution letters until none remain."""
    out = []
    for name in letters:
        if out and out[-1] == name and name in TAU_LETTERS:
            out.pop()
        else:
            out.append(name)
    return tuple(out)


def word_to_map(word, params=(0, 0, 0)) -> PolyMap:
    """Compose the word's letters (and trailing signed permutation) in order."""
    params = as_params(params)
    if isinstance(word, GroupWord):
        letters, tail = word.letters, word.tail
    else:
        letters, tail = tuple(word), None
    f = tail.to_poly_map() if tail is not None else PolyMap.identity()
    for name in reversed(letters):
        f = map_compose(generator(name, params), f)
    return f


def sign_character(word, params=(0, 0, 0)) -> int:
    """Product of the letters' constant Jacobian determinants, times the
    trailing permutation's sign; equals the Jacobian of word_to_map."""
    if isinstance(word, GroupWord):
        letters, tail = word.letters, word.tail
    else:
        letters, tail = tuple(word), None
    sign = 1
    for name in letters:
        if name not in LETTER_SIGNS:
            raise ValueError("unknown letter %r" % name)
        sign *= LETTER_SIGNS[name]
    if tail is not None:
        sign *= tail.jacobian_sign()
    return sign


def is_automorphism(f: PolyMap, params=(0, 0, 0)) -> bool:
    """Exact polynomial identity kappa o f = kappa."""
    k = build_kappa(as_params(params))
    fx, fy, fz = f.components
    return k.substitute({"x": fx, "y": fy, "z": fz}) == k


def affine_stabilizer(params) -> list:
    """All signed permutations preserving the family member, by exhaustive
    check of the 48 candidates.  Deterministic order."""
    params = as_params(params)
    out = []
    for perm in sorted(permutations((0, 1, 2))):
        for signs in product((1, -1), repeat=3):
            sp = SignedPerm(perm, signs)
            if sp.preserves(params):
                out.append(sp)
    return out


def gamma_to_s4(f: PolyMap) -> tuple:
    """(permutation of the four distinguished points, constant Jacobian sign).

    The permutation is returned as a tuple m with f(point_i) = point_{m[i]}
    (0-indexed).  Raises ValueError when an image misses the point list or the
    Jacobian is not a constant +-1; both certify f is not an automorphism of
    the parameter-free member.
    """
    images = []
    for pt in FOUR_POINTS:
        q = f(pt)
        if q not in FOUR_POINTS:
            raise ValueError("image %s of %s is not a distinguished point" % (q, pt))
        images.append(FOUR_POINTS.index(q))
    if sorted(images) != [0, 1, 2, 3]:
        raise ValueError("map does not permute the four distinguished points")
    jac = jacobian_determinant(f)
    if not jac.is_constant() or jac.constant_value() not in (1, -1):
        raise ValueError("Jacobian determinant is not a constant +-1: %s" % jac)
    return tuple(images), int(jac.constant_value())


_REPLACED_SLOT_TAU = ("tau2", "tau3", "tau1")  # slot i is rewritten by this letter


def horowitz_decompose(f: PolyMap, params=(0, 0, 0), verify_unique=False):
    """Normal form of an automorphism: (letters, tail) with
    f = word_to_map(letters, params) o tail and no two consecutive letters equal.

    Each step peels the unique degree-reducing involution off the left:
    rewriting slot i replaces component i by a product of the other two
    (minus the old component), so the degree can only drop when slot i is the
    strict maximum — for any other slot the new degree is the exact sum of the
    other two component degrees, which already exceeds the maximum.  The loop
    therefore composes only the one candidate; with verify_unique=True it
    instead composes all three and checks directly that exactly one reduces.

    A map outside the group fails loudly: either no slot is a strict maximum,
    the candidate fails to reduce, or the affine residue is not a signed
    permutation preserving the family member.
    """
    params = as_params(params)
    taus = {name: generator(name, params) for name in TAU_LETTERS}
    letters = []
    g = f
    while g.degree() > 1:
        if verify_unique:
            reducers = [(name, map_compose(taus[name], g)) for name in TAU_LETTERS]
            reducers = [(n, c) for n, c in reducers if c.degree() < g.degree()]
            if len(reducers) > 1:
                raise AssertionError("degree reduction is not unique at %s" % g)
            if not reducers:
                raise ValueError("reduction stalls at degree %d: "
                                 "map is not in the involution-generated group" % g.degree())
            name, g = reducers[0]
        else:
            degs = g.component_degrees()
            top = max(degs)
            slots = [i for i, d in enumerate(degs) if d == top]
            if len(slots) != 1:
                raise ValueError("reduction stalls: tied component degrees %s" % (degs,))
            name = _REPLACED_SLOT_TAU[slots[0]]
            candidate = map_compose(taus[name], g)
            if candidate.degree() >= g.degree():
                raise ValueError("reduction stalls at degree %d: "
                                 "map is not in the involution-generated group" % g.degree())
            g = candidate
        letters.append(name)
    for sp in affine_stabilizer(params):
        if sp.to_poly_map() == g:
            return tuple(letters), sp
    raise ValueError("affine residue %s does not preserve the family member" % g)


def dehn_twist(name: str, params=(0, 0, 0)) -> PolyMap:
    """The two twist maps in closed form (equal to the two-letter words
    [tau3, tau1] and [tau1, tau2] respectively)."""
    p, q, r = as_params(params)
    x, y, z = MultiPoly.gens(*MAP_VARS)
    if name == "X":
        return PolyMap((x, x * x * y - x * z + r * x - y + q, x * y - z + r))
    if name == "Y":
        return PolyMap((y * z - x + p, y, y * y * z - x * y + p * y - z + r))
    raise ValueError("twist name must be 'X' or 'Y', got %r" % name)
