"""Good bases of ideal lattices and the well-rounded twists they produce.

A basis ``{x, y}`` of ``I`` is good when
``f4 = 4(N(x)^2 + N(x)N(y) + N(y)^2) - N(I)^2 * disc <= 0``.  The twisted
lattice is well-rounded with minimal angle cos = (N(x) + N(y)) / Tr(x conj(y)),
and |cos| alone fixes it up to similarity.  Since f4 = Tr(x conj(y))^2 (4cos^2 - 1),
equal f4 does not force equal |cos| (nor the reverse), so classes are keyed
by the exact |cos| and carry every f4 value that realises them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import NotGoodBasis, NotInIdeal, NotPrimitive, NotTwistable, OutOfRange
from .field import FieldCtx, QuadInt, QuadRat
from .ideals import Ideal, enumerate_principal_up_to_units, is_galois_stable, unit_ideal
from .surd import Surd

ORTHOGONAL = "Orthogonal"
HEXAGONAL = "Hexagonal"
GENERIC = "Generic"


@dataclass(frozen=True)
class BasisPair:
    ideal: Ideal
    x: QuadInt
    y: QuadInt

    @property
    def ctx(self) -> FieldCtx:
        return self.ideal.ctx

    def determinant(self) -> int:
        """det of (x, y) in the canonical basis of the ideal."""
        m1, n1 = self.ideal.coords(self.x)
        m2, n2 = self.ideal.coords(self.y)
        return m1 * n2 - m2 * n1


@dataclass(frozen=True)
class TwistClass:
    f4: int
    cos_theta: Fraction
    kind: str
    witness: BasisPair
    beta: QuadRat
    alpha: float
    # the product reading ((conj(y)^2 - conj(x)^2)(x^2 - y^2))^(1/4), for comparison only
    alpha_product: float
    # every f4 among the good bases giving this shape
    f4_values: tuple[int, ...] = ()

    @property
    def abs_cos(self) -> Fraction:
        return abs(self.cos_theta)


def f4_value(b: BasisPair) -> int:
    ctx = b.ctx
    nx, ny = ctx.norm(b.x), ctx.norm(b.y)
    return 4 * (nx * nx + nx * ny + ny * ny) - b.ideal.covolume_sq


def is_good_basis(b: BasisPair) -> bool:
    try:
        det = b.determinant()
    except NotInIdeal:
        return False
    return det in (1, -1) and f4_value(b) <= 0


def _cos(b: BasisPair) -> Fraction:
    ctx = b.ctx
    tr = ctx.trace(ctx.mul(b.x, ctx.conj(b.y)))
    return Fraction(ctx.norm(b.x) + ctx.norm(b.y), tr)


def cos_theta(b: BasisPair) -> Fraction:
    """Cosine of the angle of the minimal basis after twisting, exact."""
    if not is_good_basis(b):
        raise NotGoodBasis(f"{{{b.x}, {b.y}}} is not a good basis of {b.ideal}")
    return _cos(b)


def beta_and_alpha(b: BasisPair) -> tuple[QuadRat, float]:
    """beta = (conj(y)^2 - conj(x)^2)/(x^2 - y^2) exactly and alpha = beta^(1/4)."""
    ctx = b.ctx
    w = ctx.sub(ctx.mul(b.y, b.y), ctx.mul(b.x, b.x))
    nw = ctx.norm(w)
    if nw >= 0:
        # beta = -conj(w)^2 / N(w), positive iff N(w) < 0
        raise NotTwistable(f"{{{b.x}, {b.y}}} admits no twist with equal lengths")
    wbar = ctx.conj(w)
    beta = QuadRat.make(ctx.mul(wbar, wbar), -nw)
    log_beta = 2 * ctx.log_abs(wbar) - math.log(-nw)
    return beta, math.exp(log_beta / 4)


def alpha_product(b: BasisPair) -> float:
    ctx = b.ctx
    w = ctx.sub(ctx.mul(b.y, b.y), ctx.mul(b.x, b.x))
    return float(-ctx.norm(w)) ** 0.25


def _inverse_mod(c: int, a: int) -> int:
    return pow(c, -1, a) if a > 1 else 0


def good_basis_hits(I: Ideal, x: QuadInt) -> list[tuple[int, BasisPair]]:
    """Every good basis {x, y} with y in the two admissible intervals.

    Returns (interval index, basis) pairs with y normalised so that the
    coordinates of x and y have determinant 1.  An interval holds two hits
    only when both of its endpoints are integers, and then both are hexagonal.
    """
    ctx = I.ctx
    if x == (0, 0):
        return []
    a, c = I.coords(x)
    if gcd(a, c) != 1:
        raise NotPrimitive(f"{x} does not extend to a basis of {I}")
    u, v = I.basis
    if a == 0:
        u, v, a, c = v, u, c, 0
    if a < 0:
        a, c = -a, -c
    xx = QuadInt(a * u.a + c * v.a, a * u.c + c * v.c)
    n = ctx.norm(xx)
    K = I.covolume_sq
    delta = K - 3 * n * n
    if delta < 0:
        return []
    S = ctx.trace(ctx.mul(xx, ctx.conj(v)))
    m = ctx.norm(v)
    r = (-_inverse_mod(c % a, a)) % a if a > 1 else 0
    # y = (b*x + v)/a has N(y) = (n b^2 + S b + m)/a^2.  The good condition
    # reads |2 n b + S| in [a*|sqrt(delta) - |n||, a*(sqrt(delta) + |n|)].
    an = a * abs(n)
    hits: list[tuple[int, BasisPair]] = []
    if an == 0:
        return []
    lo_abs = Surd(-an, a, delta, 1)  # a*(sqrt(delta) - |n|), may be negative
    if lo_abs.sign() < 0:
        lo_abs = -lo_abs
    hi_abs = Surd(an, a, delta, 1)
    intervals = []
    for sgn in (1, -1):
        # 2 n b + S in sgn*[lo_abs, hi_abs]
        e1 = _affine_solve(sgn, lo_abs, S, n)
        e2 = _affine_solve(sgn, hi_abs, S, n)
        intervals.append((min(e1, e2), max(e1, e2)))
    intervals.sort(key=lambda iv: (iv[0], iv[1]))
    seen_b = set()
    for idx, (lo, hi) in enumerate(intervals):
        first = lo.ceil()
        b = first + ((r - first) % a)
        while hi.cmp(b) >= 0:
            if b not in seen_b:
                seen_b.add(b)
                y = QuadInt((b * xx.a + v.a) // a, (b * xx.c + v.c) // a)
                pair = BasisPair(I, x, y)
                if f4_value(pair) <= 0:
                    hits.append((idx, pair))
            b += a
    return hits


def _affine_solve(sgn: int, value: Surd, S: int, n: int) -> Surd:
    """b with 2 n b + S = sgn*value."""
    t = (value if sgn > 0 else -value) - S
    return Surd(t.p, t.q, t.n, t.r * 2 * n)


def extend_to_good_bases(I: Ideal, x: QuadInt) -> list[BasisPair]:
    """All good bases {x, y} of I up to equivalence (at most two)."""
    out: dict[Fraction, BasisPair] = {}
    for _, pair in good_basis_hits(I, x):
        out.setdefault(abs(_cos(pair)), pair)
    return list(out.values())


def good_basis_with_one(ctx: FieldCtx) -> tuple[BasisPair, Fraction]:
    """The good basis {1, b + w} of the ring of integers, b = floor((1 - Tr(w) - sqrt(disc - 3))/2)."""
    b = Surd(1 - ctx.tr_omega, -1, ctx.disc - 3, 2).floor()
    y = QuadInt(b, 1)
    # N(1) = 1, Tr(conj(b + w)) = 2b + Tr(w)
    cos = Fraction(1 + ctx.norm(y), 2 * b + ctx.tr_omega)
    return BasisPair(unit_ideal(ctx), QuadInt(1, 0), y), cos


def twist_class(pair: BasisPair, f4_values: tuple[int, ...] = ()) -> TwistClass:
    f4 = f4_value(pair)
    cos = cos_theta(pair)
    beta, alpha = beta_and_alpha(pair)
    if cos == 0:
        kind = ORTHOGONAL
    elif f4 == 0:
        kind = HEXAGONAL
    else:
        kind = GENERIC
    return TwistClass(f4, cos, kind, pair, beta, alpha, alpha_product(pair), f4_values or (f4,))


def enumeration_bound(I: Ideal) -> int:
    """Largest n with 3 n^2 <= N(I)^2 disc."""
    return isqrt(I.covolume_sq // 3)


def principal_candidates(I: Ideal) -> list[QuadInt]:
    return enumerate_principal_up_to_units(I, enumeration_bound(I), fold_galois=True)


def all_well_rounded_twists(I: Ideal) -> list[TwistClass]:
    """Every well-rounded twist of the ideal lattice up to similarity, sorted by |cos| descending."""
    found: dict[Fraction, BasisPair] = {}
    keys: dict[Fraction, set[int]] = {}
    for x in principal_candidates(I):
        for _, pair in good_basis_hits(I, x):
            c = abs(_cos(pair))
            found.setdefault(c, pair)
            keys.setdefault(c, set()).add(f4_value(pair))
    classes = [twist_class(p, tuple(sorted(keys[c]))) for c, p in found.items()]
    classes.sort(key=lambda t: (-t.abs_cos, t.f4))
    return classes


def sphere_packing_radius(cos: Fraction | float) -> float:
    """Packing radius at unit covolume, (1/2) (1 - cos^2)^(-1/4)."""
    c = Fraction(cos) if not isinstance(cos, float) else cos
    if abs(c) > Fraction(1, 2):
        raise OutOfRange(f"|cos| must be <= 1/2, got {cos}")
    return 0.5 * (1 - float(c) ** 2) ** -0.25


__all__ = [
    "BasisPair", "TwistClass", "ORTHOGONAL", "HEXAGONAL", "GENERIC",
    "f4_value", "is_good_basis", "cos_theta", "beta_and_alpha", "alpha_product",
    "extend_to_good_bases", "good_basis_hits", "good_basis_with_one",
    "twist_class", "all_well_rounded_twists", "enumeration_bound",
    "principal_candidates", "sphere_packing_radius", "is_galois_stable",
]
