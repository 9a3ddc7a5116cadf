"""Ideals of the ring of integers in canonical form ``{a, b + d*w}``.

Principal sub-ideals are enumerated through the reduced cycle of the norm
form of the ideal: a primitive ``x`` in ``I`` with ``N(x) = n*N(I)`` is the
first vector of a basis whose norm form is ``(n, t, *)``, so running over the
admissible ``(n, t)`` and matching reduced forms against the cycle recovers
every such ``x`` up to units.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from . import forms
from .errors import NotAnIdeal, NotInIdeal, ZeroElement
from .field import FieldCtx, QuadInt, canonical_associate
from .forms import Form
from .kernels import sqrt_residues


@dataclass(frozen=True)
class Ideal:
    ctx: FieldCtx
    a: int
    b: int
    d: int

    @property
    def norm(self) -> int:
        return self.a * self.d

    @property
    def u(self) -> QuadInt:
        return QuadInt(self.a, 0)

    @property
    def v(self) -> QuadInt:
        return QuadInt(self.b, self.d)

    @property
    def basis(self) -> tuple[QuadInt, QuadInt]:
        return self.u, self.v

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.d

    @property
    def covolume_sq(self) -> int:
        """vol(Lambda_I)^2 = N(I)^2 * disc."""
        return self.norm ** 2 * self.ctx.disc

    def __repr__(self) -> str:
        return f"Ideal(D={self.ctx.D}, a={self.a}, b={self.b}, d={self.d})"

    def coords(self, x: QuadInt) -> tuple[int, int]:
        """(m, n) with x = m*a + n*(b + d*w); raises NotInIdeal."""
        p, q = x
        if q % self.d:
            raise NotInIdeal(f"{x} is not in {self}")
        n = q // self.d
        rest = p - n * self.b
        if rest % self.a:
            raise NotInIdeal(f"{x} is not in {self}")
        return rest // self.a, n

    def element(self, m: int, n: int) -> QuadInt:
        return QuadInt(m * self.a + n * self.b, n * self.d)

    def contains(self, x: QuadInt) -> bool:
        try:
            self.coords(x)
        except NotInIdeal:
            return False
        return True

    def norm_form(self) -> Form:
        """N(X*u + Y*v) / N(I); discriminant equals disc(K)."""
        ctx = self.ctx
        u, v = self.basis
        n = self.norm
        return Form(ctx.norm(u) // n, ctx.trace(ctx.mul(u, ctx.conj(v))) // n, ctx.norm(v) // n)


def ideal_from_canonical(ctx: FieldCtx, a: int, b: int, d: int) -> Ideal:
    if a <= 0 or d <= 0 or not 0 <= b < a:
        raise NotAnIdeal(f"need a, d > 0 and 0 <= b < a, got ({a}, {b}, {d})")
    if a % d or b % d:
        raise NotAnIdeal(f"d must divide a and b, got ({a}, {b}, {d})")
    if ctx.norm(QuadInt(b, d)) % (a * d):
        raise NotAnIdeal(f"a*d must divide N(b + d*w), got ({a}, {b}, {d})")
    return Ideal(ctx, a, b, d)


def ideal_from_generators(ctx: FieldCtx, gens) -> Ideal:
    """The ideal generated by the given elements, in canonical form."""
    vecs = []
    for g in gens:
        vecs.append(tuple(g))
        vecs.append(tuple(ctx.mul(g, QuadInt(0, 1))))
    # Hermite normal form of the Z-span of vecs (coordinates in {1, w})
    d, top = 0, (0, 0)
    for p, q in vecs:
        if q == 0:
            continue
        if d == 0:
            d, top = abs(q), (p if q > 0 else -p, abs(q))
            continue
        g, s, t = _xgcd(top[1], q)
        top = (s * top[0] + t * p, g)
        d = g
    if d == 0:
        raise ZeroElement("generators are all zero")
    a = 0
    for p, q in vecs + [top]:
        a = gcd(a, p - (q // d) * top[0])
    a = abs(a)
    return ideal_from_canonical(ctx, a, top[0] % a, d)


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        q, x, y = x // y, y, x % y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def ideal_from_generator(ctx: FieldCtx, x: QuadInt) -> Ideal:
    if x == (0, 0):
        raise ZeroElement("the zero element generates no nonzero ideal")
    return ideal_from_generators(ctx, [x])


def unit_ideal(ctx: FieldCtx) -> Ideal:
    return Ideal(ctx, 1, 0, 1)


def galois_conjugate(I: Ideal) -> Ideal:
    ctx = I.ctx
    b = (-I.b - I.d * ctx.tr_omega) % I.a
    return Ideal(ctx, I.a, b, I.d)


def is_galois_stable(I: Ideal) -> bool:
    return galois_conjugate(I).triple == I.triple


def extends_to_basis(I: Ideal, x: QuadInt) -> bool:
    m, n = I.coords(x)
    return gcd(m, n) == 1


def ideals_of_norm_at_most(ctx: FieldCtx, bound: int) -> list[Ideal]:
    """Every ideal of norm <= bound, by the canonical-triple conditions."""
    out = []
    for a in range(1, bound + 1):
        for d in range(1, a + 1):
            if a % d or a * d > bound:
                continue
            for b in range(0, a, d):
                if ctx.norm(QuadInt(b, d)) % (a * d) == 0:
                    out.append(Ideal(ctx, a, b, d))
    return out


def min_nonzero_abs_norm(I: Ideal) -> int:
    return forms.min_abs_value(I.norm_form()) * I.norm


class _CycleIndex:
    """Reduced cycle of an ideal's norm form keyed by form, with matrices from I's basis."""

    def __init__(self, I: Ideal):
        f = I.norm_form()
        red, m_red = forms.reduce_form(f)
        self.lookup = {g: forms.mat_mul(m_red, m) for g, m in forms.cycle(red)}

    def first_vector(self, g: Form) -> tuple[int, int] | None:
        red, m_g = forms.reduce_form(g)
        m = self.lookup.get(red)
        if m is None:
            return None
        t = forms.mat_mul(m, forms.mat_inv(m_g))
        return t[0], t[2]


def _sort_key(ctx: FieldCtx, x: QuadInt):
    n = ctx.norm(x)
    return (abs(n), -n, abs(x.a) + abs(x.c), x.a, x.c)


def enumerate_principal_up_to_units(I: Ideal, bound: int, fold_galois: bool = False) -> list[QuadInt]:
    """One canonical generator per principal ideal (x) in I with |N(x)| <= bound
    and x primitive in I (extends to a basis of I)."""
    ctx = I.ctx
    delta = ctx.disc
    index = _CycleIndex(I)
    fold = fold_galois and is_galois_stable(I)
    found: dict[QuadInt, None] = {}
    for m in range(1, bound // I.norm + 1):
        roots = sqrt_residues(delta, m)
        for n in (m, -m):
            for t in roots:
                vec = index.first_vector(Form(n, t, (t * t - delta) // (4 * n)))
                if vec is None:
                    continue
                x = canonical_associate(ctx, I.element(*vec))
                if fold:
                    y = canonical_associate(ctx, ctx.conj(x))
                    x = min(x, y, key=lambda z: _sort_key(ctx, z))
                found[x] = None
    return sorted(found, key=lambda z: _sort_key(ctx, z))
