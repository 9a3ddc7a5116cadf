"""Arithmetic in a real quadratic field K = Q(sqrt(D)) and its ring of integers.

Elements of the ring of integers are written ``a + c*w`` where ``w`` is
``(1 + sqrt(D))/2`` for D = 1 (mod 4) and ``sqrt(D)`` otherwise.  Everything
is exact except :meth:`FieldCtx.embed`, :meth:`FieldCtx.log_abs` and the
regulator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple

from .errors import NotSquareFree, TooLarge, TooSmall
from .surd import Surd, sign_of

MAX_D = 10**12


class QuadInt(NamedTuple):
    """``a + c*w`` in the ring of integers."""

    a: int
    c: int

    def __str__(self) -> str:
        return format_quadint(self)


def format_quadint(x: QuadInt, sym: str = "w") -> str:
    a, c = x
    if c == 0:
        return str(a)
    if c == 1:
        cs = sym
    elif c == -1:
        cs = "-" + sym
    else:
        cs = f"{c}{sym}"
    if a == 0:
        return cs
    if cs.startswith("-"):
        return f"{a}-{cs[1:]}"
    return f"{a}+{cs}"


@dataclass(frozen=True)
class QuadRat:
    """``num / den`` with ``den > 0`` and gcd(num.a, num.c, den) == 1."""

    num: QuadInt
    den: int

    @classmethod
    def make(cls, num: QuadInt, den: int) -> "QuadRat":
        if den == 0:
            raise ZeroDivisionError("QuadRat with zero denominator")
        if den < 0:
            num, den = QuadInt(-num.a, -num.c), -den
        g = gcd(gcd(num.a, num.c), den)
        if g > 1:
            num, den = QuadInt(num.a // g, num.c // g), den // g
        return cls(num, den)


def _log_sum(p: int, q: int, n: int) -> float:
    """log(p + q*sqrt(n)) for p, q >= 0 not both zero; safe for huge ints."""
    if q == 0:
        return math.log(p)
    lq = math.log(q) + 0.5 * math.log(n)
    if p == 0:
        return lq
    lp = math.log(p)
    hi, lo = max(lp, lq), min(lp, lq)
    return hi + math.log1p(math.exp(lo - hi))


@dataclass(frozen=True)
class FieldCtx:
    D: int
    disc: int
    tr_omega: int
    norm_omega: int
    fund_unit: QuadInt = field(compare=False)
    fund_unit_norm: int = field(compare=False)
    regulator: float = field(compare=False)

    # --- ring operations -------------------------------------------------

    def norm(self, x: QuadInt) -> int:
        a, c = x
        return a * a + a * c * self.tr_omega + c * c * self.norm_omega

    def trace(self, x: QuadInt) -> int:
        return 2 * x[0] + x[1] * self.tr_omega

    def conj(self, x: QuadInt) -> QuadInt:
        a, c = x
        return QuadInt(a + c * self.tr_omega, -c)

    def add(self, x: QuadInt, y: QuadInt) -> QuadInt:
        return QuadInt(x[0] + y[0], x[1] + y[1])

    def sub(self, x: QuadInt, y: QuadInt) -> QuadInt:
        return QuadInt(x[0] - y[0], x[1] - y[1])

    def neg(self, x: QuadInt) -> QuadInt:
        return QuadInt(-x[0], -x[1])

    def scale(self, k: int, x: QuadInt) -> QuadInt:
        return QuadInt(k * x[0], k * x[1])

    def mul(self, x: QuadInt, y: QuadInt) -> QuadInt:
        # w^2 = tr*w - N(w)
        a, c = x
        b, d = y
        cd = c * d
        return QuadInt(a * b - cd * self.norm_omega, a * d + b * c + cd * self.tr_omega)

    def power(self, x: QuadInt, k: int) -> QuadInt:
        if k < 0:
            raise ValueError("negative exponent; use unit_power for units")
        result = QuadInt(1, 0)
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def unit_power(self, k: int) -> QuadInt:
        """``eps**k`` for any integer k."""
        if k >= 0:
            return self.power(self.fund_unit, k)
        inv = self.scale(self.fund_unit_norm, self.conj(self.fund_unit))
        return self.power(inv, -k)

    def divides(self, x: QuadInt, y: QuadInt) -> QuadInt | None:
        """``y / x`` if it lies in the ring of integers, else None."""
        n = self.norm(x)
        num = self.mul(y, self.conj(x))
        if num.a % n or num.c % n:
            return None
        return QuadInt(num.a // n, num.c // n)

    def is_unit(self, x: QuadInt) -> bool:
        return abs(self.norm(x)) == 1

    # --- real embedding --------------------------------------------------

    def half_coords(self, x: QuadInt) -> tuple[int, int]:
        """(p, q) with x = (p + q*sqrt(D))/2."""
        return 2 * x[0] + x[1] * self.tr_omega, x[1] * (2 - self.tr_omega)

    def surd(self, x: QuadInt) -> Surd:
        """x under the identity embedding as an exact surd."""
        p, q = self.half_coords(x)
        return Surd(p, q, self.D, 2)

    def sign(self, x: QuadInt) -> int:
        p, q = self.half_coords(x)
        return sign_of(p, q, self.D)

    def log_abs(self, x: QuadInt) -> float:
        """log|x| under the identity embedding, without overflow or cancellation."""
        p, q = self.half_coords(x)
        if q == 0:
            return math.log(abs(x[0]))
        if p == 0 or (p > 0) == (q > 0):
            return _log_sum(abs(p), abs(q), self.D) - math.log(2)
        # |p - |q|sqrt(D)| * (|p| + |q|sqrt(D)) = 4|N(x)|
        return math.log(abs(self.norm(x))) + math.log(2) - _log_sum(abs(p), abs(q), self.D)

    def embed(self, x: QuadInt) -> tuple[float, float]:
        """(x, conj(x)) as floats; the larger coordinate is computed directly."""
        if x[1] == 0:
            return float(x[0]), float(x[0])
        p, q = self.half_coords(x)
        root = math.sqrt(self.D)
        n = self.norm(x)
        if p == 0 or (p > 0) == (q > 0):
            big = (p + q * root) / 2
            return big, n / big
        big = (p - q * root) / 2
        return n / big, big

    def ge_sqrt(self, x: QuadInt, n: int) -> bool:
        """Exact test of ``x >= sqrt(n)`` for x > 0."""
        return self.surd(self.mul(x, x)).cmp(n) >= 0


def _is_square_free(n: int) -> bool:
    if n % 4 == 0:
        return False
    if n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        p += 2
    return True


def fundamental_unit(D: int) -> tuple[QuadInt, int]:
    """Smallest unit > 1 from the continued fraction of w, with its norm.

    Walks convergents p/q of w; the first with N(p - q*w) = +-1 yields
    eps = (p - q*tr) + q*w.
    """
    tr, nw = (1, (1 - D) // 4) if D % 4 == 1 else (0, -D)
    P, Q = (1, 2) if D % 4 == 1 else (0, 1)
    s = isqrt(D)
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    while True:
        a = (P + s) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        nrm = p * p - p * q * tr + q * q * nw
        if nrm in (1, -1):
            return QuadInt(p - q * tr, q), nrm
        P = a * Q - P
        Q = (D - P * P) // Q


@lru_cache(maxsize=4096)
def new_field(D: int) -> FieldCtx:
    if D < 2:
        raise TooSmall(f"D must be >= 2, got {D}")
    if D > MAX_D:
        raise TooLarge(f"D must be <= {MAX_D}, got {D}")
    if not _is_square_free(D):
        raise NotSquareFree(f"D must be square-free, got {D}")
    if D % 4 == 1:
        disc, tr, nw = D, 1, (1 - D) // 4
    else:
        disc, tr, nw = 4 * D, 0, -D
    eps, eps_norm = fundamental_unit(D)
    ctx = FieldCtx(D, disc, tr, nw, eps, eps_norm, 0.0)
    object.__setattr__(ctx, "regulator", ctx.log_abs(eps))
    return ctx


def regulator_of(ctx: FieldCtx) -> float:
    return ctx.regulator


def canonical_associate(ctx: FieldCtx, x: QuadInt) -> QuadInt:
    """The associate u*x with u = +-eps**k lying in sqrt|N| <= u*x < eps*sqrt|N|."""
    if x == (0, 0):
        raise ValueError("zero has no canonical associate")
    if ctx.sign(x) < 0:
        x = ctx.neg(x)
    n = abs(ctx.norm(x))
    k = math.floor((ctx.log_abs(x) - 0.5 * math.log(n)) / ctx.regulator)
    if k:
        x = ctx.mul(x, ctx.unit_power(-k))
    eps = ctx.fund_unit
    eps_inv = ctx.unit_power(-1)
    while not ctx.ge_sqrt(x, n):
        x = ctx.mul(x, eps)
    while True:
        down = ctx.mul(x, eps_inv)
        if not ctx.ge_sqrt(down, n):
            return x
        x = down


# thin functional aliases ------------------------------------------------------

def qi_norm(ctx: FieldCtx, x: QuadInt) -> int:
    return ctx.norm(x)


def qi_trace(ctx: FieldCtx, x: QuadInt) -> int:
    return ctx.trace(x)


def qi_conj(ctx: FieldCtx, x: QuadInt) -> QuadInt:
    return ctx.conj(x)


def qi_mul(ctx: FieldCtx, x: QuadInt, y: QuadInt) -> QuadInt:
    return ctx.mul(x, y)


def qi_add(ctx: FieldCtx, x: QuadInt, y: QuadInt) -> QuadInt:
    return ctx.add(x, y)


def qi_sub(ctx: FieldCtx, x: QuadInt, y: QuadInt) -> QuadInt:
    return ctx.sub(x, y)


def embed(ctx: FieldCtx, x: QuadInt) -> tuple[float, float]:
    return ctx.embed(x)


def quadrat_surd(ctx: FieldCtx, q: QuadRat) -> Surd:
    p, r = ctx.half_coords(q.num)
    return Surd(p, r, ctx.D, 2 * q.den)


def quadrat_value(ctx: FieldCtx, q: QuadRat) -> float:
    x, _ = ctx.embed(q.num)
    return x / q.den


def fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"
