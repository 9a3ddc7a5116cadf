"""Exact quadratic irrationals ``(p + q*sqrt(n)) / r`` over Python integers.

No floating point is used for sign, comparison or floor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def sign_of(p: int, q: int, n: int) -> int:
    """Sign of ``p + q*sqrt(n)`` for integers p, q and n >= 0."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0 or n == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    lhs, rhs = p * p, q * q * n
    if lhs == rhs:
        return 0
    return sp if lhs > rhs else sq


def floor_sqrt_mul(q: int, n: int) -> int:
    """floor(q * sqrt(n)), exact."""
    s = isqrt(q * q * n)
    if q >= 0:
        return s
    return -s if s * s == q * q * n else -s - 1


@total_ordering
class Surd:
    """``(p + q*sqrt(n)) / r`` kept in a canonical form.

    The canonical form has ``r > 0``, ``n >= 0``, no common factor among
    ``p, q, r`` and a perfect-square radicand folded into ``p``.
    """

    __slots__ = ("p", "q", "n", "r")

    def __init__(self, p: int, q: int = 0, n: int = 0, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("Surd denominator is zero")
        if n < 0:
            raise ValueError("negative radicand")
        if q == 0 or n == 0:
            q, n = 0, 0
        elif _is_square(n):
            p, q, n = p + q * isqrt(n), 0, 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        self.p, self.q, self.n, self.r = p, q, n, r

    @classmethod
    def rational(cls, value) -> "Surd":
        f = Fraction(value)
        return cls(f.numerator, 0, 0, f.denominator)

    def __repr__(self) -> str:
        return f"Surd({self.p}, {self.q}, {self.n}, {self.r})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        op = "+" if self.q > 0 else "-"
        return f"({self.p} {op} {abs(self.q)}*sqrt({self.n}))/{self.r}"

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        return sign_of(self.p, self.q, self.n)

    def floor(self) -> int:
        return (self.p + floor_sqrt_mul(self.q, self.n)) // self.r

    def ceil(self) -> int:
        return -(-self).floor()

    def __float__(self) -> float:
        return (self.p + self.q * self.n ** 0.5) / self.r

    def __neg__(self) -> "Surd":
        return Surd(-self.p, -self.q, self.n, self.r)

    def _radicand_with(self, other: "Surd") -> int:
        if self.q and other.q and self.n != other.n:
            raise ValueError(f"cannot combine radicands {self.n} and {other.n}")
        return self.n or other.n

    def __add__(self, other) -> "Surd":
        if not isinstance(other, Surd):
            other = Surd.rational(other)
        n = self._radicand_with(other)
        return Surd(self.p * other.r + other.p * self.r,
                    self.q * other.r + other.q * self.r, n, self.r * other.r)

    __radd__ = __add__

    def __sub__(self, other) -> "Surd":
        if not isinstance(other, Surd):
            other = Surd.rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "Surd":
        return (-self) + other

    def cmp(self, other) -> int:
        """-1, 0 or 1 as self is below, equal to or above ``other``."""
        d = self - other
        return d.sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Surd)):
            try:
                return self.cmp(other) == 0
            except ValueError:
                return False
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Surd)):
            return self.cmp(other) < 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.n, self.r))


def surd_floor(s: Surd) -> int:
    return s.floor()


def surd_cmp(s: Surd, t) -> int:
    return s.cmp(t)
