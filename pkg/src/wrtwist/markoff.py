"""Markoff triples and the ideal lattices they define in Q(sqrt(9c^2 - 4)).

For a triple (a, b, c) with c odd, k solves a*k = b (mod c) and
k^2 + 1 = l*c.  The ideal I_c = {c, b0 + w} and the two good bases
extending c have closed forms.  Cosines are reported keyed by the integer
beta that selects the basis, beta in {floor((-2k - r)/(2c)), floor((-2k + r)/(2c))}
with r = sqrt(6c^2 - 4).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import forms
from .errors import COne, EvenC, NotSquareFree
from .field import FieldCtx, QuadInt, _is_square_free, new_field
from .forms import Form
from .ideals import Ideal, ideal_from_canonical, min_nonzero_abs_norm
from .surd import Surd
from .twists import BasisPair


class MarkoffTriple(NamedTuple):
    a: int
    b: int
    c: int

    def check(self) -> bool:
        a, b, c = self
        return a * a + b * b + c * c == 3 * a * b * c


@dataclass(frozen=True)
class MarkoffIdealData:
    triple: MarkoffTriple
    k: int
    ell: int
    field: FieldCtx
    ideal: Ideal


@dataclass(frozen=True)
class MarkoffBasis:
    beta: int
    x: QuadInt
    y: QuadInt
    cos_theta: Fraction


@dataclass(frozen=True)
class MarkoffMpd:
    min_norm: int
    n_lambda: float
    s_hat: float
    equals_s_hat: bool
    exceeds_third: bool
    maximal_order: bool


def markoff_tree(max_c: int) -> list[MarkoffTriple]:
    """All Markoff triples with largest entry <= max_c, breadth first from (1, 1, 1)."""
    if max_c < 1:
        return []
    start = MarkoffTriple(1, 1, 1)
    seen = {start}
    queue = deque([start])
    while queue:
        a, b, c = queue.popleft()
        for t in ((3 * b * c - a, b, c), (a, 3 * a * c - b, c), (a, b, 3 * a * b - c)):
            s = MarkoffTriple(*sorted(t))
            if s.c <= max_c and s.a > 0 and s not in seen:
                seen.add(s)
                queue.append(s)
    return sorted(seen, key=lambda t: (t.c, t.b, t.a))


def odd_markoff_triples(max_c: int) -> list[MarkoffTriple]:
    return [t for t in markoff_tree(max_c) if t.c % 2 == 1]


def markoff_k_ell(t: MarkoffTriple) -> tuple[int, int]:
    a, b, c = t
    if c == 1:
        return 0, 1
    k = (b * pow(a, -1, c)) % c
    ell, rem = divmod(k * k + 1, c)
    assert rem == 0
    return k, ell


def markoff_discriminant(t: MarkoffTriple) -> int:
    return 9 * t.c * t.c - 4


def _ideal_offset(c: int, k: int) -> int:
    return k - (c + 1) // 2 if k >= (c + 1) // 2 else k + (c - 1) // 2


def markoff_form(t: MarkoffTriple) -> Form:
    """Q(X, Y) = c X^2 + (3c - 2k) XY + (l - 3k) Y^2, of discriminant 9c^2 - 4."""
    k, ell = markoff_k_ell(t)
    c = t.c
    return Form(c, 3 * c - 2 * k, ell - 3 * k)


def markoff_ideal(t: MarkoffTriple) -> MarkoffIdealData:
    if t.c % 2 == 0:
        raise EvenC(f"c must be odd, got {t.c}")
    k, ell = markoff_k_ell(t)
    c = t.c
    D = markoff_discriminant(t)
    if not _is_square_free(D):
        raise NotSquareFree(f"9c^2 - 4 = {D} is not square-free; the Markoff ideal lies in a non-maximal order")
    ctx = new_field(D)
    b = _ideal_offset(c, k) % c
    return MarkoffIdealData(t, k, ell, ctx, ideal_from_canonical(ctx, c, b, 1))


def _norm(x: QuadInt, D: int) -> int:
    # w = (1 + sqrt(D))/2, Tr(w) = 1, N(w) = (1 - D)/4
    return x.a * x.a + x.a * x.c + x.c * x.c * ((1 - D) // 4)


def _trace_x_conj_y(x: QuadInt, y: QuadInt, D: int) -> int:
    # conj(y) = (y.a + y.c) - y.c*w ; Tr(a + c w) = 2a + c
    ya, yc = y.a + y.c, -y.c
    nw = (1 - D) // 4
    prod_a = x.a * ya - x.c * yc * nw
    prod_c = x.a * yc + x.c * ya + x.c * yc
    return 2 * prod_a + prod_c


def markoff_betas(c: int, k: int) -> tuple[int, int]:
    r2 = 6 * c * c - 4
    return (Surd(-2 * k, -1, r2, 2 * c).floor(), Surd(-2 * k, 1, r2, 2 * c).floor())


def markoff_cos_closed_form(beta: int, c: int, k: int) -> Fraction:
    num = (beta * beta + beta - 1) * c * c + (2 * beta + 1) * k * c + k * k + 1
    den = (2 * beta + 1) * c * c + 2 * k * c
    return Fraction(num, den)


def markoff_good_bases(t: MarkoffTriple) -> tuple[MarkoffBasis, MarkoffBasis]:
    """The two good bases {c, beta*c + k + (c-1)/2 + w} with their cosines.

    Works from the closed forms alone, so it does not need 9c^2 - 4 to be square-free.
    """
    c = t.c
    if c % 2 == 0:
        raise EvenC(f"c must be odd, got {c}")
    if c == 1:
        raise COne("c = 1 has a single orthogonal twist; no Markoff pair of bases")
    k, _ = markoff_k_ell(t)
    D = markoff_discriminant(t)
    x = QuadInt(c, 0)
    out = []
    for beta in markoff_betas(c, k):
        y = QuadInt(beta * c + k + (c - 1) // 2, 1)
        cos = markoff_cos_closed_form(beta, c, k)
        # the closed form must agree with (N(x) + N(y)) / Tr(x conj(y))
        direct = Fraction(_norm(x, D) + _norm(y, D), _trace_x_conj_y(x, y, D))
        assert cos == direct, (t, beta, cos, direct)
        out.append(MarkoffBasis(beta, x, y, cos))
    return out[0], out[1]


def markoff_basis_pair(data: MarkoffIdealData, mb: MarkoffBasis) -> BasisPair:
    return BasisPair(data.ideal, mb.x, mb.y)


def fibonacci_triples(count: int) -> list[MarkoffTriple]:
    """(1, F_{2n-1}, F_{2n+1}) with odd largest entry, F_1 = F_2 = 1."""
    out = []
    f = [0, 1, 1]
    n = 1
    while len(out) < count:
        while len(f) <= 2 * n + 1:
            f.append(f[-1] + f[-2])
        t = MarkoffTriple(1, f[2 * n - 1], f[2 * n + 1])
        if t.c % 2 == 1 and t.c > 1:
            out.append(t)
        n += 1
    return out


def pell_triples(count: int) -> list[MarkoffTriple]:
    """(2, P_{2n-2}, P_{2n}) for n >= 3, with P_1 = 0, P_2 = 1, P_n = 2P_{n-1} + P_{n-2}."""
    out = []
    p = [None, 0, 1]
    n = 3
    while len(out) < count:
        while len(p) <= 2 * n:
            p.append(2 * p[-1] + p[-2])
        out.append(MarkoffTriple(2, p[2 * n - 2], p[2 * n]))
        n += 1
    return out


def limiting_cosines() -> tuple[float, float, float, float]:
    """Limits along the Fibonacci (beta = -2, beta = 0) and Pell (beta = -2, beta = 0) families."""
    r5, r2 = math.sqrt(5), math.sqrt(2)
    return 0.0, (6 - 4 * r5) / 11, (3 - r2) / 7, (15 - 11 * r2) / 17


def markoff_mpd(t: MarkoffTriple) -> MarkoffMpd:
    """Minimum product distance of the lattice of I_c, computed without assuming uniqueness.

    When 9c^2 - 4 is not square-free the minimum is read off the Markoff form
    itself (the lattice then belongs to the order of that discriminant).
    """
    c = t.c
    if c % 2 == 0:
        raise EvenC(f"c must be odd, got {c}")
    D = markoff_discriminant(t)
    maximal = _is_square_free(D)
    if maximal:
        data = markoff_ideal(t)
        min_norm = min_nonzero_abs_norm(data.ideal)
    else:
        min_norm = forms.min_abs_value(markoff_form(t)) * c
    root = math.sqrt(D)
    s_k = 1 + math.isqrt(D) // 3
    return MarkoffMpd(
        min_norm=min_norm,
        n_lambda=min_norm / (c * root),
        s_hat=s_k / root,
        # min_norm / (c sqrt(D)) == s_k / sqrt(D)  <=>  min_norm == c * s_k
        equals_s_hat=min_norm == c * s_k,
        # (min_norm / c)^2 * 9 > D
        exceeds_third=9 * min_norm * min_norm > D * c * c,
        maximal_order=maximal,
    )
