"""Independent brute-force routines that the tests compare the library against.

None of these use the form cycles, the interval algorithm or the continued
fraction code; they scan coefficient boxes and test conditions exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd, isqrt

from wrtwist.field import FieldCtx, QuadInt


def brute_floor(p: int, q: int, n: int, r: int) -> int:
    """floor((p + q*sqrt(n))/r) by bracketing q*sqrt(n) between consecutive integers."""
    if r < 0:
        p, q, r = -p, -q, -r
    s = isqrt(q * q * n)
    # s <= |q| sqrt(n) < s + 1
    if s * s == q * q * n:
        qs_floor = s if q >= 0 else -s
    else:
        qs_floor = s if q >= 0 else -s - 1
    return (p + qs_floor) // r


def brute_unit(D: int, max_c: int = 10**7) -> tuple[int, int]:
    """Smallest unit a + c*w > 1 with c > 0, by scanning c upwards."""
    tr, nw = (1, (1 - D) // 4) if D % 4 == 1 else (0, -D)
    for c in range(1, max_c):
        best = None
        for t in (1, -1):
            # a^2 + a c tr + c^2 nw - t = 0
            disc = c * c * tr * tr - 4 * (c * c * nw - t)
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            for num in (-c * tr + s, -c * tr - s):
                if num % 2 == 0:
                    a = num // 2
                    val = a + c * ((tr + math.sqrt(D)) / 2 if tr else math.sqrt(D))
                    if val > 1 and (best is None or val < best[0]):
                        best = (val, a)
        if best is not None:
            return best[1], c
    raise RuntimeError("no unit found")


def brute_min_abs_norm(ctx: FieldCtx, a: int, b: int, d: int, R: int) -> int:
    best = None
    for m in range(-R, R + 1):
        for n in range(-R, R + 1):
            if m == 0 and n == 0:
                continue
            x = QuadInt(m * a + n * b, n * d)
            v = abs(ctx.norm(x))
            if best is None or v < best:
                best = v
    return best


def is_associate(ctx: FieldCtx, x: QuadInt, y: QuadInt) -> bool:
    q = ctx.divides(x, y)
    return q is not None and abs(ctx.norm(q)) == 1


def window_elements(ctx: FieldCtx, a: int, b: int, d: int, bound: int) -> list[QuadInt]:
    """Elements of the ideal with 0 < x < eps*sqrt(bound), |conj x| <= sqrt(bound)
    and 1 <= |N(x)| <= bound, scanning the coefficient box that window implies."""
    eps = ctx.embed(ctx.fund_unit)[0]
    rb = math.sqrt(bound)
    sd = math.sqrt(ctx.D)
    gap = sd if ctx.tr_omega else 2 * sd  # w - conj(w)
    w_hi = (ctx.tr_omega + sd) / 2 if ctx.tr_omega else sd
    w_lo = (ctx.tr_omega - sd) / 2 if ctx.tr_omega else -sd
    cmax = int((eps * rb + rb) / gap) + 2
    out = []
    for c in range(-cmax, cmax + 1):
        # a + c*conj(w) in [-rb, rb]
        lo = math.floor(-rb - c * w_lo) - 1
        hi = math.ceil(rb - c * w_lo) + 1
        for aa in range(lo, hi + 1):
            x = QuadInt(aa, c)
            n = abs(ctx.norm(x))
            if not 1 <= n <= bound:
                continue
            # membership in {a, b + d w}
            if c % d:
                continue
            k = c // d
            if (aa - k * b) % a:
                continue
            xv = aa + c * w_hi
            if 0 < xv < eps * rb * (1 + 1e-12):
                out.append(x)
    return out


def exhaustive_good_bases(ctx: FieldCtx) -> set[tuple[int, Fraction]]:
    """(f4, |cos|) over every good basis of the ring of integers, up to units.

    A good basis can be multiplied by a unit so that its twist parameter lies
    in [eps^-1/2, eps^1/2]; its twisted vectors then have length
    lam <= sqrt(2 sqrt(disc)/sqrt(3)), so every embedding coordinate is at
    most lam*sqrt(eps).  x is found by scanning c and the few a with small
    norm; y runs over the whole line y0 + k x inside the same window.
    """
    disc = ctx.disc
    eps = ctx.embed(ctx.fund_unit)[0]
    lam = math.sqrt(2 * math.sqrt(disc) / math.sqrt(3))
    L = lam * math.sqrt(eps) * (1 + 1e-9) + 1e-9
    B = isqrt(disc // 3)
    sd = math.sqrt(ctx.D)
    gap = sd if ctx.tr_omega else 2 * sd
    w_hi = (ctx.tr_omega + sd) / 2 if ctx.tr_omega else sd
    w_lo = (ctx.tr_omega - sd) / 2 if ctx.tr_omega else -sd
    cmax = int(2 * L / gap) + 2
    # c = 0 leaves only x = 1 primitive (up to sign)
    xs = [QuadInt(1, 0)]
    for c in range(1, cmax + 1):
        # |x| <= L and |conj x| <= L bound a; norm small forces a near -c*w or -c*conj(w)
        for root in (-c * w_hi, -c * w_lo):
            span = B / (c * gap) + 2
            for a in range(math.floor(root - span), math.ceil(root + span) + 1):
                x = QuadInt(a, c)
                n = ctx.norm(x)
                if n == 0 or abs(n) > B or gcd(a, c) != 1:
                    continue
                xv, xbar = a + c * w_hi, a + c * w_lo
                if abs(xv) <= L and abs(xbar) <= L:
                    xs.append(x)
    xs = sorted(set(xs))
    found = set()
    K = disc
    for x in xs:
        a, c = x
        # y0 with a*d - c*b = 1, i.e. det(x, y0) = 1 in {1, w}
        g, s, t = _xgcd(a, c)
        y0 = QuadInt(-t, s)
        xv, xbar = a + c * w_hi, a + c * w_lo
        y0v, y0bar = y0.a + y0.c * w_hi, y0.a + y0.c * w_lo
        klo, khi = -math.inf, math.inf
        for base, step in ((y0v, xv), (y0bar, xbar)):
            if step == 0:
                continue
            k1, k2 = (-L - base) / step, (L - base) / step
            if k1 > k2:
                k1, k2 = k2, k1
            klo, khi = max(klo, k1), min(khi, k2)
        nx = ctx.norm(x)
        for k in range(math.floor(klo) - 1, math.ceil(khi) + 2):
            y = QuadInt(y0.a + k * a, y0.c + k * c)
            ny = ctx.norm(y)
            if abs(ny) > B:
                continue
            f4 = 4 * (nx * nx + nx * ny + ny * ny) - K
            if f4 <= 0:
                tr = ctx.trace(ctx.mul(x, ctx.conj(y)))
                found.add((f4, abs(Fraction(nx + ny, tr))))
    return found


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        q, x, y = x // y, y, x % y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def brute_markoff(max_c: int) -> set[tuple[int, int, int]]:
    """Sorted solutions of a^2 + b^2 + c^2 = 3abc with c <= max_c, by direct search over (b, c)."""
    out = set()
    for c in range(1, max_c + 1):
        for b in range(1, c + 1):
            # a^2 - 3bc a + (b^2 + c^2) = 0
            disc = 9 * b * b * c * c - 4 * (b * b + c * c)
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            for num in (3 * b * c - s, 3 * b * c + s):
                if num % 2 == 0 and 1 <= num // 2 <= b:
                    out.add((num // 2, b, c))
    return out
