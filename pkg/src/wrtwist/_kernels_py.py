"""Pure-Python versions of the hot loops; the compiled module mirrors these signatures."""

from __future__ import annotations

import math


def sqrt_residues(delta: int, m: int) -> list[int]:
    """All t in [0, 2m) with t*t == delta (mod 4m)."""
    mod = 4 * m
    target = delta % mod
    return [t for t in range(2 * m) if (t * t) % mod == target]


def box_min_abs_form(A: int, B: int, C: int, R: int) -> int:
    """min |A m^2 + B mn + C n^2| over nonzero (m, n) with |m|, |n| <= R."""
    best = -1
    for m in range(0, R + 1):
        for n in range(-R, R + 1):
            if m == 0 and n <= 0:
                continue
            v = abs(A * m * m + B * m * n + C * n * n)
            if v and (best < 0 or v < best):
                best = v
    return best


def good_basis_keys(A: int, B: int, C: int, disc: int, R: int) -> set[int]:
    """Keys 4(p^2 + pq + q^2) - disc <= 0 over all bases {(a,c), (b,d)} of Z^2
    with |a|, |b|, |c|, |d| <= R and ad - bc = +-1, where p, q are the values of
    the form at the two basis vectors."""
    keys: set[int] = set()
    for a in range(-R, R + 1):
        for c in range(-R, R + 1):
            if math.gcd(a, c) != 1:
                continue
            p = A * a * a + B * a * c + C * c * c
            if 3 * p * p > disc:
                continue
            for target in (1, -1):
                for b, d in _completions(a, c, target, R):
                    q = A * b * b + B * b * d + C * d * d
                    k = 4 * (p * p + p * q + q * q) - disc
                    if k <= 0:
                        keys.add(k)
    return keys


def _completions(a: int, c: int, target: int, R: int):
    """All (b, d) in the box with a*d - b*c == target (gcd(a, c) == 1)."""
    # extended gcd: s*a + t*c == 1  ->  d0 = s*target, b0 = -t*target
    s0, s1, t0, t1, x, y = 1, 0, 0, 1, a, c
    while y:
        q = x // y
        x, y = y, x - q * y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        s0, t0 = -s0, -t0
    b0, d0 = -t0 * target, s0 * target
    # general solution (b0 + k*a, d0 + k*c)
    lo, hi = None, None
    for base, step in ((b0, a), (d0, c)):
        if step == 0:
            if abs(base) > R:
                return
            continue
        if step < 0:
            base, step = -base, -step
        # -R <= base + k*step <= R
        k1 = -((R + base) // step)
        k2 = (R - base) // step
        lo = k1 if lo is None else max(lo, k1)
        hi = k2 if hi is None else min(hi, k2)
    for k in range(lo, hi + 1):
        yield b0 + k * a, d0 + k * c


def reduce_points(xs: list[float], ys: list[float]) -> tuple[list[float], list[float]]:
    """Map each (x, y) into the standard fundamental domain."""
    out_x, out_y = [], []
    for x, y in zip(xs, ys):
        x, y = reduce_point(x, y)
        out_x.append(x)
        out_y.append(y)
    return out_x, out_y


def reduce_point(x: float, y: float) -> tuple[float, float]:
    for _ in range(10000):
        x -= math.ceil(x - 0.5)
        r = x * x + y * y
        if r >= 1.0 - 1e-12:
            break
        x, y = -x / r, y / r
    if x == -0.5:
        x = 0.5
    if x < 0 and x * x + y * y < 1.0 + 1e-12:
        # boundary arc: (x, y) ~ (-x, y)
        x = -x
    return x, y
