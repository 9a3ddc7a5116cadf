# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in _kernels_py; same signatures and results."""

from libc.math cimport ceil
from . import _kernels_py

cdef long long LIMIT = 1LL << 28


def sqrt_residues(delta, m):
    """All t in [0, 2m) with t*t == delta (mod 4m)."""
    if m >= LIMIT:
        return _kernels_py.sqrt_residues(delta, m)
    cdef long long mod = 4 * <long long>m
    cdef long long target = delta % mod
    cdef long long t, top = 2 * <long long>m
    out = []
    for t in range(top):
        if (t * t) % mod == target:
            out.append(t)
    return out


def box_min_abs_form(A, B, C, R):
    if max(abs(A), abs(B), abs(C)) >= LIMIT or R >= 4096:
        return _kernels_py.box_min_abs_form(A, B, C, R)
    cdef long long a = A, b = B, c = C, r = R
    cdef long long m, n, v, best = -1
    for m in range(0, r + 1):
        for n in range(-r, r + 1):
            if m == 0 and n <= 0:
                continue
            v = a * m * m + b * m * n + c * n * n
            if v < 0:
                v = -v
            if v and (best < 0 or v < best):
                best = v
    return best


cdef inline long long _floordiv(long long x, long long y):
    cdef long long q = x / y
    if (x % y != 0) and ((x < 0) != (y < 0)):
        q -= 1
    return q


def good_basis_keys(A, B, C, disc, R):
    if max(abs(A), abs(B), abs(C)) >= (1 << 16) or R > 1000 or disc >= LIMIT:
        return _kernels_py.good_basis_keys(A, B, C, disc, R)
    cdef long long fa = A, fb = B, fc = C, dsc = disc, r = R
    cdef long long a, c, p, q, k, b0, d0, s0, s1, t0, t1, x, y, qq, tmp
    cdef long long lo, hi, k1, k2, base, step, bb, dd, target
    cdef int i, skip, have
    keys = set()
    for a in range(-r, r + 1):
        for c in range(-r, r + 1):
            # gcd via the extended algorithm
            s0, s1, t0, t1, x, y = 1, 0, 0, 1, a, c
            while y != 0:
                qq = _floordiv(x, y)
                tmp = x - qq * y; x = y; y = tmp
                tmp = s0 - qq * s1; s0 = s1; s1 = tmp
                tmp = t0 - qq * t1; t0 = t1; t1 = tmp
            if x < 0:
                x = -x; s0 = -s0; t0 = -t0
            if x != 1:
                continue
            p = fa * a * a + fb * a * c + fc * c * c
            if 3 * p * p > dsc:
                continue
            for target in (1, -1):
                b0 = -t0 * target
                d0 = s0 * target
                have = 0
                skip = 0
                lo = 0
                hi = 0
                for i in range(2):
                    if i == 0:
                        base = b0; step = a
                    else:
                        base = d0; step = c
                    if step == 0:
                        if base > r or base < -r:
                            skip = 1
                        continue
                    if step < 0:
                        base = -base; step = -step
                    k1 = -_floordiv(r + base, step)
                    k2 = _floordiv(r - base, step)
                    if not have:
                        lo = k1; hi = k2; have = 1
                    else:
                        if k1 > lo:
                            lo = k1
                        if k2 < hi:
                            hi = k2
                if skip or not have:
                    continue
                for k in range(lo, hi + 1):
                    bb = b0 + k * a
                    dd = d0 + k * c
                    q = fa * bb * bb + fb * bb * dd + fc * dd * dd
                    tmp = 4 * (p * p + p * q + q * q) - dsc
                    if tmp <= 0:
                        keys.add(tmp)
    return keys


cdef inline void _reduce(double *px, double *py):
    cdef double x = px[0], y = py[0], r
    cdef int it
    for it in range(10000):
        x -= ceil(x - 0.5)
        r = x * x + y * y
        if r >= 1.0 - 1e-12:
            break
        x = -x / r
        y = y / r
    if x == -0.5:
        x = 0.5
    if x < 0 and x * x + y * y < 1.0 + 1e-12:
        x = -x
    px[0] = x
    py[0] = y


def reduce_points(xs, ys):
    cdef Py_ssize_t i, n = len(xs)
    cdef double x, y
    out_x = [0.0] * n
    out_y = [0.0] * n
    for i in range(n):
        x = xs[i]
        y = ys[i]
        _reduce(&x, &y)
        out_x[i] = x
        out_y[i] = y
    return out_x, out_y
