"""Indefinite binary quadratic forms ``A X^2 + B XY + C Y^2`` of non-square discriminant.

Reduction and cycles follow the classical rho operator.  Transformation
matrices are tracked as ``(m00, m01, m10, m11)`` with ``f o M = g`` meaning
``g(X, Y) = f(m00 X + m01 Y, m10 X + m11 Y)``.
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

Matrix = tuple[int, int, int, int]
IDENTITY: Matrix = (1, 0, 0, 1)


class Form(NamedTuple):
    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def __call__(self, X: int, Y: int) -> int:
        return self.A * X * X + self.B * X * Y + self.C * Y * Y


def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    return (m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
            m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3])


def mat_inv(m: Matrix) -> Matrix:
    """Inverse of a determinant-one integer matrix."""
    return (m[3], -m[1], -m[2], m[0])


def transform(f: Form, m: Matrix) -> Form:
    p, q, r, s = m
    A, B, C = f
    return Form(A * p * p + B * p * r + C * r * r,
                2 * A * p * q + B * (p * s + q * r) + 2 * C * r * s,
                A * q * q + B * q * s + C * s * s)


def is_reduced(f: Form, delta: int | None = None) -> bool:
    """0 < B < sqrt(D) and sqrt(D) - B < 2|A| < sqrt(D) + B, exactly."""
    A, B, _ = f
    if delta is None:
        delta = f.disc
    if B <= 0 or B * B >= delta:
        return False
    a2 = 2 * abs(A)
    if (a2 + B) ** 2 <= delta:
        return False
    return a2 - B < 0 or (a2 - B) ** 2 < delta


def rho(f: Form, delta: int, root: int) -> tuple[Form, Matrix]:
    """One rho step ``(A, B, C) -> (C, B', C')``; ``root`` is isqrt(delta)."""
    A, B, C = f
    c = abs(C)
    if C * C > delta:
        # B' = -B mod 2|C| in (-|C|, |C|]
        lo = -c + 1
    else:
        # B' = -B mod 2|C| in (sqrt(D) - 2|C|, sqrt(D))
        lo = root - 2 * c + 1
    b_new = lo + ((-B - lo) % (2 * c))
    shift = (b_new + B) // (2 * C)
    return Form(C, b_new, (b_new * b_new - delta) // (4 * C)), (0, -1, 1, shift)


def reduce_form(f: Form) -> tuple[Form, Matrix]:
    """A reduced form properly equivalent to f and the matrix reaching it."""
    delta = f.disc
    root = isqrt(delta)
    m = IDENTITY
    while not is_reduced(f, delta):
        f, step = rho(f, delta, root)
        m = mat_mul(m, step)
    return f, m


def cycle(f: Form) -> list[tuple[Form, Matrix]]:
    """The rho-cycle of a reduced form with cumulative matrices from f."""
    delta = f.disc
    root = isqrt(delta)
    out = [(f, IDENTITY)]
    g, m = f, IDENTITY
    while True:
        g, step = rho(g, delta, root)
        m = mat_mul(m, step)
        if g == f:
            return out
        out.append((g, m))


def min_abs_value(f: Form) -> int:
    """min |f(X, Y)| over nonzero integer vectors, read off the reduced cycle."""
    red, _ = reduce_form(f)
    return min(abs(g.A) for g, _ in cycle(red))
