"""The closed geodesic traced by the twists T_alpha = diag(alpha, 1/alpha) of an ideal lattice.

Each twisted lattice is recorded by the point tau = y/x of the upper half-plane,
where x, y are the twisted basis vectors read as complex numbers.  Sampling
keeps an exact basis of the ideal and re-reduces it at every step, so the
point stays inside the fundamental domain without float drift even when
alpha is astronomically large.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DegenerateBasis, OutOfRange
from .field import FieldCtx, QuadInt
from .ideals import Ideal
from .kernels import reduce_point

CLOSURE_TOL = 1e-7
ARC_TOL = 1e-12
# largest jump in log(alpha) between re-reductions; keeps the float ratio well conditioned
MAX_LOG_STEP = 0.25


class UhpPoint(NamedTuple):
    x: float
    y: float


def tau(basis: tuple[float, float, float, float], alpha: float) -> UhpPoint:
    """Point of the twisted basis with columns (a, c) and (b, d); basis = (a, b, c, d)."""
    a, b, c, d = basis
    det = a * d - b * c
    if not det > 0:
        raise DegenerateBasis(f"need ad - bc > 0, got {det}")
    if not alpha > 0:
        raise OutOfRange(f"alpha must be positive, got {alpha}")
    a4 = alpha ** 4
    den = a * a * a4 + c * c
    return UhpPoint((a * b * a4 + c * d) / den, alpha * alpha * det / den)


def reduce_to_fundamental_domain(z: UhpPoint) -> UhpPoint:
    if not z.y > 0:
        raise OutOfRange(f"point must lie in the upper half-plane, got {z}")
    return UhpPoint(*reduce_point(z.x, z.y))


@dataclass
class Crossing:
    alpha: float
    point: UhpPoint
    abs_cos: float


@dataclass
class GeodesicTrace:
    alphas: list[float]
    points: list[UhpPoint]
    crossings: list[Crossing] = field(default_factory=list)
    period_exponent: float = 1.0
    closed: bool = True

    def crossing_classes(self, digits: int = 7) -> list[float]:
        return sorted({round(c.abs_cos, digits) for c in self.crossings}, reverse=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["alpha", "x", "y", "dist_to_arc"])
        for a, p in zip(self.alphas, self.points):
            w.writerow([repr(a), repr(p.x), repr(p.y), repr(math.hypot(p.x, p.y) - 1.0)])
        return buf.getvalue()


class _Tracker:
    """An exact basis (X, Y) of the ideal whose twisted point stays reduced."""

    def __init__(self, ctx: FieldCtx, X: QuadInt, Y: QuadInt):
        self.ctx = ctx
        self.X, self.Y = X, Y

    def point(self, log_alpha: float, X: QuadInt | None = None, Y: QuadInt | None = None) -> complex:
        X = self.X if X is None else X
        Y = self.Y if Y is None else Y
        lx = self._twist(X, log_alpha)
        ly = self._twist(Y, log_alpha)
        return ly / lx

    def _twist(self, q: QuadInt, log_alpha: float) -> complex:
        ctx = self.ctx
        # twisted coordinates alpha*q and conj(q)/alpha, scaled by a common
        # factor so neither overflows for large alpha
        s, sbar = ctx.embed(q)
        return complex(s * math.exp(log_alpha), sbar * math.exp(-log_alpha))

    def reduce(self, log_alpha: float) -> complex:
        ctx = self.ctx
        z = self.point(log_alpha)
        if z.imag < 0:
            self.Y = ctx.neg(self.Y)
            z = self.point(log_alpha)
        for _ in range(10000):
            m = math.ceil(z.real - 0.5)
            if m:
                self.Y = ctx.sub(self.Y, ctx.scale(m, self.X))
                z = self.point(log_alpha)
            if abs(z) ** 2 >= 1.0 - ARC_TOL:
                return z
            # z -> -1/z : (Y, X) -> (-X, Y)
            self.X, self.Y = self.Y, ctx.neg(self.X)
            z = self.point(log_alpha)
        raise RuntimeError("reduction did not terminate")


def _canonical(z: complex) -> UhpPoint:
    x, y = z.real, z.imag
    if x <= -0.5:
        x += 1.0
    if x < 0 and x * x + y * y < 1.0 + ARC_TOL:
        x = -x
    return UhpPoint(x, y)


def _close(p: UhpPoint, q: UhpPoint) -> bool:
    """Equality in the fundamental domain, allowing for its boundary identifications."""
    tol = CLOSURE_TOL * max(1.0, p.y)
    if abs(p.y - q.y) >= tol:
        return False
    dx = abs(p.x - q.x)
    if min(dx, abs(dx - 1.0)) < tol:
        return True
    on_arc = p.x * p.x + p.y * p.y < 1.0 + tol
    return on_arc and abs(p.x + q.x) < tol


def _walk(ctx: FieldCtx, I: Ideal, logs: list[float], want_crossings: bool):
    u, v = I.basis
    tr = _Tracker(ctx, u, v)
    points: list[UhpPoint] = []
    crossings: list[Crossing] = []
    prev = 0.0
    for i, t in enumerate(logs):
        if want_crossings and i:
            crossings.extend(_crossings_between(tr, prev, t))
        else:
            _advance(tr, prev, t)
        z = tr.reduce(t)
        points.append(_canonical(z))
        prev = t
    return points, crossings


def _advance(tr: _Tracker, t0: float, t1: float) -> None:
    steps = math.ceil(abs(t1 - t0) / MAX_LOG_STEP)
    for k in range(1, steps):
        tr.reduce(t0 + (t1 - t0) * k / steps)


def _crossings_between(tr: _Tracker, t0: float, t1: float) -> list[Crossing]:
    """Crossings of the circles |z - m| = 1 by the curve of the fixed basis on [t0, t1]."""
    out = []
    z1 = tr.point(t1)
    for m in (-1, 0, 1):
        if abs(z1 - m) >= 1.0:
            continue
        z0 = tr.point(t0)
        if abs(z0 - m) < 1.0:
            continue
        lo, hi = t0, t1
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if abs(tr.point(mid) - m) < 1.0:
                hi = mid
            else:
                lo = mid
            if hi - lo < 1e-15 * max(1.0, abs(lo)):
                break
        t = 0.5 * (lo + hi)
        z = tr.point(t)
        c = abs(z.real - m)
        if c <= 0.5 + 1e-9:
            out.append(Crossing(math.exp(t), UhpPoint(z.real, z.imag), min(c, 0.5)))
    return out


def period_exponent(I: Ideal, max_doublings: int = 6) -> float:
    """Smallest e in {1/2, 1, 2, ...} for which the reduced curve over [1, eps^e] closes."""
    ctx = I.ctx
    R = ctx.regulator
    e = 0.5
    probes = [0.0, 0.137, 0.391]
    for _ in range(max_doublings):
        ok = True
        for p in probes:
            a, _ = _walk(ctx, I, [p * R, (p + e) * R], False)
            # walk from the start so the basis history does not matter
            if not _close(a[0], a[1]):
                ok = False
                break
        if ok:
            return e
        e *= 2
    raise RuntimeError("geodesic did not close")


def trace_geodesic(I: Ideal, n: int, crossing_grid: int | None = None) -> GeodesicTrace:
    """n points log-uniform over one period, plus the crossings of the well-rounded arc.

    Crossings are located on a grid of ``crossing_grid`` steps (default max(n, 4000))
    and refined by bisection in log(alpha).
    """
    if n < 2:
        raise OutOfRange(f"need at least 2 samples, got {n}")
    ctx = I.ctx
    e = period_exponent(I)
    span = e * ctx.regulator
    logs = [span * k / (n - 1) for k in range(n)]
    points, _ = _walk(ctx, I, logs, False)
    g = max(n, 4000) if crossing_grid is None else crossing_grid
    g = max(g, math.ceil(span / MAX_LOG_STEP))
    glogs = [span * k / g for k in range(g + 1)]
    _, crossings = _walk(ctx, I, glogs, True)
    closed = _close(points[0], points[-1])
    return GeodesicTrace([math.exp(t) for t in logs], points, crossings, e, closed)


def sample_geodesic(I: Ideal, n: int) -> list[UhpPoint]:
    return trace_geodesic(I, n).points


def geodesic_csv(I: Ideal, n: int) -> str:
    return trace_geodesic(I, n).to_csv()
