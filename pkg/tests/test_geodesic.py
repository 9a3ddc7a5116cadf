import csv
import io
import math

import pytest
from hypothesis import given, settings, strategies as st

from wrtwist.classify import square_free_range, twists_of_field
from wrtwist.errors import DegenerateBasis, OutOfRange
from wrtwist.field import embed, new_field
from wrtwist.geodesic import (UhpPoint, geodesic_csv, period_exponent, reduce_to_fundamental_domain,
                              sample_geodesic, tau, trace_geodesic)
from wrtwist.ideals import ideal_from_canonical, unit_ideal


def test_tau_examples():
    assert tau((1, 0, 0, 1), 1.0) == UhpPoint(0.0, 1.0)
    assert tau((1, 0, 0, 1), 2.0) == UhpPoint(0.0, 0.25)
    with pytest.raises(DegenerateBasis):
        tau((1, 1, 1, 1), 1.0)
    with pytest.raises(OutOfRange):
        tau((1, 0, 0, 1), 0.0)


def test_tau_d5_orthogonal():
    ctx = new_field(5)
    (a, c), (b, d) = embed(ctx, (1, 0)), embed(ctx, (0, 1))
    # columns (a, c), (b, d) must be positively oriented
    if a * d - b * c < 0:
        b, d = -b, -d
    z = reduce_to_fundamental_domain(tau((a, b, c, d), (-(1 - 5 ** 0.5) / (1 + 5 ** 0.5)) ** 0.25))
    assert z.x == pytest.approx(0.0, abs=1e-9) and z.y == pytest.approx(1.0, abs=1e-9)


def test_reduction_examples():
    assert reduce_to_fundamental_domain(UhpPoint(0.6, 2.0)) == pytest.approx((-0.4, 2.0))
    assert reduce_to_fundamental_domain(UhpPoint(0.3, 0.4)) == pytest.approx((-0.2, 1.6))
    assert reduce_to_fundamental_domain(UhpPoint(0.0, 1.0)) == (0.0, 1.0)
    with pytest.raises(OutOfRange):
        reduce_to_fundamental_domain(UhpPoint(0.0, -1.0))


def _in_domain(p):
    return -0.5 - 1e-12 < p.x <= 0.5 + 1e-12 and p.x * p.x + p.y * p.y >= 1 - 1e-12 and p.y > 0


@settings(max_examples=200)
@given(st.floats(-50, 50), st.floats(1e-3, 50))
def test_reduction_lands_in_domain(x, y):
    assert _in_domain(reduce_to_fundamental_domain(UhpPoint(x, y)))


_S, _T, _TI = (0, -1, 1, 0), (1, 1, 0, 1), (1, -1, 0, 1)


def _word(gens):
    m = (1, 0, 0, 1)
    for g in gens:
        m = (m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3],
             m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3])
    return m


def _same_point(p, q, tol):
    if abs(p.y - q.y) > tol:
        return False
    dx = abs(p.x - q.x)
    return min(dx, abs(dx - 1)) < tol or abs(p.x + q.x) < tol and abs(p.x * p.x + p.y * p.y - 1) < tol


@settings(max_examples=150)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3),
       st.lists(st.sampled_from([_S, _T, _TI]), max_size=8).map(_word), st.floats(0.3, 3))
def test_tau_unimodular_invariance(a, b, c, d, m, alpha):
    """Right-multiplying the basis by an SL2(Z) matrix leaves the reduced point fixed."""
    if a * d - b * c < 0.5:
        return
    p, q, r, s = m
    a2, c2 = a * p + b * r, c * p + d * r
    b2, d2 = a * q + b * s, c * q + d * s
    z1 = reduce_to_fundamental_domain(tau((a, b, c, d), alpha))
    z2 = reduce_to_fundamental_domain(tau((a2, b2, c2, d2), alpha))
    assert _same_point(z1, z2, 1e-9)


@pytest.mark.parametrize("D,count", [(5, 1), (17, 2), (57, 3)])
def test_figure_counts(D, count):
    tr = trace_geodesic(unit_ideal(new_field(D)), 500)
    assert tr.closed and len(tr.crossing_classes()) == count


@pytest.mark.parametrize("D", square_free_range(2, 120))
def test_crossings_match_enumeration(D):
    tr = trace_geodesic(unit_ideal(new_field(D)), 50)
    want = sorted({float(t.abs_cos) for t in twists_of_field(D)}, reverse=True)
    got = tr.crossing_classes()
    assert tr.closed
    assert len(got) == len(want)
    assert all(abs(g - w) <= 1e-6 for g, w in zip(got, want))
    assert all(_in_domain(p) for p in tr.points)


@pytest.mark.parametrize("D", [2, 3, 5, 6, 7, 13, 17])
def test_period_depends_on_unit_norm(D):
    ctx = new_field(D)
    assert period_exponent(unit_ideal(ctx)) == (2.0 if ctx.fund_unit_norm == -1 else 1.0)


def test_non_principal_ideal_trace():
    ctx = new_field(201)
    I = ideal_from_canonical(ctx, 2, 1, 1)
    tr = trace_geodesic(I, 100)
    assert tr.closed and len(tr.crossing_classes()) >= 1


def test_csv_columns():
    text = geodesic_csv(unit_ideal(new_field(17)), 20)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["alpha", "x", "y", "dist_to_arc"]
    assert len(rows) == 21
    for r in rows[1:]:
        x, y, dist = float(r[1]), float(r[2]), float(r[3])
        assert dist == pytest.approx(math.hypot(x, y) - 1.0)


def test_sample_size_checked():
    with pytest.raises(OutOfRange):
        sample_geodesic(unit_ideal(new_field(5)), 1)
