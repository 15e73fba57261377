import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koebe_extremal import extremal as ex
from koebe_extremal.analysis import is_boundary_simple
from koebe_extremal.analysis.univalence import interior_critical_points, segment_crossings


def brute_crossings(z):
    m = len(z)
    out = set()

    def orient(a, b, c):
        return (b - a).real * (c - a).imag - (b - a).imag * (c - a).real

    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            a, b, c, d = z[i], z[(i + 1) % m], z[j], z[(j + 1) % m]
            if max(a.real, b.real) < min(c.real, d.real) or max(c.real, d.real) < min(a.real, b.real):
                continue
            if max(a.imag, b.imag) < min(c.imag, d.imag) or max(c.imag, d.imag) < min(a.imag, b.imag):
                continue
            if orient(a, b, c) * orient(a, b, d) <= 0 and orient(c, d, a) * orient(c, d, b) <= 0:
                out.add((i, j))
    return out


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.floats(-1, 1), st.floats(-1, 1)), min_size=4, max_size=25))
def test_sweep_matches_brute_force(pts):
    z = np.array([complex(x, y) for x, y in pts])
    ci, cj, cu, cv = segment_crossings(z)
    assert set(zip(ci.tolist(), cj.tolist())) == brute_crossings(z)
    assert np.all((cu >= 0) & (cu <= 1) & (cv >= 0) & (cv <= 1))


def test_convex_polygon_has_no_crossings():
    z = np.exp(2j * np.pi * np.arange(100) / 100)
    assert segment_crossings(z)[0].size == 0


def test_figure_eight():
    t = np.linspace(0, 2 * np.pi, 400, endpoint=False)
    z = np.sin(t) + 1j * np.sin(t) * np.cos(t)
    assert segment_crossings(z)[0].size >= 1


def test_koebe_examples_are_simple():
    for n in (1, 2, 3, 4, 5, 8):
        res = is_boundary_simple(ex.koebe_coeffs(n))
        assert res.simple and not res.inconclusive and res.witness is None


def test_self_intersection_witness():
    res = is_boundary_simple([1.0, 1.0])
    assert not res
    w = res.witness
    assert (w.t, w.s) == pytest.approx((2 * math.pi / 3, 4 * math.pi / 3), abs=1e-8)
    assert w.point == pytest.approx(-1.0, abs=1e-8)
    assert w.gap < 1e-10


def test_independent_univalence_criterion():
    # z + c z^2 is univalent iff |c| <= 1/2
    assert is_boundary_simple([1.0, 0.4])
    assert is_boundary_simple([1.0, 0.5])
    assert not is_boundary_simple([1.0, 0.6])
    assert not is_boundary_simple([1.0, 0.0, -1.0])


def test_tangential_contacts_are_not_crossings():
    res = is_boundary_simple(ex.koebe_coeffs(6))
    assert res.simple and res.touches >= 1


def test_sample_floor():
    with pytest.raises(ValueError):
        is_boundary_simple([1.0, 0.2], 256)


def test_critical_points():
    assert interior_critical_points([1.0]) == 0
    assert interior_critical_points([1.0, 1.0]) == 1
    assert interior_critical_points([1.0, 0.4]) == 0
    for n in range(2, 15):
        assert interior_critical_points(ex.koebe_coeffs(n)) == 0
