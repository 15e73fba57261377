import math
import warnings

import numpy as np
import pytest
from numpy.polynomial import Polynomial

from koebe_extremal import extremal as ex
from koebe_extremal.analysis import (
    boundary_curve,
    eval_boundary,
    is_typically_real,
    max_re_on_zero_set,
    min_re_on_zero_set,
    re_on_zero_set,
    reduced_sine,
    trig_poly_min,
    zero_set,
)
from koebe_extremal.analysis.zeros import CoarseGridWarning


def direct_sums(a, t):
    j = np.arange(1, len(a) + 1)
    return np.cos(np.outer(t, j)) @ a, np.sin(np.outer(t, j)) @ a


def test_eval_boundary_examples():
    c, s = eval_boundary([1.0], math.pi)
    assert c == pytest.approx(-1.0) and s == pytest.approx(0.0, abs=1e-15)
    c, s = eval_boundary(ex.koebe_coeffs(4), math.pi)
    assert c == pytest.approx(-1 / 3, abs=1e-14) and abs(s) < 1e-14
    c, s = eval_boundary([1.0, 1.0], 2 * math.pi / 3)
    assert c == pytest.approx(-1.0, abs=1e-14) and abs(s) < 1e-14


def test_clenshaw_against_direct_sums(rng):
    t = np.linspace(0, 2 * np.pi, 257)
    for n in (1, 2, 7, 40):
        a = rng.normal(size=n)
        c, s = eval_boundary(a, t)
        dc, ds = direct_sums(a, t)
        assert np.max(np.abs(c - dc)) < 1e-12 * n
        assert np.max(np.abs(s - ds)) < 1e-12 * n
        inner = (t > 0.01) & (t < np.pi - 0.01)
        assert np.allclose(reduced_sine(a, t[inner]) * np.sin(t[inner]), ds[inner], atol=1e-12 * n)


def test_complex_coefficients(rng):
    a = rng.normal(size=5) + 1j * rng.normal(size=5)
    t = np.linspace(0, 2 * np.pi, 33)
    f = np.exp(1j * np.outer(t, np.arange(1, 6))) @ a
    c, s = eval_boundary(a, t)
    assert np.allclose(c + 1j * s, f, atol=1e-13)


def test_conjugate_symmetry():
    p = ex.koebe_coeffs(7)
    t = np.linspace(0, np.pi, 50)
    c1, s1 = eval_boundary(p, t)
    c2, s2 = eval_boundary(p, 2 * np.pi - t)
    assert np.allclose(c1, c2, atol=1e-13) and np.allclose(s1, -s2, atol=1e-13)


def test_boundary_curve():
    curve = boundary_curve([1.0], 16)
    assert len(curve.samples) == 16 and curve.closed
    assert np.allclose(np.abs(curve.points), 1.0)
    with pytest.raises(ValueError):
        boundary_curve([1.0], 4)


def test_zero_set_identity():
    zs = zero_set([1.0])
    assert list(zs.roots) == [0.0, math.pi]
    assert zs.interior_sign_changes.size == 0
    with pytest.raises(ValueError):
        zero_set([1.0], 32)


def test_koebe_has_no_interior_sign_changes():
    for n in range(2, 31):
        assert zero_set(ex.koebe_coeffs(n)).interior_sign_changes.size == 0


def test_double_zero_is_tangential():
    # sin t + sin 3t = 4 sin t cos^2 t touches zero at pi/2
    zs = zero_set([1.0, 0.0, 1.0])
    assert zs.interior_sign_changes.size == 0
    tang = zs.select("tangential")
    assert tang.size == 1 and tang[0] == pytest.approx(math.pi / 2, abs=1e-9)


def test_simple_interior_root():
    # S = sin t (1 - 2 cos t) vanishes transversally at t = pi/3
    zs = zero_set([1.0, -1.0])
    assert zs.interior_sign_changes == pytest.approx([math.pi / 3], abs=1e-13)


def u_power_basis(k):
    # U_k as a power series in x by the three-term recurrence
    prev, cur = Polynomial([0.0]), Polynomial([1.0])
    for _ in range(k):
        prev, cur = cur, Polynomial([0, 2]) * cur - prev
    return cur


def companion_sign_change_roots(a):
    poly = sum((coef * u_power_basis(j) for j, coef in enumerate(a)), Polynomial([0.0]))
    out = []
    for r in poly.roots():
        if abs(r.imag) < 1e-9 and -1 < r.real < 1:
            x = r.real
            h = 1e-7
            if poly(x - h) * poly(x + h) < 0:
                out.append(math.acos(x))
    return np.sort(out)


def test_zero_set_against_companion_matrix(rng):
    checked = 0
    for _ in range(100):
        n = int(rng.integers(1, 9))
        a = rng.normal(size=n)
        ref = companion_sign_change_roots(a)
        if ref.size > 1 and np.min(np.diff(ref)) < 1e-3:
            continue
        if ref.size and (ref.min() < 1e-3 or ref.max() > np.pi - 1e-3):
            continue
        got = np.sort(zero_set(a).interior_sign_changes)
        assert got.size == ref.size
        assert np.max(np.abs(got - ref), initial=0.0) < 1e-8
        checked += 1
    assert checked >= 80


def test_objective_examples():
    assert min_re_on_zero_set([1.0]) == -1.0
    assert max_re_on_zero_set([1.0]) == 1.0
    for n in range(2, 41):
        assert abs(min_re_on_zero_set(ex.koebe_coeffs(n)) - ex.koebe_value(n)) < 1e-9


def test_alternation_duality():
    for n in range(2, 21):
        lo = min_re_on_zero_set(ex.koebe_coeffs(n))
        hi = max_re_on_zero_set(ex.alternating_coeffs(n))
        assert abs(lo + hi) < 1e-10


def test_tangential_opt_in():
    t, c = re_on_zero_set([1.0, 0.0, 1.0])
    assert t.size == 2
    t2, c2 = re_on_zero_set([1.0, 0.0, 1.0], include_tangential=True)
    assert t2.size == 3
    assert np.min(c2) == pytest.approx(-2.0)


def close_pair(x1, x2):
    # b_1(x) = (x - x1)(x - x2) written in the U basis: U_0 = 1, U_1 = 2x, U_2 = 4x^2 - 1
    return [x1 * x2 + 0.25, -(x1 + x2) / 2, 0.25]


def test_grid_doubling_resolves_close_roots(monkeypatch):
    a = close_pair(math.cos(1.40), math.cos(1.47))
    assert zero_set(a, 64).coarse
    with warnings.catch_warnings():
        warnings.simplefilter("error", CoarseGridWarning)
        t, _ = re_on_zero_set(a, 64)
    assert t[1:-1] == pytest.approx([1.40, 1.47], abs=1e-12)
    from koebe_extremal.analysis import zeros

    monkeypatch.setattr(zeros, "_MAX_DOUBLINGS", 0)
    with pytest.warns(CoarseGridWarning):
        re_on_zero_set(a, 64)


def test_typically_real():
    for n in range(1, 41):
        assert is_typically_real(ex.koebe_coeffs(n))
    assert not is_typically_real([1.0, 0.0, -1.0])
    assert is_typically_real([1.0])
    with pytest.raises(ValueError):
        is_typically_real([1.0], tol=0)


def test_trig_poly_min_examples():
    assert trig_poly_min([1.0]) == -1.0
    assert trig_poly_min(ex.fejer_cosine_coeffs(2)) == pytest.approx(-math.sqrt(2) / 2, abs=1e-10)
    for n in range(1, 41):
        assert abs(trig_poly_min(ex.fejer_classical_coeffs(n)) + 1 / n) < 1e-9


def test_trig_poly_min_against_dense_grid(rng):
    t = np.linspace(0, np.pi, 400001)
    for _ in range(20):
        a = rng.normal(size=int(rng.integers(1, 10)))
        got = trig_poly_min(a)
        grid = direct_sums(a, t)[0].min()
        assert got <= grid + 1e-12
        assert grid - got < 1e-8
