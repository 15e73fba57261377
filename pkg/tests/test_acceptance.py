"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly as a script.
"""

import math
import tempfile
import time
from pathlib import Path

import numpy as np
import pytest

from koebe_extremal import extremal as ex
from koebe_extremal import spectral as sp
from koebe_extremal.analysis import (
    covering_check,
    is_boundary_simple,
    koebe_radius_estimate,
    max_re_on_zero_set,
    min_re_on_zero_set,
    trig_poly_min,
)
from koebe_extremal.chebyshev import node, trig_identity_sides, u_deriv_closed, u_eval, u_table
from koebe_extremal.cli import main

SQ5 = math.sqrt(5)
LINES = []


def quarter_sec2(n):
    return 0.25 / math.cos(math.pi / (n + 2)) ** 2


def c01_printed_coefficients():
    printed = {2: [1, 0.5], 3: [1, 2 / SQ5, 0.5 * (1 - 1 / SQ5)], 4: [1, 7 / 6, 2 / 3, 1 / 6]}
    err = max(np.max(np.abs(ex.koebe_coeffs(n).coeffs - np.array(v))) for n, v in printed.items())
    return err <= 1e-12, f"max error {err:.2e} (tol 1e-12)"


def c02_extremal_value():
    start = time.perf_counter()
    err = max(abs(min_re_on_zero_set(ex.koebe_coeffs(n)) + quarter_sec2(n)) for n in range(2, 41))
    secs = time.perf_counter() - start
    return err <= 1e-8 and secs < 5, f"max error {err:.2e} (tol 1e-8), {secs:.2f} s (limit 5 s)"


def c03_two_routes():
    err = max(
        np.max(np.abs(ex.eigen_pipeline_coeffs(n).coeffs - ex.koebe_coeffs(n).coeffs)) for n in range(2, 51)
    )
    return err <= 1e-10, f"max component error {err:.2e} (tol 1e-10)"


def c04_determinants():
    rel = 0.0
    at_node = 0.0
    for n in range(1, 15):
        for x in np.random.default_rng(1000 + n).uniform(-1, 1, 100):
            r, c = sp.phi_det_recurrence(n, x), sp.phi_det_closed(n, x)
            rel = max(rel, abs(r - c) / max(abs(r), abs(c)))
        x0 = node(n).x0
        scale = sp.phi_det_scale(n, x0)
        at_node = max(at_node, abs(sp.phi_det_recurrence(n, x0)) / scale, abs(sp.phi_det_closed(n, x0)) / scale)
    ok = rel <= 1e-8 and at_node <= 1e-9
    return ok, f"route relative error {rel:.2e} (tol 1e-8), scaled value at node {at_node:.2e} (tol 1e-9)"


def c05_spectrum():
    gap, interlaced = 0.0, True
    for n in range(2, 31):
        s = sp.generalized_eigs(n)
        mu, nu = sp.closed_form_roots(n)
        ref = np.sort(np.concatenate([0.25 / mu**2, 0.25 / nu**2]))
        gap = max(gap, float(np.max(np.abs(s.eigenvalues - ref))))
        interlaced &= s.interlacing_ok()
    return gap <= 1e-9 and interlaced, f"max eigenvalue error {gap:.2e} (tol 1e-9), interlacing {interlaced}"


def c06_identities():
    rng = np.random.default_rng(6)
    worst = 0.0
    for x in rng.uniform(-1, 1, 25):
        u = u_table(61, x)
        for j in range(1, 31):
            for k in range(1, 31):
                worst = max(worst, abs(u[j - 1] * u[j + k] - u[j] * u[j + k - 1] + u[k - 1]))
                worst = max(worst, abs(u[j + k] - u[j] * u[k] + u[j - 1] * u[k - 1]))
    fd_worst = 0.0
    h = 1e-6
    for x in rng.uniform(-0.95, 0.95, 10):
        for j in range(31):
            fd = (u_eval(j, x + h) - u_eval(j, x - h)) / (2 * h)
            for form in ("mixed", "shifted"):
                fd_worst = max(fd_worst, abs(u_deriv_closed(j, x, form) - fd) / max(1.0, abs(fd)))
    sine = 0.0
    for n in range(1, 61):
        for k in range(n):
            lhs, rhs = trig_identity_sides(n, k)
            sine = max(sine, abs(lhs - rhs))
    ok = worst < 1e-10 and sine < 1e-10 and fd_worst < 1e-5
    return ok, f"product identities {worst:.2e}, sine sums {sine:.2e} (tol 1e-10), derivative vs difference {fd_worst:.2e} (tol 1e-5)"


def c07_alternation():
    err = max(abs(max_re_on_zero_set(ex.alternating_coeffs(n)) - quarter_sec2(n)) for n in range(2, 21))
    return err <= 1e-8, f"max error {err:.2e} (tol 1e-8)"


def c08_suffridge():
    err = max(
        abs(min_re_on_zero_set(ex.suffridge_coeffs(n)) + math.tan(math.pi / (2 * (n + 1))) ** 2)
        for n in range(1, 31)
    )
    return err <= 1e-9, f"max error {err:.2e} (tol 1e-9)"


def c09_cosine_optima():
    e1 = max(
        abs(trig_poly_min(ex.fejer_cosine_coeffs(n)) + 0.5 / math.cos(math.pi / (n + 2))) for n in range(1, 41)
    )
    e2 = max(abs(trig_poly_min(ex.fejer_classical_coeffs(n)) + 1 / n) for n in range(1, 41))
    return max(e1, e2) <= 1e-9, f"cosine optimum {e1:.2e}, classical {e2:.2e} (tol 1e-9)"


def c10_covering():
    reach = max(covering_check(ex.koebe_coeffs(n)).left - (-quarter_sec2(n)) for n in range(2, 21))
    r3 = abs(koebe_radius_estimate(ex.koebe_coeffs(3)) - quarter_sec2(3))
    ok = reach <= 1e-6 and r3 <= 1e-8
    return ok, f"worst left endpoint excess {reach:.2e} (tol 1e-6), N=3 radius error {r3:.2e} (tol 1e-8)"


def _radius_bound_members():
    for n in range(1, 21):
        yield n, ex.koebe_coeffs(n)
        yield n, ex.alternating_coeffs(n)
        yield n, ex.suffridge_coeffs(n)
        yield n, ex.fejer_cosine_coeffs(n)
        yield n, ex.fejer_classical_coeffs(n)
    for n in range(2, 13):
        for q in range(2, n + 1):
            yield n, ex.koebe_q_coeffs(n, q)
            yield n, ex.suffridge_q_coeffs(n, q)
    for n in range(1, 11):
        yield 2 * n - 1, ex.odd_coeffs(n)


def c11_radius_bound():
    tested, short = 0, -math.inf
    for n, p in _radius_bound_members():
        a = p.coeffs / p.coeffs[0]
        if not is_boundary_simple(a):
            continue
        tested += 1
        short = max(short, 1 / n - koebe_radius_estimate(a))
    return short <= 1e-9, f"{tested} simple members, worst shortfall below 1/N {short:.2e} (tol 1e-9)"


def c12_univalence_evidence():
    koebe = all(is_boundary_simple(ex.koebe_coeffs(n)) for n in range(3, 21))
    q_ok = all(is_boundary_simple(ex.koebe_q_coeffs(n, q)) for n in range(1, 13) for q in range(1, n + 1))
    res = is_boundary_simple([1.0, 1.0])
    control = (not res.simple) and res.witness is not None and abs(res.witness.point + 1) < 1e-8
    return koebe and q_ok and control, f"koebe N=3..20 {koebe}, koebe-q N<=12 {q_ok}, z+z^2 rejected at -1 {control}"


def c13_local_optimality():
    start = time.perf_counter()
    worst = -math.inf
    for n in range(2, 13):
        p = ex.koebe_coeffs(n).coeffs
        base = min_re_on_zero_set(p)
        for j in range(1, n):
            for d in (1e-3, -1e-3):
                a = p.copy()
                a[j] += d
                worst = max(worst, min_re_on_zero_set(a) - base)
    secs = time.perf_counter() - start
    return worst <= 1e-9 and secs < 30, f"largest gain {worst:.2e} (tol 1e-9), {secs:.2f} s (limit 30 s)"


def c14_determinism():
    with tempfile.TemporaryDirectory() as tmp:
        paths = [Path(tmp) / f"run{k}.json" for k in (1, 2)]
        codes = [main(["verify", "--n-min", "2", "--n-max", "20", "--out", str(p)]) for p in paths]
        same = paths[0].read_bytes() == paths[1].read_bytes()
    return same and codes == [0, 0], f"exit codes {codes}, byte-identical {same}"


CRITERIA = [
    (1, "printed coefficients", c01_printed_coefficients),
    (2, "extremal value", c02_extremal_value),
    (3, "eigen pipeline agreement", c03_two_routes),
    (4, "determinant routes", c04_determinants),
    (5, "generalized spectrum", c05_spectrum),
    (6, "Chebyshev identities", c06_identities),
    (7, "alternating value", c07_alternation),
    (8, "Suffridge value", c08_suffridge),
    (9, "cosine optima", c09_cosine_optima),
    (10, "covering and radius", c10_covering),
    (11, "radius lower bound", c11_radius_bound),
    (12, "univalence evidence", c12_univalence_evidence),
    (13, "local optimality", c13_local_optimality),
    (14, "determinism", c14_determinism),
]


def report_line(num, name, fn):
    ok, detail = fn()
    line = f"criterion {num:2d} {name}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    return ok, line


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion-{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, name, fn):
    ok, line = report_line(num, name, fn)
    LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [report_line(*c)[0] for c in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
