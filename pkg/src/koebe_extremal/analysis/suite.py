"""The per-N verification suite behind ``koebe-extremal verify``."""

from __future__ import annotations

import math
import time

import numpy as np

from .. import extremal as ex
from .. import spectral as sp
from ..chebyshev import node, trig_identity_sides, u_table
from .covering import covering_check, koebe_radius_estimate, rogosinski_psi
from .report import VerificationReport
from .univalence import is_boundary_simple
from .zeros import max_re_on_zero_set, min_re_on_zero_set, trig_poly_min

__all__ = ["TOLERANCES", "PRINTED_KOEBE", "run_order", "run_suite"]

TOLERANCES = {
    "alternating-value": 1e-8,
    "boundary-simple": 0.0,
    "chebyshev-identities": 1e-10,
    "covering-left": 1e-6,
    "det-node": 1e-9,
    "det-routes": 1e-8,
    "eigen-route": 1e-10,
    "fejer-classical-value": 1e-9,
    "fejer-cosine-value": 1e-9,
    "interlacing": 0.0,
    "koebe-printed": 1e-12,
    "koebe-radius": 1e-8,
    "koebe-value": 1e-8,
    "radius-lower-bound": 1e-9,
    "node-symmetry": 1e-10,
    "rogosinski-psi": 1e-12,
    "spectrum": 1e-9,
    "suffridge-value": 1e-9,
}

_SQ5 = math.sqrt(5.0)
PRINTED_KOEBE = {
    2: (1.0, 0.5),
    3: (1.0, 2.0 / _SQ5, 0.5 * (1.0 - 1.0 / _SQ5)),
    4: (1.0, 7.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0),
}

_DET_MAX_ORDER = 14
_DET_POINTS = 100


def _pair(computed, reference):
    return float(computed), float(reference), float(computed - reference)


def _identity_residual(n: int) -> float:
    x = np.linspace(-0.95, 0.95, 7)
    u = u_table(2 * n + 1, x)
    worst = 0.0
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            r1 = u[j - 1] * u[j + k] - (u[j] * u[j + k - 1] - u[k - 1])
            r2 = u[j + k] - (u[j] * u[k] - u[j - 1] * u[k - 1])
            worst = max(worst, float(np.max(np.abs(r1))), float(np.max(np.abs(r2))))
    for k in range(n):
        lhs, rhs = trig_identity_sides(n, k)
        worst = max(worst, abs(lhs - rhs))
    return worst


def _checks(n: int):
    koebe = ex.koebe_coeffs(n)
    jn = ex.koebe_value(n)
    if n in PRINTED_KOEBE:
        diff = float(np.max(np.abs(koebe.coeffs - np.array(PRINTED_KOEBE[n]))))
        yield "koebe-printed", (diff, 0.0, diff)
    yield "koebe-value", _pair(min_re_on_zero_set(koebe), jn)
    yield "alternating-value", _pair(max_re_on_zero_set(ex.alternating_coeffs(n)), ex.alternating_value(n))
    yield "suffridge-value", _pair(min_re_on_zero_set(ex.suffridge_coeffs(n)), ex.suffridge_value(n))
    yield "fejer-cosine-value", _pair(trig_poly_min(ex.fejer_cosine_coeffs(n)), ex.fejer_cosine_value(n))
    yield "fejer-classical-value", _pair(
        trig_poly_min(ex.fejer_classical_coeffs(n)), ex.fejer_classical_value(n)
    )

    diff = float(np.max(np.abs(ex.eigen_pipeline_coeffs(n).coeffs - koebe.coeffs)))
    yield "eigen-route", (diff, 0.0, diff)

    if n <= _DET_MAX_ORDER:
        x = np.random.default_rng(n).uniform(-1.0, 1.0, _DET_POINTS)
        worst = 0.0
        for v in x:
            r, c = sp.phi_det_recurrence(n, v), sp.phi_det_closed(n, v)
            worst = max(worst, abs(r - c) / max(abs(r), abs(c), np.finfo(float).tiny))
        yield "det-routes", (worst, 0.0, worst)
    x0 = node(n).x0
    at_node = max(abs(sp.phi_det_recurrence(n, x0)), abs(sp.phi_det_closed(n, x0))) / sp.phi_det_scale(n, x0)
    yield "det-node", (at_node, 0.0, at_node)

    system = sp.generalized_eigs(n)
    gap = float(np.max(np.abs(system.eigenvalues - system.reference_eigenvalues())))
    yield "spectrum", (system.lambda_min, float(system.reference_eigenvalues()[0]), gap)
    ok = system.interlacing_ok()
    yield "interlacing", (float(ok), 1.0, 0.0 if ok else 1.0)

    res = _identity_residual(n)
    yield "chebyshev-identities", (res, 0.0, res)
    u = u_table(n, x0)
    sym = float(np.max(np.abs(u - u[::-1])))
    yield "node-symmetry", (sym, 0.0, sym)

    yield "covering-left", _pair(covering_check(koebe).left, jn)
    radius = koebe_radius_estimate(koebe)
    yield "koebe-radius", _pair(radius, -jn)
    short = max(0.0, 1.0 / n - radius)
    yield "radius-lower-bound", (radius, 1.0 / n, short)
    simple = bool(is_boundary_simple(koebe))
    yield "boundary-simple", (float(simple), 1.0, 0.0 if simple else 1.0)

    if n % 2:
        return
    psi = rogosinski_psi(n)
    resid = (n + 4) * math.sin((n + 2) * psi) + (n + 2) * math.sin((n + 4) * psi)
    yield "rogosinski-psi", (psi, psi, resid)


def run_order(n: int) -> list[tuple]:
    """Raw rows ``(check, n, computed, reference, residual, seconds)`` for one order."""
    rows = []
    gen = _checks(n)
    while True:
        start = time.perf_counter()
        try:
            check, (computed, reference, residual) = next(gen)
        except StopIteration:
            break
        rows.append((check, n, computed, reference, residual, time.perf_counter() - start))
    return rows


def run_suite(n_min: int, n_max: int, tol: float | None = None, jobs: int = 1) -> VerificationReport:
    """Run every check for ``n_min <= N <= n_max``; ``tol`` replaces every tolerance."""
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    orders = range(n_min, n_max + 1)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(run_order, orders))
    else:
        chunks = [run_order(n) for n in orders]
    tolerances = dict(TOLERANCES) if tol is None else {k: float(tol) for k in TOLERANCES}
    rows = [row for chunk in chunks for row in chunk]
    present = {row[0] for row in rows}
    return VerificationReport.build(rows, {k: v for k, v in tolerances.items() if k in present})
