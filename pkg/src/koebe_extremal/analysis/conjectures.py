"""Evidence scans for the open conjectures. Rows report; they never assert."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .. import extremal as ex
from .covering import koebe_radius_estimate
from .univalence import DEFAULT_CURVE_SAMPLES, is_boundary_simple
from .zeros import re_on_zero_set

__all__ = ["CONJECTURE_IDS", "ScanResult", "quarter_turn", "scan"]

CONJECTURE_IDS = (1, 2, 4, 5, 6)
RADIUS_SLACK = 1e-9


@dataclass(frozen=True)
class ScanResult:
    conjecture: int
    rows: tuple[dict, ...]
    witness: dict | None

    @property
    def counterexample(self) -> bool:
        return self.witness is not None


def _unit_lead(p: ex.UnitPolynomial) -> np.ndarray:
    return p.coeffs / p.coeffs[0]


def _simplicity_fields(a, samples: int) -> dict:
    res = is_boundary_simple(a, samples)
    w = res.witness
    return {
        "boundary_simple": res.simple,
        "inconclusive": res.inconclusive,
        "touches": res.touches,
        "witness": None if w is None else {"t": w.t, "s": w.s, "re": w.point.real, "im": w.point.imag, "gap": w.gap},
    }


def _row_univalence(n: int, q: int, family: str, a, samples: int) -> dict:
    row = {"n": n, "q": q, "family": family}
    row.update(_simplicity_fields(a, samples))
    row["radius"] = koebe_radius_estimate(a, max(samples, 1024))
    return row


def _scan_koebe(n: int, samples: int) -> list[dict]:
    return [_row_univalence(n, 1, "koebe", ex.koebe_coeffs(n).coeffs, samples)]


def _scan_koebe_q(n: int, samples: int) -> list[dict]:
    return [
        _row_univalence(n, q, "koebe-q", ex.koebe_q_coeffs(n, q).coeffs, samples) for q in range(1, n + 1)
    ]


def _radius_members(n: int):
    yield "koebe", 1, ex.koebe_coeffs(n)
    yield "suffridge", 1, ex.suffridge_coeffs(n)
    yield "fejer-classical", 1, ex.fejer_classical_coeffs(n)
    yield "fejer-cosine", 1, ex.fejer_cosine_coeffs(n)
    for q in range(2, n + 1):
        yield "koebe-q", q, ex.koebe_q_coeffs(n, q)
        yield "suffridge-q", q, ex.suffridge_q_coeffs(n, q)


def _scan_radius(n: int, samples: int) -> list[dict]:
    reference = -ex.koebe_value(n)
    rows = []
    for family, q, p in _radius_members(n):
        row = _row_univalence(n, q, family, _unit_lead(p), samples)
        row["reference"] = reference
        row["margin"] = row["radius"] - reference
        rows.append(row)
    return rows


def quarter_turn(a: np.ndarray) -> np.ndarray:
    """Coefficients of ``-i F(i z)``, whose ``Im`` on the circle is ``-C(t + pi/2)``."""
    return np.real(a * (1j ** np.arange(len(a))))


def _scan_odd(n: int, samples: int) -> list[dict]:
    p = ex.odd_coeffs(n)
    grid = max(samples // 2, 64)
    _, c = re_on_zero_set(p, grid)
    # S at the zeros of C, reached through the quarter-turned polynomial
    _, s_at_c0 = re_on_zero_set(quarter_turn(p.coeffs), grid, include_tangential=True)
    return [
        {
            "n": n,
            "q": 1,
            "family": "odd",
            "min_c": float(np.min(c)),
            "max_c": float(np.max(c)),
            "max_abs_c": float(np.max(np.abs(c))),
            "min_abs_s_where_c_zero": float(np.min(np.abs(s_at_c0))),
            "radius": koebe_radius_estimate(p, max(samples, 1024)),
            "reference": ex.odd_reference_value(n),
            "suffridge_estimate": n / (2 * n - 1),
        }
    ]


_BOUND_FAMILIES = {
    "koebe": ex.koebe_coeffs,
    "suffridge": ex.suffridge_coeffs,
    "fejer-classical": ex.fejer_classical_coeffs,
    "fejer-cosine": ex.fejer_cosine_coeffs,
}


def _scan_bounds(n: int, samples: int, degrees=None) -> list[dict]:
    bound = ex.koebe_coeffs(n).coeffs
    rows = []
    for m in degrees or (n,):
        for family, make in _BOUND_FAMILIES.items():
            a = _unit_lead(make(m))
            k = min(m, n)
            margins = bound[:k] - np.abs(a[:k])
            worst = int(np.argmin(margins))
            rows.append(
                {
                    "n": n,
                    "q": 1,
                    "family": family,
                    "degree": m,
                    "boundary_simple": bool(is_boundary_simple(a, samples)),
                    "min_margin": float(margins[worst]),
                    "worst_j": worst + 1,
                }
            )
    return rows


def _work(item):
    cid, n, samples, n_max = item
    if cid == 1:
        return _scan_koebe(n, samples)
    if cid == 2:
        return _scan_radius(n, samples)
    if cid == 4:
        return _scan_koebe_q(n, samples)
    if cid == 5:
        return _scan_odd(n, samples)
    return _scan_bounds(n, samples, degrees=tuple(range(1, n_max + 1)))


def _witness(cid: int, rows) -> dict | None:
    for row in rows:
        w = row.get("witness")
        if cid in (1, 4) and w is not None:
            return dict(row)
        if cid == 2 and row["boundary_simple"] and not row["inconclusive"] and row["margin"] < -RADIUS_SLACK:
            return dict(row)
    return None


def scan(cid: int, n_min: int, n_max: int, samples: int = DEFAULT_CURVE_SAMPLES, jobs: int = 1) -> ScanResult:
    """Evidence rows for conjecture ``cid`` over ``n_min <= N <= n_max``.

    Conjectures 1 and 4 are refuted by a confirmed boundary crossing, and
    Conjecture 2 by a simple-boundary member whose radius falls below the
    conjectured value. Conjectures 5 and 6 only report.
    """
    if cid not in CONJECTURE_IDS:
        raise ValueError(f"unknown conjecture id {cid}; expected one of {CONJECTURE_IDS}")
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    items = [(cid, n, samples, n_max) for n in range(n_min, n_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_work, items))
    else:
        chunks = [_work(item) for item in items]
    rows = tuple(row for chunk in chunks for row in chunk)
    return ScanResult(cid, rows, _witness(cid, rows))
