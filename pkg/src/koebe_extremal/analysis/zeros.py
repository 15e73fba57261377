"""Zeros of ``S(t) = Im F(e^{it})`` on ``[0, pi]`` and the objectives built on them."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .boundary import as_coeffs, clenshaw, eval_boundary, reduced_sine

__all__ = [
    "ZeroSet",
    "CoarseGridWarning",
    "zero_set",
    "re_on_zero_set",
    "min_re_on_zero_set",
    "max_re_on_zero_set",
    "is_typically_real",
    "trig_poly_min",
    "DEFAULT_ZERO_GRID",
]

DEFAULT_ZERO_GRID = 4096
TANGENTIAL_TOL = 1e-9
_ENDPOINT_MERGE = 1e-12
_BISECT_STEPS = 64
_MAX_DOUBLINGS = 3

ENDPOINT, SIGN_CHANGE, TANGENTIAL = "endpoint", "sign-change", "tangential"


class CoarseGridWarning(UserWarning):
    """Two zeros closer than the grid spacing; some may have been missed."""


@dataclass(frozen=True)
class ZeroSet:
    roots: np.ndarray
    kinds: tuple[str, ...]
    resolution: int
    coarse: bool = False

    def __len__(self):
        return len(self.roots)

    def select(self, *kinds: str) -> np.ndarray:
        mask = np.array([k in kinds for k in self.kinds], dtype=bool)
        return self.roots[mask]

    @property
    def interior_sign_changes(self) -> np.ndarray:
        return self.select(SIGN_CHANGE)


def _real_coeffs(p) -> np.ndarray:
    a = as_coeffs(p)
    if np.iscomplexobj(a):
        if np.any(a.imag):
            raise ValueError("zero sets are defined for real coefficients only")
        a = a.real
    return a


def _noise_floor(a: np.ndarray) -> float:
    return 64.0 * np.finfo(float).eps * float(np.sum(np.arange(1, len(a) + 1) * np.abs(a)))


def _bisect(a: np.ndarray, lo: np.ndarray, hi: np.ndarray, sign_lo: np.ndarray) -> np.ndarray:
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        same = np.sign(clenshaw(a, mid)[2].real) == sign_lo
        lo = np.where(same, mid, lo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)


def _refine_abs_min(a: np.ndarray, lo: float, hi: float) -> float:
    # a touching zero of S is a simple zero of S' = sum j a_j cos jt
    ja = np.arange(1, len(a) + 1) * a
    d_lo, d_hi = (float(clenshaw(ja, x)[0]) for x in (lo, hi))
    if d_lo * d_hi < 0:
        for _ in range(_BISECT_STEPS):
            mid = 0.5 * (lo + hi)
            d_mid = float(clenshaw(ja, mid)[0])
            if (d_mid < 0) == (d_lo < 0):
                lo, d_lo = mid, d_mid
            else:
                hi = mid
        return 0.5 * (lo + hi)
    res = minimize_scalar(
        lambda t: abs(float(clenshaw(a, t)[2].real)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-14},
    )
    return float(res.x)


def zero_set(p, m: int = DEFAULT_ZERO_GRID) -> ZeroSet:
    """All zeros of ``S`` on ``[0, pi]``.

    Works on the reduced series ``S(t)/sin t``, so the forced zeros at the
    endpoints do not mask nearby interior ones. Sign changes on a uniform
    ``m``-grid are bisected to machine precision; values inside the rounding
    floor count as zero. Runs of such values between equal signs, and
    interior local minima of ``|S/sin t|`` below 1e-9, become tangential
    roots.
    """
    if m < 64:
        raise ValueError(f"grid size must be >= 64, got {m}")
    a = _real_coeffs(p)
    t = np.linspace(0.0, np.pi, m + 1)
    b = clenshaw(a, t)[2].real
    floor = _noise_floor(a)
    sign = np.where(np.abs(b) <= floor, 0.0, np.sign(b))

    found: list[tuple[float, str]] = []

    # sign changes and tangential touches between consecutive nonzero signs
    nz = np.flatnonzero(sign)
    if nz.size:
        left, right = nz[:-1], nz[1:]
        flips = sign[left] != sign[right]
        lo_idx, hi_idx = left[flips], right[flips]
        if lo_idx.size:
            roots = _bisect(a, t[lo_idx], t[hi_idx], sign[lo_idx])
            found.extend((float(r), SIGN_CHANGE) for r in roots)
        gaps = (~flips) & (right - left > 1)
        for lo_i, hi_i in zip(left[gaps], right[gaps]):
            found.append((_refine_abs_min(a, t[lo_i], t[hi_i]), TANGENTIAL))

    # near-touches that stay above the rounding floor
    mag = np.abs(b)
    k = np.arange(1, m)
    is_min = (mag[k] < mag[k - 1]) & (mag[k] <= mag[k + 1]) & (sign[k] != 0)
    is_min &= (sign[k - 1] == sign[k]) & (sign[k + 1] == sign[k])
    for idx in k[is_min]:
        tr = _refine_abs_min(a, t[idx - 1], t[idx + 1])
        if abs(float(reduced_sine(a, tr))) < TANGENTIAL_TOL:
            found.append((tr, TANGENTIAL))

    interior = [(r, kind) for r, kind in found if _ENDPOINT_MERGE < r < np.pi - _ENDPOINT_MERGE]
    interior.sort()
    roots = [0.0] + [r for r, _ in interior] + [np.pi]
    kinds = (ENDPOINT,) + tuple(kind for _, kind in interior) + (ENDPOINT,)
    roots = np.array(roots)
    coarse = bool(len(roots) > 2 and np.min(np.diff(roots)) < 2.0 * np.pi / m)
    roots.setflags(write=False)
    return ZeroSet(roots=roots, kinds=kinds, resolution=m, coarse=coarse)


def re_on_zero_set(p, m: int = DEFAULT_ZERO_GRID, include_tangential: bool = False):
    """``(t, C(t))`` over the zeros entering the objective.

    The grid is doubled up to three times while roots crowd closer than its
    spacing. By default these are the sign changes of ``S`` plus the endpoints 0 and
    pi. Touching zeros make the objective jump downward, and at the optimum
    itself they sit below the supremum, so they are left out unless
    ``include_tangential`` is set.
    """
    zs = zero_set(p, m)
    for _ in range(_MAX_DOUBLINGS):
        if not zs.coarse:
            break
        zs = zero_set(p, 2 * zs.resolution)
    if zs.coarse:
        warnings.warn(
            f"zeros closer than the grid spacing at M={zs.resolution}; increase the grid",
            CoarseGridWarning,
            stacklevel=3,
        )
    kinds = (ENDPOINT, SIGN_CHANGE, TANGENTIAL) if include_tangential else (ENDPOINT, SIGN_CHANGE)
    t = zs.select(*kinds)
    c, _ = eval_boundary(_real_coeffs(p), t)
    return t, np.asarray(c)


def min_re_on_zero_set(p, m: int = DEFAULT_ZERO_GRID, include_tangential: bool = False) -> float:
    """``min {Re F(e^{it}) : Im F(e^{it}) = 0}``, the extremal objective."""
    return float(np.min(re_on_zero_set(p, m, include_tangential)[1]))


def max_re_on_zero_set(p, m: int = DEFAULT_ZERO_GRID, include_tangential: bool = False) -> float:
    return float(np.max(re_on_zero_set(p, m, include_tangential)[1]))


def _local_min_indices(v: np.ndarray) -> np.ndarray:
    k = np.arange(1, len(v) - 1)
    return k[(v[k] <= v[k - 1]) & (v[k] <= v[k + 1])]


def is_typically_real(p, tol: float = 1e-10, m: int = DEFAULT_ZERO_GRID) -> bool:
    """True iff ``S(t) >= -tol`` on ``(0, pi)``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _real_coeffs(p)
    t = np.linspace(0.0, np.pi, m + 1)
    s = np.asarray(eval_boundary(a, t)[1])
    if np.min(s[1:-1]) < -tol:
        return False
    for idx in _local_min_indices(s):
        res = minimize_scalar(
            lambda x: float(eval_boundary(a, x)[1]),
            bounds=(t[idx - 1], t[idx + 1]),
            method="bounded",
            options={"xatol": 1e-13},
        )
        if res.fun < -tol:
            return False
    return True


def trig_poly_min(p, m: int = DEFAULT_ZERO_GRID) -> float:
    """Global minimum of ``C(t) = sum a_j cos jt`` over ``[0, pi]``.

    Grid minima are refined by bisecting ``C'(t) = -sum j a_j sin jt``.
    """
    if m < 64:
        raise ValueError(f"grid size must be >= 64, got {m}")
    a = _real_coeffs(p)
    ja = np.arange(1, len(a) + 1) * a
    t = np.linspace(0.0, np.pi, m + 1)
    c = np.asarray(eval_boundary(a, t)[0])
    best = min(c[0], c[-1])
    idx = _local_min_indices(c)
    if idx.size:
        lo, hi = t[idx - 1], t[idx + 1]
        # C' = -S_ja, so C' < 0 <=> S_ja > 0
        d_lo = -np.asarray(eval_boundary(ja, lo)[1])
        d_hi = -np.asarray(eval_boundary(ja, hi)[1])
        bracket = (d_lo <= 0) & (d_hi >= 0)
        lo, hi = lo[bracket], hi[bracket]
        for _ in range(_BISECT_STEPS):
            mid = 0.5 * (lo + hi)
            falling = -np.asarray(eval_boundary(ja, mid)[1]) < 0
            lo = np.where(falling, mid, lo)
            hi = np.where(falling, hi, mid)
        cand = np.concatenate([0.5 * (lo + hi), t[idx]])
        best = min(best, float(np.min(eval_boundary(a, cand)[0])))
    return float(best)
