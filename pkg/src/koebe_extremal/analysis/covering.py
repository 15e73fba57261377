"""Winding numbers, covered real intervals and the Koebe radius of the image."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .boundary import as_coeffs, boundary_values, clenshaw, uniform_circle
from .zeros import zero_set

__all__ = [
    "PointOnCurveError",
    "CoveredInterval",
    "winding_number",
    "winding_numbers",
    "real_axis_crossings",
    "covering_check",
    "koebe_radius_estimate",
    "boundary_distance",
    "rogosinski_psi",
    "rogosinski_bounds",
]

ON_CURVE_TOL = 1e-9
_MAX_DOUBLINGS = 4
_BISECT_STEPS = 64


class PointOnCurveError(ValueError):
    """The query point lies on (or within 1e-9 of) the sampled boundary curve."""


@dataclass(frozen=True)
class CoveredInterval:
    """Real interval ``(left, right)`` around 0 covered by ``F(D)``.

    ``step`` bounds the error of the endpoints as located; the interval is
    open and its endpoints are boundary points of the image.
    """

    left: float
    right: float
    step: float

    def __iter__(self):
        return iter((self.left, self.right))


def winding_numbers(p, w, m: int = 8192) -> np.ndarray:
    """Winding numbers of ``F(e^{it})`` about each point of ``w``."""
    a = as_coeffs(p)
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    for _ in range(_MAX_DOUBLINGS + 1):
        z = boundary_values(a, uniform_circle(m))
        diff = z[None, :] - w[:, None]
        if np.min(np.abs(diff)) < ON_CURVE_TOL:
            raise PointOnCurveError("point within 1e-9 of the boundary curve")
        steps = np.angle(np.roll(diff, -1, axis=1) / diff)
        if np.max(np.abs(steps)) < np.pi / 2:
            return np.rint(steps.sum(axis=1) / (2 * np.pi)).astype(int)
        m *= 2
    raise PointOnCurveError(f"argument increments stay >= pi/2 at {m // 2} samples")


def winding_number(p, w: complex, m: int = 8192) -> int:
    """Total change of ``arg(F(e^{it}) - w)`` over a period, divided by ``2 pi``."""
    return int(winding_numbers(p, [w], m)[0])


def _complex_crossings(a: np.ndarray, m: int) -> np.ndarray:
    t = uniform_circle(m)
    s = boundary_values(a, t).imag
    nxt = np.roll(s, -1)
    hit = s * nxt < 0
    lo, hi = t[hit], t[hit] + 2 * np.pi / m
    sign_lo = np.sign(s[hit])
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        same = np.sign(boundary_values(a, mid).imag) == sign_lo
        lo, hi = np.where(same, mid, lo), np.where(same, hi, mid)
    roots = np.concatenate([0.5 * (lo + hi), t[s == 0]])
    return boundary_values(a, roots).real


def real_axis_crossings(p, m: int = 8192) -> np.ndarray:
    """Sorted distinct real values taken by the boundary curve.

    For real coefficients these are ``C`` at the full zero set of ``S``
    (the lower half circle mirrors the upper one). Otherwise sign changes of
    ``Im F`` on an ``m``-grid are bisected.
    """
    a = as_coeffs(p)
    if not np.iscomplexobj(a) or not np.any(a.imag):
        a = np.real(a)
        roots = zero_set(a, max(64, m // 2)).roots
        x = clenshaw(a, roots)[0]
    else:
        x = _complex_crossings(a, m)
    x = np.sort(x)
    keep = np.concatenate([[True], np.diff(x) > 1e-13])
    return x[keep]


def covering_check(p, m: int = 8192) -> CoveredInterval:
    """Largest interval ``(left, right)`` around 0 whose points all have nonzero winding.

    The winding number is constant between consecutive real-axis crossings
    of the curve, so it is evaluated once per gap, at the midpoint, and the
    interval grows outward from 0 until a gap with winding 0 is met.
    """
    if m < 1024:
        raise ValueError(f"need at least 1024 samples, got {m}")
    a = as_coeffs(p)
    x = real_axis_crossings(a, m)
    step = 2 * np.pi / m * float(np.sum(np.arange(1, len(a) + 1) * np.abs(a))) * 2.0**-_BISECT_STEPS
    step = max(step, 1e-13)
    if np.any(np.abs(x) < 1e-13):
        return CoveredInterval(0.0, 0.0, step)
    neg, pos = x[x < 0][::-1], x[x > 0]
    # gaps: (neg[k+1], neg[k]) and (pos[k], pos[k+1]); the two beside 0 contain F(0) = 0
    left = neg[0] if neg.size else -math.inf
    right = pos[0] if pos.size else math.inf
    if neg.size > 1:
        mids = 0.5 * (neg[1:] + neg[:-1])
        wn = winding_numbers(a, mids, m)
        zero = np.flatnonzero(wn == 0)
        left = neg[zero[0]] if zero.size else neg[-1]
    if pos.size > 1:
        mids = 0.5 * (pos[1:] + pos[:-1])
        wn = winding_numbers(a, mids, m)
        zero = np.flatnonzero(wn == 0)
        right = pos[zero[0]] if zero.size else pos[-1]
    return CoveredInterval(float(left), float(right), step)


def boundary_distance(p, m: int = 8192) -> tuple[float, float]:
    """``(min_t |F(e^{it})|, argmin t)``, refined from the ``m``-grid."""
    a = as_coeffs(p)
    t = uniform_circle(m)
    r = np.abs(boundary_values(a, t))
    h = 2 * np.pi / m
    local = np.flatnonzero((r <= np.roll(r, 1)) & (r <= np.roll(r, -1)))
    # refine every local minimum that could beat the best grid value
    cand = local[r[local] <= r.min() * (1 + 1e-3) + 1e-12]
    best_r, best_t = float(r.min()), float(t[np.argmin(r)])
    for k in cand:
        res = minimize_scalar(
            lambda x: float(np.abs(boundary_values(a, x))),
            bounds=(t[k] - h, t[k] + h),
            method="bounded",
            options={"xatol": 1e-13},
        )
        if res.fun < best_r:
            best_r, best_t = float(res.fun), float(res.x) % (2 * np.pi)
    return best_r, best_t


def koebe_radius_estimate(p, m: int = 8192) -> float:
    """Distance from 0 to the boundary curve.

    When the boundary is simple this is the radius of the largest disc about
    0 inside ``F(D)``.
    """
    if m < 1024:
        raise ValueError(f"need at least 1024 samples, got {m}")
    return boundary_distance(p, m)[0]


def _rogosinski_residual(n: int, psi: float) -> float:
    return (n + 4) * math.sin((n + 2) * psi) + (n + 2) * math.sin((n + 4) * psi)


def rogosinski_psi(n: int) -> float:
    """Smallest positive root of ``(N+4) sin((N+2) psi) + (N+2) sin((N+4) psi)``.

    For odd ``N`` this is ``pi/(N+3)``; for even ``N`` the root lies in
    ``(pi/(N+3), pi/(N+2))`` and is bisected there.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    if n % 2:
        return math.pi / (n + 3)
    lo, hi = math.pi / (n + 3), math.pi / (n + 2)
    f_lo = _rogosinski_residual(n, lo)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        f_mid = _rogosinski_residual(n, mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def rogosinski_bounds(n: int) -> tuple[float, float]:
    """``(1/(4 cos^2(pi/(N+3))), sec^2(pi/(N+2))/4)``, lower and upper Koebe-radius bounds."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return 0.25 / math.cos(math.pi / (n + 3)) ** 2, 0.25 / math.cos(math.pi / (n + 2)) ** 2
