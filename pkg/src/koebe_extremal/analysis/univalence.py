"""Univalence evidence: self-intersections of the boundary curve.

A polynomial whose boundary image ``F(e^{it})`` is a simple closed curve is
univalent on the disc. Crossings are located on the sampled polyline and
then confirmed on the exact curve by solving ``Q(e^{it}, e^{is}) = 0`` for
the divided difference ``Q(z, w) = (F(z) - F(w)) / (z - w)``. Since
``Q(z, z) = F'(z)``, Newton iterates drifting onto the diagonal mark a
boundary critical point (a cusp), not a crossing.

Two arcs can also meet tangentially without crossing; the extremal
polynomials do this on the real axis wherever ``Im F`` has a double zero.
Such contacts are told apart from crossings by shrinking the circle:
univalence in the open disc forces ``F(r e^{it})`` to be simple for
``r < 1``, and a true crossing survives a small shrink.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .boundary import as_coeffs, boundary_values, uniform_circle

__all__ = [
    "Crossing",
    "SimplicityResult",
    "is_boundary_simple",
    "segment_crossings",
    "interior_critical_points",
    "DEFAULT_CURVE_SAMPLES",
]

DEFAULT_CURVE_SAMPLES = 8192
CONFIRM_TOL = 1e-10
INCONCLUSIVE_TOL = 1e-6
_MIN_SEPARATION = 1e-6
_PAIR_CHUNK = 4_000_000
_TRANSVERSAL = 1e-6
_SHRINK = 1e-5


@dataclass(frozen=True)
class Crossing:
    t: float
    s: float
    point: complex
    gap: float


@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    inconclusive: bool
    witness: Crossing | None
    candidates: int
    interior_critical_points: int
    samples: int
    touches: int = 0

    def __bool__(self):
        return self.simple


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def segment_crossings(z: np.ndarray, closed: bool = True):
    """Index pairs ``(i, j, u, v)`` of intersecting non-adjacent polyline segments.

    Segment ``k`` runs from ``z[k]`` to ``z[k+1]``; ``u`` and ``v`` are the
    intersection parameters along segments ``i`` and ``j``. Candidates come
    from a sort-and-sweep over the x-extents, then a y-overlap filter and an
    exact orientation test.
    """
    z = np.asarray(z, dtype=complex)
    if closed:
        p0, p1 = z, np.roll(z, -1)
    else:
        p0, p1 = z[:-1], z[1:]
    m = len(p0)
    x0, x1 = np.minimum(p0.real, p1.real), np.maximum(p0.real, p1.real)
    y0, y1 = np.minimum(p0.imag, p1.imag), np.maximum(p0.imag, p1.imag)
    order = np.argsort(x0, kind="stable")
    xs0, xs1 = x0[order], x1[order]
    hi = np.searchsorted(xs0, xs1, side="right")
    counts = np.maximum(hi - np.arange(m) - 1, 0)

    out_i, out_j, out_u, out_v = [], [], [], []
    start = 0
    while start < m:
        # chunk over sweep positions so the pair arrays stay bounded
        csum = np.cumsum(counts[start:])
        stop = start + max(1, int(np.searchsorted(csum, _PAIR_CHUNK, side="right")))
        cnt = counts[start:stop]
        total = int(cnt.sum())
        start_pos = start
        start = stop
        if total == 0:
            continue
        first = np.repeat(np.arange(start_pos, stop), cnt)
        offs = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        second = first + 1 + offs
        i, j = order[first], order[second]
        gap = np.abs(i - j)
        keep = (gap > 1) & (y0[i] <= y1[j]) & (y0[j] <= y1[i])
        if closed:
            keep &= gap != m - 1
        i, j = i[keep], j[keep]
        if i.size == 0:
            continue
        dpx, dpy = (p1[i] - p0[i]).real, (p1[i] - p0[i]).imag
        dqx, dqy = (p1[j] - p0[j]).real, (p1[j] - p0[j]).imag
        d1 = _cross(dpx, dpy, (p0[j] - p0[i]).real, (p0[j] - p0[i]).imag)
        d2 = _cross(dpx, dpy, (p1[j] - p0[i]).real, (p1[j] - p0[i]).imag)
        d3 = _cross(dqx, dqy, (p0[i] - p0[j]).real, (p0[i] - p0[j]).imag)
        d4 = _cross(dqx, dqy, (p1[i] - p0[j]).real, (p1[i] - p0[j]).imag)
        hit = (d1 * d2 <= 0) & (d3 * d4 <= 0)
        if not hit.any():
            continue
        i, j = i[hit], j[hit]
        d1, d2, d3, d4 = d1[hit], d2[hit], d3[hit], d4[hit]
        with np.errstate(invalid="ignore", divide="ignore"):
            u = np.where(d3 != d4, d3 / (d3 - d4), 0.5)
            v = np.where(d1 != d2, d1 / (d1 - d2), 0.5)
        swap = i > j
        out_i.append(np.where(swap, j, i))
        out_j.append(np.where(swap, i, j))
        out_u.append(np.where(swap, v, u))
        out_v.append(np.where(swap, u, v))
    if not out_i:
        empty = np.zeros(0)
        return empty.astype(int), empty.astype(int), empty, empty
    i, j = np.concatenate(out_i), np.concatenate(out_j)
    u, v = np.concatenate(out_u), np.concatenate(out_v)
    idx = np.lexsort((j, i))
    return i[idx], j[idx], np.clip(u[idx], 0, 1), np.clip(v[idx], 0, 1)


def _divided_difference(a: np.ndarray, z: complex, w: complex):
    """``Q(z, w) = sum_j a_j h_{j-1}(z, w)`` and its partials, ``h_m = sum_k z^k w^(m-k)``."""
    h, hz, hw = 1.0 + 0j, 0j, 0j
    zp, wp = 1.0 + 0j, 1.0 + 0j
    q, qz, qw = a[0] * h, 0j, 0j
    for coef in a[1:]:
        zp *= z
        wp *= w
        hz, hw = h + z * hz, h + w * hw
        h = z * h + wp
        q += coef * h
        qz += coef * hz
        qw += coef * hw
    return q, qz, qw


def _wrap(angle: float) -> float:
    return (angle + np.pi) % (2.0 * np.pi) - np.pi


def _newton_crossing(a: np.ndarray, t: float, s: float, scale: float):
    for _ in range(60):
        z, w = np.exp(1j * t), np.exp(1j * s)
        q, qz, qw = _divided_difference(a, z, w)
        if abs(q) <= 1e-13 * scale:
            return t, s
        qt, qs = 1j * z * qz, 1j * w * qw
        jac = np.array([[qt.real, qs.real], [qt.imag, qs.imag]])
        try:
            step = np.linalg.solve(jac, [-q.real, -q.imag])
        except np.linalg.LinAlgError:
            return None
        norm = float(np.hypot(*step))
        if not np.isfinite(norm):
            return None
        if norm > 0.05:
            step *= 0.05 / norm
        t, s = t + step[0], s + step[1]
    return None


def _gap(a, t, s) -> float:
    f = boundary_values(a, np.array([t, s]))
    return float(abs(f[0] - f[1]))


def _local_check(a: np.ndarray, i: int, j: int, h: float, m: int):
    """Resample both arcs 64x finer; return (t, s) of a persisting crossing or None."""
    fine = 64
    ti = (i - 2 + np.arange(5 * fine + 1) / fine) * h
    tj = (j - 2 + np.arange(5 * fine + 1) / fine) * h
    zi, zj = boundary_values(a, ti), boundary_values(a, tj)
    pts = np.concatenate([zi, zj])
    ii, jj, uu, vv = segment_crossings(pts, closed=False)
    n_i = len(zi)
    # keep only pairs with one segment on each arc
    mask = (ii < n_i - 1) & (jj >= n_i)
    if not mask.any():
        return None
    k = np.flatnonzero(mask)[0]
    t = ti[ii[k]] + uu[k] * (ti[1] - ti[0])
    s = tj[jj[k] - n_i] + vv[k] * (tj[1] - tj[0])
    if abs(_wrap(t - s)) < 4 * h / fine:
        return None
    return t, s


def _tangent_sine(a: np.ndarray, t: float, s: float) -> float:
    """``|sin|`` of the angle between the curve tangents at ``t`` and ``s``."""
    ja = 1j * np.arange(1, len(a) + 1) * a
    d = boundary_values(ja, np.array([t, s]))
    norm = abs(d[0]) * abs(d[1])
    if norm == 0.0:
        return 0.0
    return float(abs((np.conj(d[0]) * d[1]).imag) / norm)


def _crosses_when_shrunk(a: np.ndarray, t: float, s: float, h: float) -> bool:
    ar = a * (1.0 - _SHRINK) ** np.arange(1, len(a) + 1)
    m = int(round(2 * np.pi / h))
    i, j = int(np.floor(t / h)) % m, int(np.floor(s / h)) % m
    return _local_check(ar, i, j, h, m) is not None


def interior_critical_points(p) -> int:
    """Number of zeros of ``F'`` strictly inside the unit disc."""
    a = as_coeffs(p)
    deriv = np.arange(1, len(a) + 1) * a
    deriv = np.trim_zeros(deriv, "b")
    if len(deriv) <= 1:
        return 0
    roots = np.roots(deriv[::-1])
    return int(np.sum(np.abs(roots) < 1.0 - 1e-12))


def is_boundary_simple(p, m: int = DEFAULT_CURVE_SAMPLES) -> SimplicityResult:
    """Test the boundary curve ``F(e^{it})`` for self-intersections.

    Returns a result that is truthy when the curve is simple. A confirmed
    crossing carries the witness ``(t, s, F(e^{it}))`` with
    ``|F(e^{it}) - F(e^{is})| < 1e-10``; a polyline crossing that does not
    resolve either way leaves ``inconclusive`` set.
    """
    if m < 512:
        raise ValueError(f"need at least 512 samples, got {m}")
    a = as_coeffs(p)
    crit = interior_critical_points(a)
    if len(a) == 1:
        return SimplicityResult(True, False, None, 0, crit, m)
    h = 2.0 * np.pi / m
    z = boundary_values(a, uniform_circle(m))
    ci, cj, cu, cv = segment_crossings(z)
    scale = float(np.sum(np.arange(1, len(a) + 1) * np.abs(a)))
    inconclusive = False
    touches = 0
    seen: list[tuple[float, float]] = []
    for i, j, u, v in zip(ci.tolist(), cj.tolist(), cu.tolist(), cv.tolist()):
        found = _resolve(a, i, j, u, v, h, m, scale)
        if found is None:
            continue
        t, s, gap = found
        if gap >= CONFIRM_TOL:
            inconclusive |= gap < INCONCLUSIVE_TOL
            continue
        t, s = sorted((t % (2 * np.pi), s % (2 * np.pi)))
        if any(abs(_wrap(t - t2)) < 4 * h and abs(_wrap(s - s2)) < 4 * h for t2, s2 in seen):
            continue
        seen.append((t, s))
        if _tangent_sine(a, t, s) < _TRANSVERSAL and not _crosses_when_shrunk(a, t, s, h):
            touches += 1
            continue
        point = complex(boundary_values(a, np.array([t]))[0])
        return SimplicityResult(False, False, Crossing(t, s, point, gap), len(ci), crit, m, touches)
    return SimplicityResult(not inconclusive, inconclusive, None, len(ci), crit, m, touches)


def _resolve(a, i, j, u, v, h, m, scale):
    """Refine a polyline crossing to ``(t, s, gap)`` on the exact curve, or None."""
    sol = _newton_crossing(a, (i + u) * h, (j + v) * h, scale)
    if sol is not None and abs(_wrap(sol[0] - sol[1])) >= _MIN_SEPARATION:
        gap = _gap(a, *sol)
        if gap < CONFIRM_TOL:
            return sol[0], sol[1], gap
    local = _local_check(a, i, j, h, m)
    if local is None:
        return None
    res = minimize(
        lambda x: _gap(a, x[0], x[1]),
        np.array(local),
        method="Nelder-Mead",
        options={"xatol": 1e-14, "fatol": 1e-16, "maxiter": 2000},
    )
    t, s = float(res.x[0]), float(res.x[1])
    if abs(_wrap(t - s)) < _MIN_SEPARATION:
        return None
    return t, s, float(res.fun)
