"""The quadratic-form pencil behind the Koebe-radius optimum.

``A`` holds 1/2 on the first off-diagonals and ``B`` holds 1/2 on the
second off-diagonals, so ``d.T A d`` and ``d.T B d`` are the lag-1 and
lag-2 autocorrelations of ``d``. The extremal problem reduces to the
smallest generalized eigenvalue of the pencil ``(I - A, I - B)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.optimize import brentq

from .chebyshev import node, u_deriv, u_deriv_recurrence, u_eval, u_table

__all__ = [
    "SpectralSystem",
    "AutocorrelationVector",
    "pencil_banded",
    "pencil_dense",
    "phi_matrix",
    "cofactor_det",
    "phi_det_seeds",
    "phi_det_recurrence",
    "phi_det_closed",
    "phi_det_scale",
    "closed_form_roots",
    "generalized_eigs",
    "delta0",
    "beta_from_d",
    "MAX_ORDER",
    "ResourceLimitError",
]

# dense N x N eigenvectors above this size stop being a desk-scale job
MAX_ORDER = 6000


class ResourceLimitError(RuntimeError):
    pass


def pencil_banded(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Upper banded storage (LAPACK ``ab`` layout) of ``I - A`` and ``I - B``.

    ``I - A`` has one superdiagonal, ``I - B`` has two (the first is zero).
    """
    p = np.zeros((2, n))
    p[1] = 1.0
    p[0, 1:] = -0.5
    q = np.zeros((3, n))
    q[2] = 1.0
    q[0, 2:] = -0.5
    return p, q


def _band_to_dense(ab: np.ndarray) -> np.ndarray:
    u = ab.shape[0] - 1
    out = np.diag(ab[u])
    for k in range(1, u + 1):
        off = ab[u - k, k:]
        if off.size:
            out += np.diag(off, k) + np.diag(off, -k)
    return out


def pencil_dense(n: int) -> tuple[np.ndarray, np.ndarray]:
    p, q = pencil_banded(n)
    return _band_to_dense(p), _band_to_dense(q)


def phi_matrix(n: int, x: float) -> np.ndarray:
    """``4x^2 (I - A) - (I - B)`` as a dense matrix."""
    p, q = pencil_dense(n)
    return 4.0 * x * x * p - q


def cofactor_det(m: np.ndarray) -> float:
    """Determinant by Laplace expansion along the first row (small matrices only)."""
    m = np.asarray(m, dtype=float)
    size = m.shape[0]
    if size == 1:
        return float(m[0, 0])
    total = 0.0
    for col in range(size):
        if m[0, col] == 0.0:
            continue
        minor = np.delete(np.delete(m, 0, axis=0), col, axis=1)
        total += (-1) ** col * m[0, col] * cofactor_det(minor)
    return total


def phi_det_seeds(x: float) -> list[float]:
    """``det Phi_1 .. det Phi_5`` from explicitly built matrices."""
    return [cofactor_det(phi_matrix(k, x)) for k in range(1, 6)]


def phi_det_recurrence(n: int, x: float) -> float:
    """``det(4x^2(I-A) - (I-B))`` via the fifth-order constant-coefficient recurrence."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    z = phi_det_seeds(x)
    if n <= 5:
        return z[n - 1]
    x2 = x * x
    c1 = 4.0 * x2 - 1.5
    c2 = -4.0 * x2 * x2 + 2.0 * x2 - 0.5
    for _ in range(n - 5):
        nxt = c1 * (z[-1] - z[-4] / 8.0) + c2 * (z[-2] - z[-3] / 2.0) + z[-5] / 32.0
        z = z[1:] + [nxt]
    return z[-1]


def phi_det_closed(n: int, x: float) -> float:
    """``U_{n+1}(x) U'_{n+1}(x) / (2^{n+2} x)``."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if x == 0:
        raise ValueError("closed-form determinant is undefined at x = 0")
    deriv = u_deriv(n + 1, x) if abs(x) < 1 else u_deriv_recurrence(n + 1, x)
    return float(u_eval(n + 1, x) * deriv / (2.0 ** (n + 2) * x))


def phi_det_scale(n: int, x: float) -> float:
    """Magnitude against which an absolute determinant residual is judged.

    The largest ``|det Phi_k(x)|`` for ``k <= n``, floored at 1: the
    recurrence cannot resolve its last term more finely than its history.
    """
    return max(1.0, max(abs(phi_det_recurrence(k, x)) for k in range(1, n + 1)))


def _nu_roots(n: int) -> np.ndarray:
    # zeros of U'_{n+1} interlace the zeros cos(j pi/(n+2)) of U_{n+1}
    m = n + 2
    roots = []
    for j in range(1, n // 2 + 1):
        hi = math.cos(j * math.pi / m)
        lo = math.cos((j + 1) * math.pi / m)
        roots.append(
            brentq(lambda v: float(u_deriv_recurrence(n + 1, v)), lo, hi, xtol=1e-15)
        )
    return np.array(roots)


def closed_form_roots(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Positive roots of the determinant: ``mu_j = cos(j pi/(n+2))`` and the zeros of ``U'_{n+1}``.

    Both arrays are in decreasing order (``mu_1`` and ``nu_1`` first).
    """
    mu = np.cos(np.arange(1, (n + 1) // 2 + 1) * math.pi / (n + 2))
    return mu, _nu_roots(n)


@dataclass(frozen=True)
class SpectralSystem:
    n_order: int
    eigenvalues: np.ndarray
    mu_roots: np.ndarray
    nu_roots: np.ndarray
    eigenvector: np.ndarray | None = field(default=None, repr=False)

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[0])

    def reference_eigenvalues(self) -> np.ndarray:
        roots = np.concatenate([self.mu_roots, self.nu_roots])
        return np.sort(1.0 / (4.0 * roots**2))

    def interlacing_ok(self) -> bool:
        """Descending merge must read mu_1 > nu_1 > mu_2 > nu_2 > ... > 0."""
        merged = []
        for j in range(max(len(self.mu_roots), len(self.nu_roots))):
            if j < len(self.mu_roots):
                merged.append(self.mu_roots[j])
            if j < len(self.nu_roots):
                merged.append(self.nu_roots[j])
        merged = np.array(merged)
        return bool(np.all(np.diff(merged) < 0) and merged[-1] > 0)


def generalized_eigs(n: int, vectors: bool = False) -> SpectralSystem:
    """Solve ``(I - A) v = lambda (I - B) v``.

    The pencil is symmetric-definite; LAPACK reduces it to standard form
    through the Cholesky factor of ``I - B``. With ``vectors=True`` the
    eigenvector of the smallest eigenvalue is returned, scaled to a unit
    first component.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > MAX_ORDER:
        raise ResourceLimitError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    p, q = pencil_dense(n)
    vec = None
    if vectors:
        w, v = scipy.linalg.eigh(p, q)
        vec = v[:, 0] / v[0, 0]
    else:
        w = scipy.linalg.eigh(p, q, eigvals_only=True)
    mu, nu = closed_form_roots(n)
    for arr in (w, mu, nu) + ((vec,) if vec is not None else ()):
        arr.setflags(write=False)
    return SpectralSystem(n_order=n, eigenvalues=w, mu_roots=mu, nu_roots=nu, eigenvector=vec)


def delta0(n: int) -> np.ndarray:
    """``(U_0 U_1, U_1 U_2, ..., U_{n-1} U_n)`` at ``x0 = cos(pi/(n+2))``."""
    u = u_table(n, node(n).x0)
    return u[:-1] * u[1:]


@dataclass(frozen=True)
class AutocorrelationVector:
    """Factor coefficients ``d`` and their autocorrelations ``beta_0 .. beta_{N+1}``."""

    d: np.ndarray
    beta: np.ndarray

    @property
    def n_order(self) -> int:
        return len(self.d)

    def cosine_series(self, t):
        """``beta_0 + 2 sum_k beta_k cos(k t)``, equal to ``|sum_j d_j e^{i(j-1)t}|^2``."""
        t = np.asarray(t, dtype=float)
        k = np.arange(1, self.n_order)
        return self.beta[0] + 2.0 * np.cos(np.multiply.outer(t, k)) @ self.beta[1 : self.n_order]


def beta_from_d(d) -> AutocorrelationVector:
    d = np.array(d, dtype=float, ndmin=1)
    if d.size == 0:
        raise ValueError("d must be nonempty")
    n = d.size
    beta = np.zeros(n + 2)
    for k in range(n):
        beta[k] = float(np.dot(d[: n - k], d[k:]))
    d.setflags(write=False)
    beta.setflags(write=False)
    return AutocorrelationVector(d=d, beta=beta)
