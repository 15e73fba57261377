"""Boundary values ``F(e^{it}) = C(t) + i S(t)`` by Clenshaw summation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..extremal import UnitPolynomial

__all__ = [
    "BoundaryCurve",
    "as_coeffs",
    "clenshaw",
    "eval_boundary",
    "boundary_values",
    "reduced_sine",
    "boundary_curve",
    "uniform_circle",
]


def as_coeffs(p) -> np.ndarray:
    """Coefficient array ``a_1..a_N`` of a UnitPolynomial or any array-like."""
    if isinstance(p, UnitPolynomial):
        return p.coeffs
    a = np.asarray(p)
    if not np.iscomplexobj(a):
        a = a.astype(float)
    return np.atleast_1d(a)


def _is_real(a: np.ndarray) -> bool:
    return not np.iscomplexobj(a) or not np.any(a.imag)


def clenshaw(a: np.ndarray, t):
    """Return ``(sum a_j cos jt, sum a_j sin jt, b_1)`` for ``j = 1..N``.

    ``b_1 = sum_j a_j U_{j-1}(cos t)``, so the sine sum is ``sin(t) * b_1``.
    """
    t = np.asarray(t, dtype=float)
    c = np.cos(t)
    two_c = 2.0 * c
    dtype = complex if np.iscomplexobj(a) else float
    b1 = np.zeros(t.shape, dtype=dtype)
    b2 = np.zeros(t.shape, dtype=dtype)
    for coef in a[::-1]:
        b1, b2 = coef + two_c * b1 - b2, b1
    return c * b1 - b2, np.sin(t) * b1, b1


def boundary_values(p, t):
    """Complex boundary values ``F(e^{it})``."""
    a = as_coeffs(p)
    cos_sum, sin_sum, _ = clenshaw(a, t)
    return cos_sum + 1j * sin_sum


def eval_boundary(p, t):
    """``(C(t), S(t)) = (Re F(e^{it}), Im F(e^{it}))``.

    For real coefficients these are the conjugate pair
    ``sum a_j cos jt`` and ``sum a_j sin jt``.
    """
    a = as_coeffs(p)
    cos_sum, sin_sum, _ = clenshaw(a, t)
    if _is_real(a):
        return np.real(cos_sum)[()], np.real(sin_sum)[()]
    f = cos_sum + 1j * sin_sum
    return f.real[()], f.imag[()]


def reduced_sine(p, t):
    """``S(t) / sin t``, a polynomial in ``cos t`` with the same zeros on ``(0, pi)``."""
    a = as_coeffs(p)
    return np.real(clenshaw(a, t)[2])[()]


def uniform_circle(m: int) -> np.ndarray:
    return np.arange(m) * (2.0 * np.pi / m)


@dataclass(frozen=True)
class BoundaryCurve:
    t: np.ndarray
    c: np.ndarray
    s: np.ndarray
    closed: bool = True

    @property
    def samples(self):
        return list(zip(self.t.tolist(), self.c.tolist(), self.s.tolist()))

    @property
    def points(self) -> np.ndarray:
        return self.c + 1j * self.s


def boundary_curve(p, m: int = 8192) -> BoundaryCurve:
    """Sample ``F(e^{it})`` at ``m`` equispaced points of ``[0, 2 pi)``."""
    if m < 8:
        raise ValueError(f"need at least 8 samples, got {m}")
    t = uniform_circle(m)
    c, s = eval_boundary(p, t)
    return BoundaryCurve(t=t, c=np.asarray(c), s=np.asarray(s), closed=True)
