"""Coefficient families of the extremal polynomials.

Every constructor returns a :class:`UnitPolynomial` holding ``a_1..a_N`` of
``F(z) = sum_j a_j z^j`` together with its normalization and a family tag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import node, u_deriv, u_eval, u_table
from .spectral import AutocorrelationVector, beta_from_d, generalized_eigs

__all__ = [
    "UnitPolynomial",
    "DegenerateError",
    "NORMALIZATIONS",
    "polynomial",
    "koebe_coeffs",
    "koebe_value",
    "alternating_coeffs",
    "alternating_value",
    "coeffs_from_beta",
    "eigen_pipeline_coeffs",
    "fejer_cosine_coeffs",
    "fejer_cosine_value",
    "fejer_classical_coeffs",
    "fejer_classical_value",
    "suffridge_coeffs",
    "suffridge_value",
    "suffridge_q_coeffs",
    "koebe_q_coeffs",
    "odd_harmonic_coeffs",
    "odd_coeffs",
    "odd_reference_value",
    "rotate",
]

NORMALIZATIONS = ("first-coeff-one", "sum-one", "value-at-one", "literal", "unnormalized")

_NORM_TOL = 1e-12


class DegenerateError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class UnitPolynomial:
    coeffs: np.ndarray
    normalization: str
    family: str

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=float, ndmin=1)
        if a.size == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        if not np.all(np.isfinite(a)):
            raise ValueError(f"non-finite coefficient in {self.family}")
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if self.normalization == "first-coeff-one" and a[0] != 1.0:
            raise ValueError(f"a_1 = {a[0]!r}, expected exactly 1")
        if self.normalization in ("sum-one", "value-at-one") and abs(a.sum() - 1.0) > _NORM_TOL:
            raise ValueError(f"coefficients sum to {a.sum()!r}, expected 1")
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __call__(self, z):
        """Evaluate ``F(z)`` by Horner's rule."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for a in self.coeffs[::-1]:
            acc = (acc + a) * z
        return acc[()]

    def with_coeffs(self, coeffs, family: str | None = None) -> "UnitPolynomial":
        coeffs = np.asarray(coeffs, dtype=float)
        norm = "first-coeff-one" if coeffs[0] == 1.0 else "unnormalized"
        return UnitPolynomial(coeffs, norm, family or self.family)


def polynomial(coeffs, family: str = "custom") -> UnitPolynomial:
    """Wrap raw coefficients ``a_1..a_N``, tagging ``first-coeff-one`` when ``a_1 == 1``."""
    coeffs = np.array(coeffs, dtype=float, ndmin=1)
    norm = "first-coeff-one" if coeffs[0] == 1.0 else "unnormalized"
    return UnitPolynomial(coeffs, norm, family)


def _check_order(n: int):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")


def _pin_first(a: np.ndarray, family: str) -> np.ndarray:
    if abs(a[0] - 1.0) > _NORM_TOL:
        raise DegenerateError(f"{family}: leading quotient {a[0]!r} is not 1")
    a = a.copy()
    a[0] = 1.0
    return a


def _u_deriv_at_node(n: int) -> np.ndarray:
    """``[U'_0(x0), ..., U'_n(x0)]`` at ``x0 = cos(pi/(n+2))``."""
    nd = node(n)
    return np.array([u_deriv(k, nd.x0) for k in range(n + 1)])


def koebe_coeffs(n: int) -> UnitPolynomial:
    """``a_j = U'_{N-j+1}(x0) U_{j-1}(x0) / U'_N(x0)`` with ``x0 = cos(pi/(N+2))``."""
    _check_order(n)
    x0 = node(n).x0
    du = _u_deriv_at_node(n)
    u = u_table(n, x0)
    j = np.arange(1, n + 1)
    a = du[n - j + 1] * u[j - 1] / du[n]
    return UnitPolynomial(_pin_first(a, "koebe"), "first-coeff-one", "koebe")


def koebe_value(n: int) -> float:
    """Supremum of the real-axis crossing minimum: ``-sec^2(pi/(N+2)) / 4``."""
    _check_order(n)
    # 4 cos^2(theta) = 2 (1 + cos 2 theta) keeps J_2 = -1/2 exact
    return -0.5 / (1.0 + math.cos(2.0 * math.pi / (n + 2)))


def alternating_coeffs(n: int) -> UnitPolynomial:
    a = koebe_coeffs(n).coeffs * (-1.0) ** np.arange(n)
    return UnitPolynomial(a, "first-coeff-one", "alternating")


def alternating_value(n: int) -> float:
    return -koebe_value(n)


def coeffs_from_beta(beta) -> UnitPolynomial:
    """``a_j = (beta_{j-1} - beta_{j+1}) / (beta_0 - beta_2)``.

    ``beta`` is an :class:`AutocorrelationVector` or a raw array
    ``beta_0..beta_{N+1}`` with the two trailing zeros.
    """
    b = beta.beta if isinstance(beta, AutocorrelationVector) else np.asarray(beta, dtype=float)
    n = len(b) - 2
    if n < 1:
        raise ValueError("autocorrelation vector too short")
    denom = b[0] - b[2]
    if abs(denom) < 1e-14:
        raise DegenerateError(f"beta_0 - beta_2 = {denom!r}")
    a = (b[: n] - b[2 : n + 2]) / denom
    a[0] = 1.0
    return UnitPolynomial(a, "first-coeff-one", "koebe-from-beta")


def eigen_pipeline_coeffs(n: int) -> UnitPolynomial:
    """Koebe-optimal coefficients from the numerical generalized eigenvector."""
    system = generalized_eigs(n, vectors=True)
    poly = coeffs_from_beta(beta_from_d(system.eigenvector))
    return UnitPolynomial(poly.coeffs, poly.normalization, "koebe-eigen")


def fejer_cosine_coeffs(n: int) -> UnitPolynomial:
    """Maximizer of ``min_t sum_j a_j cos(j t)`` under ``a_1 = 1``."""
    _check_order(n)
    du = _u_deriv_at_node(n)
    j = np.arange(1, n + 1)
    a = du[n - j + 1] / du[n]
    return UnitPolynomial(_pin_first(a, "fejer-cosine"), "first-coeff-one", "fejer-cosine")


def fejer_cosine_value(n: int) -> float:
    _check_order(n)
    return -0.5 / node(n).x0


def fejer_classical_coeffs(n: int) -> UnitPolynomial:
    """Fejer-kernel coefficients ``2(N+1-j)/(N(N+1))``, summing to one."""
    _check_order(n)
    j = np.arange(1, n + 1)
    a = 2.0 * (n + 1 - j) / (n * (n + 1))
    return UnitPolynomial(a, "sum-one", "fejer-classical")


def fejer_classical_value(n: int) -> float:
    _check_order(n)
    return -1.0 / n


def _suffridge_lead(n: int) -> float:
    return 2.0 * n / (n + 1) * (1.0 - math.cos(math.pi / (n + 1)))


def suffridge_coeffs(n: int) -> UnitPolynomial:
    _check_order(n)
    return suffridge_q_coeffs(n, 1)


def suffridge_value(n: int) -> float:
    _check_order(n)
    return -math.tan(math.pi / (2 * (n + 1))) ** 2


def suffridge_q_coeffs(n: int, q: int) -> UnitPolynomial:
    """``a_j = a_1^0 (1 - (j-1)/N) U_{jq-1}(cos(pi/(N+1)))``, kept literal for ``q > 1``."""
    _check_order(n)
    if not 1 <= q <= n:
        raise ValueError(f"q must lie in 1..{n}, got {q}")
    j = np.arange(1, n + 1)
    u = u_table(n * q, math.cos(math.pi / (n + 1)))
    a = _suffridge_lead(n) * (1.0 - (j - 1) / n) * u[j * q - 1]
    if q == 1:
        return UnitPolynomial(a, "value-at-one", "suffridge")
    return UnitPolynomial(a, "literal", f"suffridge-q{q}")


def koebe_q_coeffs(n: int, q: int) -> UnitPolynomial:
    """``a_j = U'_{N-j+1}(x0) U_{jq-1}(x0) / (U_{q-1}(x0) U'_N(x0))``."""
    _check_order(n)
    if not 1 <= q <= n:
        raise ValueError(f"q must lie in 1..{n}, got {q}")
    x0 = node(n).x0
    lead = float(u_eval(q - 1, x0))
    # U_{q-1}(x0) = sin(q pi/(N+2)) / sin(pi/(N+2)) > 0 for q <= N+1
    assert lead > 0.0
    du = _u_deriv_at_node(n)
    u = u_table(n * q, x0)
    j = np.arange(1, n + 1)
    a = du[n - j + 1] * u[j * q - 1] / (lead * du[n])
    family = "koebe" if q == 1 else f"koebe-q{q}"
    return UnitPolynomial(_pin_first(a, family), "first-coeff-one", family)


def odd_harmonic_coeffs(n: int) -> np.ndarray:
    """Compact coefficients of the odd-harmonic family, one per harmonic ``2j-1``."""
    _check_order(n)
    x = math.cos(math.pi / (2 * n + 2))
    top = float(u_deriv(2 * n, x))
    a = np.array([u_deriv(2 * (n - j + 1), x) for j in range(1, n + 1)]) / top
    a[0] = 1.0
    return a


def odd_coeffs(n: int) -> UnitPolynomial:
    """Odd-harmonic family expanded to degree ``2N-1`` (even powers zero)."""
    compact = odd_harmonic_coeffs(n)
    a = np.zeros(2 * n - 1)
    a[::2] = compact
    return UnitPolynomial(a, "first-coeff-one", "odd")


def odd_reference_value(n: int) -> float:
    """``sec^2(pi/(2N+2)) / 2``, the magnitude in the odd-harmonic conjecture."""
    _check_order(n)
    return 0.5 / math.cos(math.pi / (2 * n + 2)) ** 2


def rotate(p: UnitPolynomial, alpha: float) -> np.ndarray:
    """Complex coefficients of ``e^{-i alpha} F(z e^{i alpha})``."""
    j = np.arange(len(p.coeffs))
    return p.coeffs * np.exp(1j * alpha * j)
