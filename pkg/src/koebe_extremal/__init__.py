"""Extremal polynomials for the Koebe radius and their numerical verification.

Submodules: :mod:`chebyshev` (Chebyshev polynomials of the second kind),
:mod:`spectral` (the quadratic-form pencil), :mod:`extremal` (coefficient
families), :mod:`analysis` (boundary-curve checks) and :mod:`cli`.
"""

from . import analysis, chebyshev, extremal, spectral
from .extremal import UnitPolynomial, koebe_coeffs, koebe_value, polynomial

__version__ = "0.1.0"

__all__ = [
    "analysis",
    "chebyshev",
    "extremal",
    "spectral",
    "UnitPolynomial",
    "koebe_coeffs",
    "koebe_value",
    "polynomial",
]
