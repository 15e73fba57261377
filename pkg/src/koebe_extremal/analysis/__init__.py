"""Numerical verification: boundary values, zero sets, univalence and covering."""

from .boundary import (
    BoundaryCurve,
    as_coeffs,
    boundary_curve,
    boundary_values,
    clenshaw,
    eval_boundary,
    reduced_sine,
    uniform_circle,
)
from .covering import (
    CoveredInterval,
    PointOnCurveError,
    boundary_distance,
    covering_check,
    koebe_radius_estimate,
    real_axis_crossings,
    rogosinski_bounds,
    rogosinski_psi,
    winding_number,
    winding_numbers,
)
from .report import ReportEntry, VerificationReport
from .univalence import (
    Crossing,
    SimplicityResult,
    interior_critical_points,
    is_boundary_simple,
    segment_crossings,
)
from .zeros import (
    CoarseGridWarning,
    ZeroSet,
    is_typically_real,
    max_re_on_zero_set,
    min_re_on_zero_set,
    re_on_zero_set,
    trig_poly_min,
    zero_set,
)

__all__ = [
    "BoundaryCurve",
    "CoarseGridWarning",
    "CoveredInterval",
    "Crossing",
    "PointOnCurveError",
    "ReportEntry",
    "SimplicityResult",
    "VerificationReport",
    "ZeroSet",
    "as_coeffs",
    "boundary_curve",
    "boundary_distance",
    "boundary_values",
    "clenshaw",
    "covering_check",
    "eval_boundary",
    "interior_critical_points",
    "is_boundary_simple",
    "is_typically_real",
    "koebe_radius_estimate",
    "max_re_on_zero_set",
    "min_re_on_zero_set",
    "re_on_zero_set",
    "real_axis_crossings",
    "reduced_sine",
    "rogosinski_bounds",
    "rogosinski_psi",
    "segment_crossings",
    "trig_poly_min",
    "uniform_circle",
    "winding_number",
    "winding_numbers",
    "zero_set",
]
