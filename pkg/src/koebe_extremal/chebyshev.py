"""Chebyshev polynomials of the second kind.

``U_j(cos t) = sin((j+1)t) / sin t``. Values come from the three-term
recurrence, so every function here is a plain polynomial evaluation and is
defined for any real ``x``; the sine quotient is only used by the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ChebNode",
    "node",
    "u_eval",
    "u_table",
    "u_deriv",
    "u_deriv_closed",
    "u_deriv_recurrence",
    "trig_identity_sides",
]

# below this distance from +-1 the closed derivative forms lose too much
# to the 1/(1 - x^2) factor
ENDPOINT_GUARD = 1e-9


@dataclass(frozen=True)
class ChebNode:
    """The node ``cos(pi/(N+2))`` together with its sine."""

    n_order: int
    x0: float
    sin0: float

    @property
    def angle(self) -> float:
        return math.pi / (self.n_order + 2)


def node(n: int) -> ChebNode:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    theta = math.pi / (n + 2)
    return ChebNode(n_order=n, x0=math.cos(theta), sin0=math.sin(theta))


def u_table(n: int, x):
    """Return ``[U_0(x), ..., U_n(x)]`` stacked along the first axis."""
    x = np.asarray(x, dtype=float)
    out = np.empty((n + 1,) + x.shape)
    out[0] = 1.0
    if n >= 1:
        out[1] = 2.0 * x
    for k in range(1, n):
        out[k + 1] = 2.0 * x * out[k] - out[k - 1]
    return out


def u_eval(j: int, x):
    """Evaluate ``U_j(x)``; ``U_{-1}`` is taken as 0."""
    if j < 0:
        if j == -1:
            return np.zeros_like(np.asarray(x, dtype=float))[()]
        raise ValueError(f"degree must be >= -1, got {j}")
    return u_table(j, x)[j][()]


def u_deriv_recurrence(j: int, x):
    """``U_j'(x)`` from the differentiated recurrence ``U'_{k+1} = 2U_k + 2xU'_k - U'_{k-1}``.

    Regular everywhere, including ``x = +-1``.
    """
    if j < 0:
        raise ValueError(f"degree must be >= 0, got {j}")
    x = np.asarray(x, dtype=float)
    u_prev, u_cur = np.zeros_like(x), np.ones_like(x)
    d_prev, d_cur = np.zeros_like(x), np.zeros_like(x)
    for _ in range(j):
        u_prev, u_cur = u_cur, 2.0 * x * u_cur - u_prev
        d_prev, d_cur = d_cur, 2.0 * u_prev + 2.0 * x * d_cur - d_prev
    return d_cur[()]


def u_deriv_closed(j: int, x, form: str = "mixed", one_minus_x2=None):
    """``U_j'(x)`` from one of the two closed forms, valid for ``|x| < 1``.

    ``form="shifted"``: ``((j+2) U_{j-1} - j U_{j+1}) / (2(1-x^2))``
    ``form="mixed"``:   ``((j+1) U_{j-1} - j x U_j) / (1-x^2)``

    ``one_minus_x2`` lets callers pass ``sin^2`` of the angle directly
    instead of forming ``1 - x^2`` by subtraction.
    """
    x = np.asarray(x, dtype=float)
    denom = (1.0 - x * x) if one_minus_x2 is None else np.asarray(one_minus_x2, dtype=float)
    table = u_table(j + 1, x)
    u_jm1 = table[j - 1] if j >= 1 else np.zeros_like(x)
    if form == "shifted":
        val = ((j + 2) * u_jm1 - j * table[j + 1]) / (2.0 * denom)
    elif form == "mixed":
        val = ((j + 1) * u_jm1 - j * x * table[j]) / denom
    else:
        raise ValueError(f"unknown derivative form {form!r}")
    return val[()]


def u_deriv(j: int, x):
    """Evaluate ``U_j'(x)``.

    Uses the closed form away from the endpoints and the differentiated
    recurrence when ``|x| >= 1 - 1e-9``.
    """
    if j < 0:
        raise ValueError(f"degree must be >= 0, got {j}")
    x = np.asarray(x, dtype=float)
    near = np.abs(x) >= 1.0 - ENDPOINT_GUARD
    if not near.any():
        return u_deriv_closed(j, x)
    if near.all():
        return u_deriv_recurrence(j, x)
    out = np.empty_like(x)
    out[near] = u_deriv_recurrence(j, x[near])
    out[~near] = u_deriv_closed(j, x[~near])
    return out


def trig_identity_sides(n: int, k: int) -> tuple[float, float]:
    """Both sides of the sine-product summation identity at ``theta = pi/(n+2)``.

    Left: ``2 sum_{j=1}^{n-k} sin((j+1)theta) sin((j+k)theta)``.
    Right: ``(n-k-1) sin(k theta) sin(theta)
    + cot(theta)/2 * ((n-k+3) sin((k+1)theta) - (n-k+1) sin((k-1)theta))``.
    Valid for ``k = 0..n-1``.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in 0..{n - 1}, got {k}")
    theta = math.pi / (n + 2)
    j = np.arange(1, n - k + 1)
    lhs = 2.0 * float(np.sum(np.sin((j + 1) * theta) * np.sin((j + k) * theta)))
    rhs = (n - k - 1) * math.sin(k * theta) * math.sin(theta) + 0.5 * (
        math.cos(theta) / math.sin(theta)
    ) * ((n - k + 3) * math.sin((k + 1) * theta) - (n - k + 1) * math.sin((k - 1) * theta))
    return lhs, rhs
