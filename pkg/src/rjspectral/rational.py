"""Rational Jacobi basis on [0, inf): the algebraic map, values, derivatives.

The basis is RJ_n(x) = J_n^{alpha,beta}((x - L) / (x + L)) for a map scale
L > 0.  x-derivatives up to order 3 come from hard-coded chain-rule formulas
for this specific map, which keeps the third-order ODE terms exact.
"""

from dataclasses import dataclass

import numpy as np

from .jacobi import JacobiParams, derivative_prefactor, eval_jacobi, eval_jacobi_derivative, jacobi_roots, jacobi_table
from .validation import as_float_array, check_degree, check_order, check_positive, restore_scalar

__all__ = [
    "RationalMap",
    "CollocationGrid",
    "forward_map",
    "inverse_map",
    "eval_rj",
    "mapped_weight",
    "collocation_grid",
    "rj_derivative_tables",
]


@dataclass(frozen=True)
class RationalMap:
    """Map t = (x - L) / (x + L) between [0, inf) and [-1, 1)."""

    scale: float

    def __post_init__(self):
        object.__setattr__(self, "scale", check_positive(self.scale, "scale"))


@dataclass(frozen=True, eq=False)
class CollocationGrid:
    """Strictly increasing collocation points on (0, inf)."""

    points: np.ndarray

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 1 or points.size == 0:
            raise ValueError("grid points must form a nonempty 1-D array")
        if not np.all(np.isfinite(points)) or np.any(points <= 0.0):
            raise ValueError("grid points must be finite and positive")
        if np.any(np.diff(points) <= 0.0):
            raise ValueError("grid points must be strictly increasing")
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return self.points.size


def forward_map(m: RationalMap, x):
    """t(x) = (x - L) / (x + L); maps 0 to -1 and infinity to 1."""
    arr, scalar = as_float_array(x, "x", nonnegative=True)
    return restore_scalar((arr - m.scale) / (arr + m.scale), scalar)


def inverse_map(m: RationalMap, t):
    """x(t) = L (1 + t) / (1 - t) for t in [-1, 1)."""
    arr, scalar = as_float_array(t, "t")
    if np.any(arr < -1.0) or np.any(arr >= 1.0):
        raise ValueError("t must lie in [-1, 1); the image of t >= 1 is infinite")
    return restore_scalar(m.scale * (1.0 + arr) / (1.0 - arr), scalar)


def _map_derivatives(m: RationalMap, x: np.ndarray):
    """dt/dx and the next two derivatives of the algebraic map."""
    s = x + m.scale
    t1 = 2.0 * m.scale / s**2
    t2 = -4.0 * m.scale / s**3
    t3 = 12.0 * m.scale / s**4
    return t1, t2, t3


def eval_rj(m: RationalMap, params: JacobiParams, n: int, x, order: int = 0):
    """RJ_n(x) for order 0, or its order-th x-derivative (order <= 3)."""
    n = check_degree(n)
    order = check_order(order)
    arr, scalar = as_float_array(x, "x", nonnegative=True)
    t = (arr - m.scale) / (arr + m.scale)
    if order == 0:
        return restore_scalar(eval_jacobi(params, n, t), scalar)

    t1, t2, t3 = _map_derivatives(m, arr)
    j1 = eval_jacobi_derivative(params, n, t, 1)
    if order == 1:
        out = j1 * t1
    elif order == 2:
        j2 = eval_jacobi_derivative(params, n, t, 2)
        out = j2 * t1**2 + j1 * t2
    else:
        j2 = eval_jacobi_derivative(params, n, t, 2)
        j3 = eval_jacobi_derivative(params, n, t, 3)
        out = j3 * t1**3 + 3.0 * j2 * t1 * t2 + j1 * t3
    return restore_scalar(out, scalar)


def mapped_weight(m: RationalMap, params: JacobiParams, x):
    """Weight 2^(a+b+1) x^b L^(a+1) / (x + L)^(a+b+2) on [0, inf)."""
    arr, scalar = as_float_array(x, "x", nonnegative=True)
    if params.beta < 0.0 and np.any(arr == 0.0):
        raise ValueError("x = 0 requires beta >= 0 (the weight diverges)")
    a, b = params.alpha, params.beta
    out = 2.0 ** (a + b + 1.0) * arr**b * m.scale ** (a + 1.0) / (arr + m.scale) ** (a + b + 2.0)
    return restore_scalar(out, scalar)


def collocation_grid(m: RationalMap, params: JacobiParams, degree: int) -> CollocationGrid:
    """The degree+1 mapped roots of J_{degree+1}, i.e. the roots of RJ_{degree+1}."""
    degree = check_degree(degree, "degree")
    nodes = jacobi_roots(params, degree + 1).nodes
    return CollocationGrid(inverse_map(m, nodes))


def _shifted_derivative_table(params: JacobiParams, n_max: int, t: np.ndarray, order: int) -> np.ndarray:
    """Table of the order-th t-derivative of J_0..J_{n_max}; rows n < order are zero."""
    out = np.zeros((n_max + 1,) + t.shape)
    if n_max < order:
        return out
    base = jacobi_table(params.shifted(order), n_max - order, t)
    for n in range(order, n_max + 1):
        out[n] = derivative_prefactor(params, n, order) * base[n - order]
    return out


def rj_derivative_tables(m: RationalMap, params: JacobiParams, n_max: int, x):
    """Values and x-derivatives of RJ_0..RJ_{n_max} at the points x.

    Returns four arrays of shape (n_max + 1, len(x)) for orders 0..3; the
    shared point-evaluations are computed once, which is what the collocation
    assembly calls repeatedly.
    """
    n_max = check_degree(n_max, "n_max")
    arr, _ = as_float_array(np.atleast_1d(x), "x", nonnegative=True)
    t = (arr - m.scale) / (arr + m.scale)
    t1, t2, t3 = _map_derivatives(m, arr)

    j0 = jacobi_table(params, n_max, t)
    j1 = _shifted_derivative_table(params, n_max, t, 1)
    j2 = _shifted_derivative_table(params, n_max, t, 2)
    j3 = _shifted_derivative_table(params, n_max, t, 3)

    r0 = j0
    r1 = j1 * t1
    r2 = j2 * t1**2 + j1 * t2
    r3 = j3 * t1**3 + 3.0 * j2 * t1 * t2 + j1 * t3
    return r0, r1, r2, r3
