"""Trial functions that satisfy the boundary conditions structurally.

The approximation is f(x) = x/(x^2+1) + (x^2/(x^2+1)) * sum_j a_j RJ_j(x).
Both terms carry a factor of x, so f(0) = 0 for any coefficients; the
envelope x^2/(x^2+1) and its derivative vanish at the origin, which pins
f'(0) = 1, and the basis derivatives decay like 1/x^2, so f'(inf) = 0 holds
implicitly rather than through domain truncation.
"""

from dataclasses import dataclass

import numpy as np

from .jacobi import JacobiParams
from .rational import RationalMap, eval_rj, rj_derivative_tables
from .validation import as_float_array, check_order, restore_scalar

__all__ = ["boundary_term", "basis_function", "TrialBasis", "TrialFunction", "eval_trial"]


def boundary_term(x, order: int = 0):
    """x/(x^2+1) or one of its first three derivatives, in closed form."""
    order = check_order(order)
    arr, scalar = as_float_array(x, "x", nonnegative=True)
    d = arr * arr + 1.0
    if order == 0:
        out = arr / d
    elif order == 1:
        out = (1.0 - arr * arr) / d**2
    elif order == 2:
        out = 2.0 * arr * (arr * arr - 3.0) / d**3
    else:
        out = -6.0 * (arr**4 - 6.0 * arr * arr + 1.0) / d**4
    return restore_scalar(out, scalar)


def _envelope(x: np.ndarray, order: int) -> np.ndarray:
    """x^2/(x^2+1) and derivatives; this factor zeroes the basis at the wall."""
    d = x * x + 1.0
    if order == 0:
        return x * x / d
    if order == 1:
        return 2.0 * x / d**2
    if order == 2:
        return (2.0 - 6.0 * x * x) / d**3
    return 24.0 * x * (x * x - 1.0) / d**4


def basis_function(m: RationalMap, params: JacobiParams, j: int, x, order: int = 0):
    """phi_j(x) = x^2/(x^2+1) RJ_j(x), or its order-th derivative (Leibniz)."""
    order = check_order(order)
    arr, scalar = as_float_array(x, "x", nonnegative=True)
    rj = [eval_rj(m, params, j, arr, k) for k in range(order + 1)]
    env = [_envelope(arr, k) for k in range(order + 1)]
    if order == 0:
        out = env[0] * rj[0]
    elif order == 1:
        out = env[1] * rj[0] + env[0] * rj[1]
    elif order == 2:
        out = env[2] * rj[0] + 2.0 * env[1] * rj[1] + env[0] * rj[2]
    else:
        out = env[3] * rj[0] + 3.0 * env[2] * rj[1] + 3.0 * env[1] * rj[2] + env[0] * rj[3]
    return restore_scalar(out, scalar)


@dataclass(frozen=True, eq=False)
class TrialBasis:
    """The decomposed trial family: fixed boundary term + modulated basis.

    degree is the highest basis degree; the coefficient vector of a trial
    function therefore has degree+1 entries.
    """

    map: RationalMap
    params: JacobiParams
    degree: int

    def __post_init__(self):
        if int(self.degree) < 0:
            raise ValueError("degree must be >= 0")
        object.__setattr__(self, "degree", int(self.degree))

    @property
    def size(self) -> int:
        return self.degree + 1

    def boundary(self, x, order: int = 0):
        return boundary_term(x, order)

    def matrices(self, x):
        """Basis matrices for orders 0..3 at the points x, each (len(x), degree+1)."""
        arr, _ = as_float_array(np.atleast_1d(x), "x", nonnegative=True)
        r0, r1, r2, r3 = rj_derivative_tables(self.map, self.params, self.degree, arr)
        e0, e1, e2, e3 = (_envelope(arr, k) for k in range(4))
        p0 = e0 * r0
        p1 = e1 * r0 + e0 * r1
        p2 = e2 * r0 + 2.0 * e1 * r1 + e0 * r2
        p3 = e3 * r0 + 3.0 * e2 * r1 + 3.0 * e1 * r2 + e0 * r3
        return p0.T, p1.T, p2.T, p3.T

    def matrix(self, x, order: int = 0) -> np.ndarray:
        order = check_order(order)
        return self.matrices(x)[order]


@dataclass(frozen=True, eq=False)
class TrialFunction:
    """An evaluable trial function: a basis plus a frozen coefficient vector."""

    basis: TrialBasis
    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=float)
        if coeffs.shape != (self.basis.size,):
            raise ValueError(
                f"expected {self.basis.size} coefficients, got shape {coeffs.shape}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coefficients", coeffs)

    def __call__(self, x, order: int = 0):
        order = check_order(order)
        arr, scalar = as_float_array(x, "x", nonnegative=True)
        flat = np.atleast_1d(arr)
        values = self.basis.boundary(flat, order) + self.basis.matrix(flat, order) @ self.coefficients
        return float(values[0]) if scalar else values


def eval_trial(tf: TrialFunction, x, order: int = 0):
    """Evaluate a trial function or one of its first three derivatives."""
    return tf(x, order)
