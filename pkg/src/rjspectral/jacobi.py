"""Jacobi polynomials on [-1, 1]: stable evaluation, derivatives, and Gauss rules.

Evaluation uses the three-term recurrence, which stays well conditioned for
the degrees this package needs (n up to a few hundred); the explicit
gamma-function sum cancels catastrophically already for moderate n and is
used only as a small-degree test oracle.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import RootFindingError
from .validation import as_float_array, check_degree, check_order, restore_scalar

__all__ = [
    "JacobiParams",
    "NodeSet",
    "eval_jacobi",
    "eval_jacobi_derivative",
    "jacobi_table",
    "jacobi_roots",
]

_NEWTON_TOL = 1e-14
_NEWTON_CAP = 100


@dataclass(frozen=True)
class JacobiParams:
    """Exponents of the weight (1-t)^alpha (1+t)^beta; both must exceed -1."""

    alpha: float
    beta: float

    def __post_init__(self):
        alpha, beta = float(self.alpha), float(self.beta)
        if not (math.isfinite(alpha) and math.isfinite(beta)):
            raise ValueError("alpha and beta must be finite")
        if alpha <= -1.0 or beta <= -1.0:
            raise ValueError(f"alpha and beta must be > -1, got alpha={alpha}, beta={beta}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def shifted(self, k: int) -> "JacobiParams":
        """Parameters raised by k, as appear in k-th derivative identities."""
        return JacobiParams(self.alpha + k, self.beta + k)


class NodeSet(NamedTuple):
    """Gauss-Jacobi nodes (strictly increasing) with positive weights."""

    nodes: np.ndarray
    weights: np.ndarray


def _recurrence_pair(alpha: float, beta: float, n: int, t):
    """Return (J_{n-1}, J_n) at t by the three-term recurrence."""
    prev = np.ones_like(t)
    if n == 0:
        return np.zeros_like(t), prev
    cur = 0.5 * ((alpha + beta + 2.0) * t + (alpha - beta))
    apb = alpha + beta
    for k in range(2, n + 1):
        c = 2.0 * k + apb
        a1 = 2.0 * k * (k + apb) * (c - 2.0)
        a2 = (c - 1.0) * (alpha * alpha - beta * beta)
        a3 = (c - 2.0) * (c - 1.0) * c
        a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c
        cur, prev = ((a2 + a3 * t) * cur - a4 * prev) / a1, cur
    return prev, cur


def eval_jacobi(params: JacobiParams, n: int, t):
    """Evaluate J_n^{alpha,beta} at t (scalar or array)."""
    n = check_degree(n)
    arr, scalar = as_float_array(t, "t")
    _, value = _recurrence_pair(params.alpha, params.beta, n, arr)
    return restore_scalar(value, scalar)


def jacobi_table(params: JacobiParams, n: int, t) -> np.ndarray:
    """All degrees 0..n at t; shape (n+1,) + t.shape."""
    n = check_degree(n)
    arr, _ = as_float_array(t, "t")
    out = np.empty((n + 1,) + arr.shape)
    out[0] = 1.0
    if n == 0:
        return out
    alpha, beta = params.alpha, params.beta
    apb = alpha + beta
    out[1] = 0.5 * ((apb + 2.0) * arr + (alpha - beta))
    for k in range(2, n + 1):
        c = 2.0 * k + apb
        a1 = 2.0 * k * (k + apb) * (c - 2.0)
        a2 = (c - 1.0) * (alpha * alpha - beta * beta)
        a3 = (c - 2.0) * (c - 1.0) * c
        a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c
        out[k] = ((a2 + a3 * arr) * out[k - 1] - a4 * out[k - 2]) / a1
    return out


def derivative_prefactor(params: JacobiParams, n: int, order: int) -> float:
    """Constant by which the order-th derivative identity rescales degree n."""
    apb = params.alpha + params.beta
    fac = 1.0
    for j in range(1, order + 1):
        fac *= 0.5 * (n + apb + j)
    return fac


def eval_jacobi_derivative(params: JacobiParams, n: int, t, order: int = 1):
    """k-th derivative of J_n^{alpha,beta} at t, k in {1, 2, 3}.

    Uses d/dt J_n^{a,b} = ((n+a+b+1)/2) J_{n-1}^{a+1,b+1} applied k times;
    identically zero when k exceeds n.
    """
    n = check_degree(n)
    order = check_order(order, allowed=(1, 2, 3))
    arr, scalar = as_float_array(t, "t")
    if order > n:
        return restore_scalar(np.zeros_like(arr), scalar)
    shifted = params.shifted(order)
    _, value = _recurrence_pair(shifted.alpha, shifted.beta, n - order, arr)
    return restore_scalar(derivative_prefactor(params, n, order) * value, scalar)


def _value_and_slope(alpha: float, beta: float, n: int, t: float):
    """(J_n, J_n') at an interior scalar point, from one recurrence pass."""
    prev, cur = _recurrence_pair(alpha, beta, n, t)
    if n == 0:
        return cur, 0.0
    c = 2.0 * n + alpha + beta
    slope = (n * (alpha - beta - c * t) * cur + 2.0 * (n + alpha) * (n + beta) * prev) / (
        c * (1.0 - t * t)
    )
    return cur, slope


def _bracket_roots(params: JacobiParams, n: int):
    """Sign-change brackets for all n roots, scanned on Chebyshev-angle grids."""
    m = max(8 * n, 32)
    for _ in range(6):
        theta = np.pi * (np.arange(m) + 0.5) / m
        grid = -np.cos(theta)
        _, values = _recurrence_pair(params.alpha, params.beta, n, grid)
        if np.any(values == 0.0):
            m += 1  # a grid point landed on a root; shift the grid
            continue
        flips = np.nonzero(np.sign(values[:-1]) != np.sign(values[1:]))[0]
        if len(flips) == n:
            return [(grid[i], grid[i + 1], values[i] > 0.0) for i in flips]
        m *= 2
    raise RootFindingError(f"could not isolate {n} roots of degree-{n} polynomial")


def _polish_root(params: JacobiParams, n: int, lo: float, hi: float, lo_positive: bool) -> float:
    """Safeguarded Newton inside a sign-change bracket."""
    a, b = lo, hi
    t = 0.5 * (a + b)
    for _ in range(_NEWTON_CAP):
        value, slope = _value_and_slope(params.alpha, params.beta, n, t)
        if value == 0.0:
            return t
        if (value > 0.0) == lo_positive:
            a = t
        else:
            b = t
        t_new = t - value / slope if slope != 0.0 else 0.5 * (a + b)
        if not (a < t_new < b):
            t_new = 0.5 * (a + b)
        if abs(t_new - t) <= _NEWTON_TOL * (1.0 + abs(t_new)):
            return t_new
        t = t_new
    raise RootFindingError(f"Newton iteration for a degree-{n} root stalled near t={t:.15g}")


def _weight_constant(alpha: float, beta: float, n: int) -> float:
    """2^(a+b+1) G(n+a+1) G(n+b+1) / (G(n+1) G(n+a+b+1)), via lgamma."""
    return math.exp(
        (alpha + beta + 1.0) * math.log(2.0)
        + math.lgamma(n + alpha + 1.0)
        + math.lgamma(n + beta + 1.0)
        - math.lgamma(n + 1.0)
        - math.lgamma(n + alpha + beta + 1.0)
    )


def jacobi_roots(params: JacobiParams, n: int) -> NodeSet:
    """All n roots of J_n^{alpha,beta}, increasing, with Gauss-Jacobi weights."""
    n = check_degree(n, minimum=1)
    roots = np.empty(n)
    weights = np.empty(n)
    constant = _weight_constant(params.alpha, params.beta, n)
    for i, (lo, hi, lo_positive) in enumerate(_bracket_roots(params, n)):
        try:
            root = _polish_root(params, n, lo, hi, lo_positive)
        except RootFindingError as exc:
            raise RootFindingError(f"root {i} of {n}: {exc}") from exc
        _, slope = _value_and_slope(params.alpha, params.beta, n, root)
        roots[i] = root
        weights[i] = constant / ((1.0 - root * root) * slope * slope)
    return NodeSet(roots, weights)
