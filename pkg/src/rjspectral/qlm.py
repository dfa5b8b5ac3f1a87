"""Quasilinearization driver: Newton-Raphson in function space.

Each step freezes the current iterate, expands the third derivative to first
order around it, and hands the resulting linear ODE to a step solver.  The
coefficient change between iterates shrinks quadratically, which the
iteration reports make observable.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import NumericalError, SingularSystemError
from .validation import as_float_array, restore_scalar

__all__ = [
    "LinearizedODE",
    "IterationReport",
    "ConstantIterate",
    "linearize",
    "default_probe_grid",
    "qlm_iterate",
]


@dataclass(frozen=True)
class LinearizedODE:
    """One linear step: f''' = known_rhs + coef_f f + coef_fp f' + coef_fpp f''.

    coefficients_at(x) evaluates all four coefficient functions in a single
    pass; the named accessors are conveniences over it.
    """

    coefficients_at: Callable

    def known_rhs(self, x):
        return self.coefficients_at(x)[0]

    def coef_f(self, x):
        return self.coefficients_at(x)[1]

    def coef_fp(self, x):
        return self.coefficients_at(x)[2]

    def coef_fpp(self, x):
        return self.coefficients_at(x)[3]


@dataclass(frozen=True)
class IterationReport:
    """Convergence diagnostics for one quasilinearization step."""

    iteration: int
    coeff_delta_norm: float
    residual_norm: float


class ConstantIterate:
    """An iterate with constant value and vanishing derivatives."""

    def __init__(self, value: float):
        self.value = float(value)

    def __call__(self, x, order: int = 0):
        arr, scalar = as_float_array(x, "x")
        out = np.full_like(arr, self.value if order == 0 else 0.0)
        return restore_scalar(out, scalar)


def linearize(model, iterate) -> LinearizedODE:
    """Expand model.qlm_partials around ``iterate`` into a linear ODE.

    The iterate must be callable as iterate(x, order) for orders 0..2.  The
    constant term collects everything known: h - f h_f - f' h_fp - f'' h_fpp
    evaluated at the iterate.
    """

    def coefficients_at(x):
        f = iterate(x, 0)
        fp = iterate(x, 1)
        fpp = iterate(x, 2)
        h, h_f, h_fp, h_fpp = model.qlm_partials(f, fp, fpp)
        return h - f * h_f - fp * h_fp - fpp * h_fpp, h_f, h_fp, h_fpp

    return LinearizedODE(coefficients_at)


def default_probe_grid(extra=None) -> np.ndarray:
    """201 uniform points on [0, 10], optionally merged with extra points."""
    probe = np.linspace(0.0, 10.0, 201)
    if extra is not None:
        probe = np.union1d(probe, np.asarray(extra, dtype=float))
    return probe


def _residual_norm(model, iterate, probe: np.ndarray) -> float:
    f = iterate(probe, 0)
    fp = iterate(probe, 1)
    fpp = iterate(probe, 2)
    fppp = iterate(probe, 3)
    return float(np.max(np.abs(model.ode_residual(f, fp, fpp, fppp))))


def qlm_iterate(
    model,
    make_iterate: Callable,
    solve_linear: Callable,
    initial_coefficients,
    *,
    max_iter: int = 15,
    tol: float | None = None,
    initial_iterate=None,
    probe_points=None,
):
    """Run the quasilinearization loop.

    make_iterate(a) must build an evaluable iterate from a coefficient
    vector; solve_linear(lin) must solve one LinearizedODE for the next
    coefficient vector.  With tol=None the loop runs exactly max_iter steps
    (how the reference tables are reported); otherwise it stops once the
    max-norm coefficient change drops below tol.

    Returns (final coefficients, list of IterationReport).
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    coefficients = np.array(initial_coefficients, dtype=float)
    probe = default_probe_grid() if probe_points is None else np.asarray(probe_points, dtype=float)
    expansion_point = initial_iterate if initial_iterate is not None else make_iterate(coefficients)

    reports = []
    for iteration in range(1, max_iter + 1):
        lin = linearize(model, expansion_point)
        try:
            new_coefficients = np.asarray(solve_linear(lin), dtype=float)
        except SingularSystemError as exc:
            raise SingularSystemError(f"iteration {iteration}: {exc}") from exc
        if new_coefficients.shape != coefficients.shape or not np.all(np.isfinite(new_coefficients)):
            raise NumericalError(
                f"iteration {iteration} produced non-finite or misshapen coefficients "
                f"(max |a| = {np.max(np.abs(new_coefficients)):.3e})"
            )
        delta = float(np.max(np.abs(new_coefficients - coefficients)))
        iterate = make_iterate(new_coefficients)
        reports.append(IterationReport(iteration, delta, _residual_norm(model, iterate, probe)))
        coefficients = new_coefficients
        expansion_point = iterate
        if tol is not None and delta < tol:
            break
    return coefficients, reports
