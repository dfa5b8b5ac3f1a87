"""The Eyring-Powell boundary-layer similarity ODE and its linearization data.

The equation solved is

    f f'' + (1 + eps) f''' - eps * delta * f''^2 f''' - f'^2 = 0

on [0, inf) with f(0) = 0, f'(0) = 1, f'(inf) = 0.  Solving for f''' gives
f''' = h(f, f', f'') with denominator D = (1 + eps) - eps*delta*f''^2, and
the partial derivatives of h are what the quasilinearization driver needs.
With eps = delta = 0 the model reduces to the Newtonian stretching-sheet
flow, whose closed form f(x) = 1 - exp(-x) anchors several tests.
"""

from dataclasses import dataclass

import math

import numpy as np

from .exceptions import SingularModelError

__all__ = ["FluidParams", "SINGULAR_DENOMINATOR"]

SINGULAR_DENOMINATOR = 1e-10


def _check_denominator(d):
    if np.ndim(d) == 0:
        if abs(d) <= SINGULAR_DENOMINATOR:
            raise SingularModelError(
                f"third-derivative coefficient |D| = {abs(d):.3e} below {SINGULAR_DENOMINATOR:g}"
            )
    elif np.any(np.abs(d) <= SINGULAR_DENOMINATOR):
        worst = float(np.min(np.abs(d)))
        raise SingularModelError(
            f"third-derivative coefficient |D| = {worst:.3e} below {SINGULAR_DENOMINATOR:g}"
        )
    return d


@dataclass(frozen=True)
class FluidParams:
    """Dimensionless fluid parameters (epsilon, delta), both nonnegative."""

    epsilon: float = 0.3
    delta: float = 0.1

    def __post_init__(self):
        eps, dlt = float(self.epsilon), float(self.delta)
        if not (math.isfinite(eps) and math.isfinite(dlt)):
            raise ValueError("epsilon and delta must be finite")
        if eps < 0.0 or dlt < 0.0:
            raise ValueError(f"epsilon and delta must be >= 0, got {eps}, {dlt}")
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "delta", dlt)

    def ode_residual(self, f, fp, fpp, fppp):
        """f f'' + (1+eps) f''' - eps*delta*f''^2 f''' - f'^2."""
        return f * fpp + (1.0 + self.epsilon) * fppp - self.epsilon * self.delta * fpp * fpp * fppp - fp * fp

    def explicit_fppp(self, f, fp, fpp):
        """f''' solved from the ODE: (f'^2 - f f'') / ((1+eps) - eps*delta*f''^2)."""
        d = _check_denominator((1.0 + self.epsilon) - self.epsilon * self.delta * fpp * fpp)
        return (fp * fp - f * fpp) / d

    def qlm_partials(self, f, fp, fpp):
        """h = f''' and its partials (h, dh/df, dh/df', dh/df'') at a state."""
        ed = self.epsilon * self.delta
        d = _check_denominator((1.0 + self.epsilon) - ed * fpp * fpp)
        numer = fp * fp - f * fpp
        h = numer / d
        h_f = -fpp / d
        h_fp = 2.0 * fp / d
        h_fpp = (-f * d + 2.0 * ed * fpp * numer) / (d * d)
        return h, h_f, h_fp, h_fpp
