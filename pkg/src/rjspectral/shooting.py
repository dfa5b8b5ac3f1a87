"""Independent reference solver: fixed-step RK4 with shooting on f''(0).

This deliberately simple integrator exists to cross-check the spectral
solution, so it stays auditable: classical RK4 on the first-order system
(f, f', f'')' = (f', f'', f'''(f, f', f'')) with a bisection/secant hybrid
adjusting the unknown initial curvature until the far-field velocity
vanishes.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import BracketingError, ConvergenceError, SingularModelError
from .validation import check_positive

__all__ = ["ShootingConfig", "integrate_ivp", "shoot"]

# Physical profiles keep f' inside [0, 1]; crossing these rails means the
# shot diverged and tells us on which side, which matters because runaway
# trajectories can hit the model singularity and flip sign afterwards.
_VELOCITY_HIGH = 2.0
_VELOCITY_LOW = -1.0


@dataclass(frozen=True)
class ShootingConfig:
    """Truncation length, RK4 step, curvature bracket, far-field tolerance."""

    x_max: float = 20.0
    step: float = 1e-3
    bracket: tuple = (-2.0, -0.1)
    tol_far: float = 1e-8
    max_iter: int = 100

    def __post_init__(self):
        check_positive(self.x_max, "x_max")
        check_positive(self.step, "step")
        check_positive(self.tol_far, "tol_far")
        lo, hi = self.bracket
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValueError(f"bracket must be a finite (lo, hi) with lo < hi, got {self.bracket}")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


def _march(model, curvature0: float, config: ShootingConfig, record: bool, tolerant: bool):
    """RK4 march from (0, 1, curvature0).

    Returns (trajectory or None, final f', completed).  With tolerant=True a
    model singularity or runaway velocity stops the march early instead of
    raising; the f' value at the stop point then classifies the trajectory.
    """
    n_steps = max(1, int(round(config.x_max / config.step)))
    h = config.x_max / n_steps
    rhs = model.explicit_fppp

    f, fp, fpp = 0.0, 1.0, float(curvature0)
    trajectory = np.empty((n_steps + 1, 4)) if record else None
    if record:
        trajectory[0] = (0.0, f, fp, fpp)

    for i in range(n_steps):
        x = i * h
        try:
            k1p, k1pp = fp, fpp
            k1ppp = rhs(f, fp, fpp)
            k2p = fp + 0.5 * h * k1pp
            k2pp = fpp + 0.5 * h * k1ppp
            k2ppp = rhs(f + 0.5 * h * k1p, k2p, k2pp)
            k3p = fp + 0.5 * h * k2pp
            k3pp = fpp + 0.5 * h * k2ppp
            k3ppp = rhs(f + 0.5 * h * k2p, k3p, k3pp)
            k4p = fp + h * k3pp
            k4pp = fpp + h * k3ppp
            k4ppp = rhs(f + h * k3p, k4p, k4pp)
        except SingularModelError as exc:
            if tolerant:
                return trajectory, fp, False
            raise SingularModelError(f"{exc} at x = {x:.6f}") from exc
        f += h * (k1p + 2.0 * k2p + 2.0 * k3p + k4p) / 6.0
        fp += h * (k1pp + 2.0 * k2pp + 2.0 * k3pp + k4pp) / 6.0
        fpp += h * (k1ppp + 2.0 * k2ppp + 2.0 * k3ppp + k4ppp) / 6.0
        if not (math.isfinite(f) and math.isfinite(fp) and math.isfinite(fpp)) or abs(fp) > _DIVERGENCE_GUARD:
            if tolerant:
                return trajectory[: i + 1] if record else None, fp, False
            raise SingularModelError(f"trajectory diverged near x = {x + h:.6f}")
        if record:
            trajectory[i + 1] = ((i + 1) * h, f, fp, fpp)
    return trajectory, fp, True


def integrate_ivp(model, curvature0: float, config: ShootingConfig = ShootingConfig()) -> np.ndarray:
    """Integrate the initial-value problem; returns rows (x, f, f', f'')."""
    trajectory, _, _ = _march(model, curvature0, config, record=True, tolerant=False)
    return trajectory


def shoot(model, config: ShootingConfig = ShootingConfig()):
    """Find the initial curvature that kills the far-field velocity.

    Bisection/secant hybrid (Illinois safeguard) on s = f''(0) until
    |f'(x_max)| < tol_far.  Returns (s_star, trajectory of the converged s).
    """
    lo, hi = float(config.bracket[0]), float(config.bracket[1])
    _, g_lo, ok_lo = _march(model, lo, config, record=False, tolerant=True)
    _, g_hi, ok_hi = _march(model, hi, config, record=False, tolerant=True)
    if (g_lo > 0.0) == (g_hi > 0.0):
        raise BracketingError(
            f"no sign change in bracket [{lo}, {hi}]: far-field f' = {g_lo:.3e}, {g_hi:.3e}"
        )
    if ok_lo and abs(g_lo) < config.tol_far:
        return lo, integrate_ivp(model, lo, config)
    if ok_hi and abs(g_hi) < config.tol_far:
        return hi, integrate_ivp(model, hi, config)

    last_side = 0
    for _ in range(config.max_iter):
        if ok_lo and ok_hi and g_hi != g_lo:
            s = hi - g_hi * (hi - lo) / (g_hi - g_lo)
            margin = 0.01 * (hi - lo)
            if not (lo + margin < s < hi - margin):
                s = 0.5 * (lo + hi)
        else:
            s = 0.5 * (lo + hi)
        _, g, ok = _march(model, s, config, record=False, tolerant=True)
        if ok and abs(g) < config.tol_far:
            return s, integrate_ivp(model, s, config)
        if (g > 0.0) == (g_hi > 0.0):
            hi, g_hi, ok_hi = s, g, ok
            if last_side == +1 and ok_lo:
                g_lo *= 0.5  # Illinois: damp the stagnant endpoint
            last_side = +1
        else:
            lo, g_lo, ok_lo = s, g, ok
            if last_side == -1 and ok_hi:
                g_hi *= 0.5
            last_side = -1
    raise ConvergenceError(
        f"|f'({config.x_max})| still >= {config.tol_far:g} after {config.max_iter} shots"
    )
