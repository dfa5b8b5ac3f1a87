"""Input validation helpers shared across the package."""

import numbers

import numpy as np


def as_float_array(x, name: str = "x", nonnegative: bool = False):
    """Coerce ``x`` to a float64 array and report whether it was scalar.

    Returns ``(array, was_scalar)``.  Raises ``ValueError`` on non-finite
    entries and, when requested, on negative ones.
    """
    arr = np.asarray(x, dtype=float)
    was_scalar = arr.ndim == 0
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    if nonnegative and np.any(arr < 0.0):
        raise ValueError(f"{name} must be nonnegative")
    return arr, was_scalar


def restore_scalar(values: np.ndarray, was_scalar: bool):
    """Return a plain float when the corresponding input was scalar."""
    return float(values) if was_scalar else values


def check_degree(n, name: str = "n", minimum: int = 0) -> int:
    """Validate an integer degree/count argument."""
    if not isinstance(n, numbers.Integral):
        raise ValueError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")
    return n


def check_order(order, allowed=(0, 1, 2, 3)) -> int:
    """Validate a derivative order argument."""
    if not isinstance(order, numbers.Integral) or int(order) not in allowed:
        raise ValueError(f"derivative order must be one of {allowed}, got {order!r}")
    return int(order)


def check_positive(value, name: str) -> float:
    value = float(value)
    if not np.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be positive and finite, got {value}")
    return value


def as_abscissae(X, name: str = "X"):
    """Coerce estimator input to a 1-D array of nonnegative abscissae.

    Accepts scalars, 1-D arrays, or single-column 2-D arrays (the sklearn
    convention).  Returns ``(array, was_scalar)``.
    """
    arr = np.asarray(X, dtype=float)
    was_scalar = arr.ndim == 0
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim > 1:
        raise ValueError(f"{name} must be scalar, 1-D, or a single column, got shape {arr.shape}")
    arr = np.atleast_1d(arr)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    if np.any(arr < 0.0):
        raise ValueError(f"{name} must be nonnegative (the domain is [0, inf))")
    return arr, was_scalar
