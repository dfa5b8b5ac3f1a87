"""Assembly and solution of the per-step collocation system.

Enforcing the linearized ODE at the N+1 grid points turns one
quasilinearization step into a dense (N+1) x (N+1) solve for the trial
coefficients.  Rows are equilibrated before the LU factorization because the
third-derivative columns dominate the raw magnitudes.
"""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve
from scipy.linalg.lapack import dgecon

from .exceptions import AssemblyError, SingularSystemError
from .qlm import LinearizedODE
from .rational import CollocationGrid
from .trial import TrialBasis

__all__ = ["CollocationSystem", "assemble", "solve_step"]

_PIVOT_FLOOR = 1e-14
_CONDITION_LIMIT = 1e12


@dataclass(eq=False)
class CollocationSystem:
    """Dense linear system matrix @ a = rhs collocated on grid."""

    matrix: np.ndarray
    rhs: np.ndarray
    grid: CollocationGrid


def assemble(lin: LinearizedODE, grid: CollocationGrid, basis: TrialBasis) -> CollocationSystem:
    """Collocate the linearized ODE on the grid in the decomposed trial family.

    Row k states that the linear ODE holds at x_k for the next iterate
    f = boundary + sum_j a_j phi_j; everything independent of the unknown
    coefficients moves to the right-hand side.
    """
    if len(grid) != basis.size:
        raise ValueError(f"grid has {len(grid)} points but the basis needs {basis.size}")
    x = grid.points
    g1, g2, g3, g4 = (np.broadcast_to(np.asarray(g, dtype=float), x.shape) for g in lin.coefficients_at(x))
    p0, p1, p2, p3 = basis.matrices(x)
    b0, b1, b2, b3 = (basis.boundary(x, k) for k in range(4))

    matrix = g2[:, None] * p0 + g3[:, None] * p1 + g4[:, None] * p2 - p3
    rhs = -(g1 + g2 * b0 + g3 * b1 + g4 * b2 - b3)

    if not np.all(np.isfinite(matrix)):
        k, j = np.argwhere(~np.isfinite(matrix))[0]
        raise AssemblyError(f"non-finite matrix entry at row {k}, column {j} (x = {x[k]:.6g})")
    if not np.all(np.isfinite(rhs)):
        k = int(np.nonzero(~np.isfinite(rhs))[0][0])
        raise AssemblyError(f"non-finite right-hand side at row {k} (x = {x[k]:.6g})")
    return CollocationSystem(matrix, rhs, grid)


def solve_step(system: CollocationSystem) -> np.ndarray:
    """Solve one collocation system by equilibrated LU with partial pivoting.

    Emits a LinAlgWarning when the 1-norm condition estimate exceeds 1e12;
    raises SingularSystemError when a pivot falls below 1e-14 of its row
    scale.
    """
    matrix = np.asarray(system.matrix, dtype=float)
    rhs = np.asarray(system.rhs, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or rhs.shape != matrix.shape[:1]:
        raise ValueError(f"need a square system, got matrix {matrix.shape} and rhs {rhs.shape}")

    scale = np.max(np.abs(matrix), axis=1)
    zero_rows = np.nonzero(scale == 0.0)[0]
    if zero_rows.size:
        raise SingularSystemError(f"row {zero_rows[0]} is identically zero")
    scaled_matrix = matrix / scale[:, None]
    scaled_rhs = rhs / scale

    lu, piv = lu_factor(scaled_matrix)
    smallest_pivot = float(np.min(np.abs(np.diag(lu))))
    if smallest_pivot < _PIVOT_FLOOR:
        raise SingularSystemError(f"pivot {smallest_pivot:.3e} below {_PIVOT_FLOOR:g} of row scale")

    rcond, info = dgecon(lu, np.linalg.norm(scaled_matrix, 1), norm="1")
    if info == 0 and rcond > 0.0 and 1.0 / rcond > _CONDITION_LIMIT:
        warnings.warn(
            f"collocation matrix condition estimate {1.0 / rcond:.3e} exceeds {_CONDITION_LIMIT:g}",
            LinAlgWarning,
            stacklevel=2,
        )
    return lu_solve((lu, piv), scaled_rhs)
