"""Rational Jacobi spectral collocation for boundary-value ODEs on [0, inf)."""

from .collocation import CollocationSystem, assemble, solve_step
from .exceptions import (
    AssemblyError,
    BracketingError,
    ConvergenceError,
    NumericalError,
    RootFindingError,
    SingularModelError,
    SingularSystemError,
)
from .eyring_powell import FluidParams
from .jacobi import JacobiParams, NodeSet, eval_jacobi, eval_jacobi_derivative, jacobi_roots
from .qlm import ConstantIterate, IterationReport, LinearizedODE, linearize, qlm_iterate
from .rational import (
    CollocationGrid,
    RationalMap,
    collocation_grid,
    eval_rj,
    forward_map,
    inverse_map,
    mapped_weight,
)
from .shooting import ShootingConfig, integrate_ivp, shoot
from .solver import RationalJacobiSolver
from .trial import TrialBasis, TrialFunction, basis_function, boundary_term, eval_trial

__version__ = "0.1.0"

__all__ = [
    "AssemblyError",
    "BracketingError",
    "CollocationGrid",
    "CollocationSystem",
    "ConstantIterate",
    "ConvergenceError",
    "FluidParams",
    "IterationReport",
    "JacobiParams",
    "LinearizedODE",
    "NodeSet",
    "NumericalError",
    "RationalJacobiSolver",
    "RationalMap",
    "RootFindingError",
    "ShootingConfig",
    "SingularModelError",
    "SingularSystemError",
    "TrialBasis",
    "TrialFunction",
    "assemble",
    "basis_function",
    "boundary_term",
    "collocation_grid",
    "eval_jacobi",
    "eval_jacobi_derivative",
    "eval_rj",
    "eval_trial",
    "forward_map",
    "integrate_ivp",
    "inverse_map",
    "jacobi_roots",
    "linearize",
    "mapped_weight",
    "qlm_iterate",
    "shoot",
    "solve_step",
    "__version__",
]
