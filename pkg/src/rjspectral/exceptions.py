"""Exception types raised by the numerical machinery."""


class NumericalError(RuntimeError):
    """Base class for numerical failures (as opposed to bad arguments)."""


class RootFindingError(NumericalError):
    """Polynomial root isolation or refinement did not converge."""


class SingularModelError(NumericalError):
    """The third-derivative coefficient of the model degenerated to zero."""


class SingularSystemError(NumericalError):
    """The collocation matrix is singular to working precision."""


class AssemblyError(NumericalError):
    """A non-finite entry appeared while assembling a linear system."""


class BracketingError(ValueError):
    """A shooting bracket does not enclose a sign change."""


class ConvergenceError(NumericalError):
    """An iteration hit its cap without meeting its tolerance."""
