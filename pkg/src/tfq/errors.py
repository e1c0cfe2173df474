"""Exception types shared across the toolkit."""


class TfqError(Exception):
    """Base class for all toolkit errors."""


class SizeError(TfqError):
    """Signal length is not an admissible power of two."""


class GridError(TfqError):
    """Grids of the operands are incompatible for the requested operation."""


class DomainError(TfqError):
    """An argument lies outside the operation's domain."""


class SingularPointError(DomainError):
    """Evaluation requested at a singular point of the kernel."""


class AliasingError(TfqError):
    """Signal support touches the outer half of the window."""


class WindowError(TfqError):
    """Analysis window is degenerate (zero energy)."""


class AccuracyError(TfqError):
    """Requested accuracy could not be reached within the node budget.

    Carries the achieved error bound in ``achieved``.
    """

    def __init__(self, message: str, achieved: float):
        super().__init__(message)
        self.achieved = achieved


class ResolutionError(TfqError):
    """A dilation sweep point cannot be resolved on an admissible grid.

    Carries the offending dilation in ``lam``.
    """

    def __init__(self, message: str, lam: float):
        super().__init__(message)
        self.lam = lam


class GenerationError(TfqError):
    """A synthesis recipe produced a signal violating its preconditions."""
