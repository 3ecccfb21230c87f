"""Exception and warning types raised by the toolkit."""


class RangeError(ValueError):
    """A query fell outside the range where data is available."""


class DataQualityError(ValueError):
    """Sampled data violates a structural invariant (ordering, monotonicity)."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class NumericalError(RuntimeError):
    """An iterative numerical procedure failed; ``diagnostics`` says how."""

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class BoundaryWarning(UserWarning):
    """A minimizer landed on the edge of the sampled range."""
