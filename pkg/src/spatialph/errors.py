"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all spatialph errors."""


class MissingFaceError(Error):
    """A simplex was added before one of its faces."""


class MonotonicityError(Error):
    """A simplex carries a smaller filtration value than one of its faces."""


class DuplicateSimplexError(Error):
    """The simplex is already present in the complex."""


class InvalidComplexError(Error):
    """The complex violates the closure or monotonicity axioms."""


class MissingValueError(Error):
    """A node lacks the scalar value required by the filtration."""


class IsolatedNodeError(Error):
    """A node has no incident edge, so its edge-derived value is undefined."""


class EmptyForegroundError(Error):
    """The binary image has no foreground pixels."""


class CapTooSmallError(Error):
    """The replacement value for infinite deaths is below an existing feature."""


class InvalidKError(Error):
    """Requested cluster count is outside 1..n_leaves."""
