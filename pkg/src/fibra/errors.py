"""Exception hierarchy shared by every fibra module."""


class FibraError(Exception):
    """Base class; the CLI maps subclasses to exit codes via ``kind``."""

    kind = "error"


class DomainError(FibraError, ValueError):
    """An argument lies outside the range where an operation is defined."""

    kind = "domain"


class ShapeError(DomainError):
    kind = "shape"


class BoundsError(DomainError, IndexError):
    kind = "bounds"


class InvalidRepresentationError(DomainError):
    kind = "invalid-representation"


class InsufficientPrefixError(DomainError):
    kind = "insufficient-prefix"


class InconsistentImageError(DomainError):
    """A grid violates the morphism's row-height/column-width condition."""

    kind = "inconsistent-image"


class UndefinedTransitionError(FibraError):
    kind = "undefined-transition"


class StructuralViolation(FibraError, AssertionError):
    kind = "structural-violation"


class ResourceError(FibraError, MemoryError):
    """Raised before building anything larger than the cell budget."""

    kind = "resource"
