"""Exception types raised across the package."""


class DegreeError(ValueError):
    """Degree is too small for the requested object, or two degrees disagree."""


class CapacityError(ValueError):
    """Request exceeds the enumeration limits."""


class ShapeError(ValueError):
    """Matrix shapes are incompatible."""


class InconsistencyError(ArithmeticError):
    """An identity that must hold exactly was found to fail."""
