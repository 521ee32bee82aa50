"""Exception types shared across the package."""


class GaussGeomError(Exception):
    """Base class for all errors raised by gaussgeom."""


class InvalidDimensionError(GaussGeomError):
    """Matrix is not square, has odd dimension, or N < 1."""


class InvalidInputError(GaussGeomError):
    """Input violates a precondition (asymmetry, mode mismatch, bad range...)."""


class BoundaryDegeneracyError(GaussGeomError):
    """A symplectic eigenvalue is at (or too close to) the pure-state
    boundary nu = 1/2, where the geometry diverges."""

    def __init__(self, message, modes=None):
        super().__init__(message)
        self.modes = tuple(modes) if modes is not None else ()


class DimensionLimitError(GaussGeomError):
    """Requested operation is only supported up to a fixed mode count."""


class NoConvergenceError(GaussGeomError):
    """Iterative solver failed to reach its tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BoundaryExitError(GaussGeomError):
    """A geodesic left the faithful region during integration."""

    def __init__(self, message, exit_time=None):
        super().__init__(message)
        self.exit_time = exit_time
