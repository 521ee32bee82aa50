"""Closed-form scalar curvature from the symplectic spectrum, with the
single-mode special case, classical asymptote, curvature ratio,
high-temperature expansion and geodesic-ball volume expansion."""

import math

import numpy as np

from .errors import BoundaryDegeneracyError, InvalidInputError
from .kernels import TAU_DEG, arccoth2, check_spectrum, kernels, phi_sums


def scalar_curvature(nu, tau=TAU_DEG):
    """Scalar curvature of an N-mode Gaussian state from its symplectic
    spectrum: Scal = sum phi1 + sum_{i<j} phi2 + sum_{i<j<k} phi3."""
    k = kernels(nu, tau=tau)
    s1, s2, s3 = phi_sums(k)
    return s1 + s2 + s3


def scalar_curvature_single_mode(nu):
    """Single-mode scalar curvature in explicit form."""
    nu = float(nu)
    if nu <= 0.5:
        raise BoundaryDegeneracyError(
            f"single-mode eigenvalue must exceed 1/2, got {nu}", modes=[0])
    f = arccoth2(nu)
    num = (2.0 * nu - f + 4.0 * nu * nu * f) * (f + 2.0 * nu * (-1.0 + 6.0 * nu * f))
    den = 8.0 * nu * nu * (-1.0 + 4.0 * nu * nu) * f * f
    return -num / den


def classical_curvature(d):
    """Constant scalar curvature -d(d-1)(d+2)/4 of the classical
    d-dimensional Gaussian family."""
    if d < 1:
        raise InvalidInputError(f"dimension must be >= 1, got {d}")
    return -d * (d - 1) * (d + 2) / 4.0


def curvature_ratio(nu, tau=TAU_DEG):
    """Scal divided by the magnitude N(2N-1)(N+1) of the classical value
    in dimension d = 2N; tends to -1 in the highly mixed limit."""
    nu = check_spectrum(nu)
    n = nu.size
    return scalar_curvature(nu, tau=tau) / (n * (2 * n - 1) * (n + 1))


def high_temperature_ratio(modes, t_tilde):
    """Leading-order expansion of the curvature ratio of a thermal state
    with mode frequencies Omega_j at dimensionless temperature T."""
    modes = np.atleast_1d(np.asarray(modes, dtype=float))
    if t_tilde <= 0.0 or np.any(modes <= 0.0):
        raise InvalidInputError("temperature and mode frequencies must be positive")
    n = modes.size
    s = float(np.sum(modes ** 2))
    # sum_{i<j}(O_i^2+O_j^2) = (N-1) s;  sum_{i<j<k}(...) = C(N-1,2) s
    bracket = 0.5 * s + 1.25 * (n - 1) * s + (2.0 / 3.0) * ((n - 1) * (n - 2) / 2.0) * s
    return -1.0 - bracket / (t_tilde ** 2 * n * (2 * n - 1) * (n + 1))


def ball_volume_expansion(n_modes, scal, eps):
    """Two-term small-radius volume of a geodesic ball in 2N dimensions:
    C_2N (eps^2N - Scal eps^(2N+2) / (12(N+1)))."""
    if eps <= 0.0:
        raise InvalidInputError("ball radius must be positive")
    c = math.pi ** n_modes / math.factorial(n_modes)
    return c * (eps ** (2 * n_modes)
                - scal * eps ** (2 * n_modes + 2) / (12.0 * (n_modes + 1)))
