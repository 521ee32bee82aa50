"""Periodic harmonic chain: thermal Gaussian states, mode spectrum and
curvature-versus-temperature scans.

All quantities use the dimensionless frequency omega~ = m omega^2 / kappa
and temperature T~ = kT / sqrt(kappa / m).  The normal modes of the
N-site periodic chain are Omega_j = sqrt(omega~ + 4 sin^2(pi j / N)),
j = 1..N, and the thermal symplectic eigenvalues are
nu_j = (1/2) coth(Omega_j / (2 T~)).
"""

from dataclasses import dataclass

import numpy as np

from .closed import curvature_ratio, scalar_curvature
from .errors import BoundaryDegeneracyError, InvalidInputError
from .gaussian import entropy_from_spectrum

# Scans refuse temperatures whose smallest nu is this close to 1/2.
TEMPERATURE_FLOOR_NU = 0.5 + 1e-9


@dataclass(frozen=True)
class ChainParams:
    modes: int
    omega_tilde: float
    t_tilde: float

    def __post_init__(self):
        if self.modes < 1:
            raise InvalidInputError(f"mode count must be >= 1, got {self.modes}")
        if self.omega_tilde <= 0.0:
            raise InvalidInputError("omega_tilde must be positive")
        if self.t_tilde <= 0.0:
            raise InvalidInputError("t_tilde must be positive")


def chain_modes(params):
    """Normal-mode frequencies Omega_j = sqrt(omega~ + 4 sin^2(pi j / N))."""
    j = np.arange(1, params.modes + 1)
    return np.sqrt(params.omega_tilde
                   + 4.0 * np.sin(np.pi * j / params.modes) ** 2)


def chain_symplectic_eigenvalues(params):
    """Thermal symplectic spectrum nu_j = (1/2) coth(Omega_j / (2 T~))."""
    return 0.5 / np.tanh(chain_modes(params) / (2.0 * params.t_tilde))


def chain_hamiltonian(params, coefficient="mode-consistent"):
    """Quadratic Hamiltonian matrix of the thermal chain state, block form.

    H = (1/T~) [ (c I_N - M) oplus I_N ] with M the cyclic coupling
    matrix (wrap-around and nearest-neighbour couplings add, so at
    N <= 2 entries double).  The diagonal coefficient c is omega~ + 2,
    which reproduces the printed mode frequencies through the circulant
    spectrum c - 2 cos(2 pi j / N); coefficient="as-printed" keeps the
    alternative omega~^2 + 2 reading for comparison.
    """
    n = params.modes
    if coefficient == "mode-consistent":
        c = params.omega_tilde + 2.0
    elif coefficient == "as-printed":
        c = params.omega_tilde ** 2 + 2.0
    else:
        raise InvalidInputError(
            f"unknown coefficient convention {coefficient!r}")
    shift = np.roll(np.eye(n), 1, axis=1)
    M = shift + shift.T
    H = np.zeros((2 * n, 2 * n))
    H[:n, :n] = c * np.eye(n) - M
    H[n:, n:] = np.eye(n)
    return H / params.t_tilde


def chain_curvature_scan(params_grid, coefficient="mode-consistent"):
    """Rows (N, omega~, T~, Scal, R, S_vN[nats]) for a parameter grid.

    Deterministic row order following the input order.  Temperatures
    whose coldest mode sits within 1e-9 of the nu = 1/2 boundary are
    refused with BoundaryDegeneracyError naming the floor.  With the
    default coefficient the spectrum comes from the mode formula; the
    "as-printed" convention routes through the Hamiltonian matrix.
    """
    from .gaussian import covariance_from_hamiltonian, symplectic_eigenvalues

    rows = []
    for params in params_grid:
        if coefficient == "mode-consistent":
            nu = chain_symplectic_eigenvalues(params)
        else:
            nu = symplectic_eigenvalues(covariance_from_hamiltonian(
                chain_hamiltonian(params, coefficient=coefficient)))
        if nu.min() < TEMPERATURE_FLOOR_NU:
            raise BoundaryDegeneracyError(
                f"T~ = {params.t_tilde:g} is below the scan floor: "
                f"min nu = {nu.min():.12g} < {TEMPERATURE_FLOOR_NU}",
                modes=[int(np.argmin(nu))])
        rows.append((params.modes, params.omega_tilde, params.t_tilde,
                     scalar_curvature(nu), curvature_ratio(nu),
                     entropy_from_spectrum(nu)))
    return rows
