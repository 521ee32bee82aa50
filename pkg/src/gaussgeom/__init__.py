"""Information geometry of faithful N-mode Gaussian quantum states under
the Kubo-Mori-Bogoliubov metric: validation and Williamson machinery,
the Delta superoperator family, closed-form and direct scalar curvature,
geodesics, and the periodic harmonic chain model."""

from .backend import backend_name
from .chain import (
    ChainParams,
    chain_curvature_scan,
    chain_hamiltonian,
    chain_modes,
    chain_symplectic_eigenvalues,
)
from .closed import (
    ball_volume_expansion,
    classical_curvature,
    curvature_ratio,
    high_temperature_ratio,
    scalar_curvature,
    scalar_curvature_single_mode,
)
from .delta import (
    DeltaKernel,
    christoffel,
    ddelta,
    delta,
    delta_inverse,
    delta_quadrature,
    metric,
)
from .direct import (
    N_MAX_DIRECT,
    orthonormal_basis,
    ricci,
    riemann,
    scalar_curvature_direct,
    sectional_like_term,
)
from .errors import (
    BoundaryDegeneracyError,
    BoundaryExitError,
    DimensionLimitError,
    GaussGeomError,
    InvalidDimensionError,
    InvalidInputError,
    NoConvergenceError,
)
from .gaussian import (
    ValidityReport,
    WilliamsonDecomposition,
    covariance_from_hamiltonian,
    entropy_from_spectrum,
    hamiltonian_matrix,
    interleaved_to_block_permutation,
    random_covariance,
    random_symplectic,
    relative_entropy,
    symplectic_eigenvalues,
    symplectic_form,
    validate,
    von_neumann_entropy,
    williamson,
)
from .geodesics import (
    DistanceResult,
    GeodesicPath,
    geodesic_distance_estimate,
    geodesic_shoot,
    path_length,
)
from .kernels import SpectralKernels, kernels

__version__ = "1.0.0"

__all__ = [
    "BoundaryDegeneracyError",
    "BoundaryExitError",
    "ChainParams",
    "DeltaKernel",
    "DimensionLimitError",
    "DistanceResult",
    "GaussGeomError",
    "GeodesicPath",
    "InvalidDimensionError",
    "InvalidInputError",
    "N_MAX_DIRECT",
    "NoConvergenceError",
    "SpectralKernels",
    "ValidityReport",
    "WilliamsonDecomposition",
    "backend_name",
    "ball_volume_expansion",
    "chain_curvature_scan",
    "chain_hamiltonian",
    "chain_modes",
    "chain_symplectic_eigenvalues",
    "christoffel",
    "classical_curvature",
    "covariance_from_hamiltonian",
    "curvature_ratio",
    "ddelta",
    "delta",
    "delta_inverse",
    "delta_quadrature",
    "entropy_from_spectrum",
    "geodesic_distance_estimate",
    "geodesic_shoot",
    "hamiltonian_matrix",
    "high_temperature_ratio",
    "interleaved_to_block_permutation",
    "kernels",
    "metric",
    "orthonormal_basis",
    "path_length",
    "random_covariance",
    "random_symplectic",
    "relative_entropy",
    "ricci",
    "riemann",
    "scalar_curvature",
    "scalar_curvature_direct",
    "scalar_curvature_single_mode",
    "sectional_like_term",
    "symplectic_eigenvalues",
    "symplectic_form",
    "validate",
    "von_neumann_entropy",
    "williamson",
]
