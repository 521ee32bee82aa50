"""Spectral kernel tables over the symplectic spectrum.

The tables F, G (pairwise) and A, B (triple) are divided differences of
f(x) = arccoth(2x) and g(x, y) = (f(x) + f(y))/(x + y).  They feed both
the closed-form scalar curvature and the Hadamard-kernel evaluation of
the Delta superoperator family.
"""

import importlib
from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import BoundaryDegeneracyError

TAU_DEG = 1e-7


def _impl():
    name = "._kernels_numba" if backend.use_numba() else "._kernels_numpy"
    return importlib.import_module(name, package=__package__)


def check_spectrum(nu):
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    if nu.ndim != 1 or nu.size == 0:
        raise ValueError("spectrum must be a nonempty 1-d array")
    bad = np.nonzero(nu <= 0.5)[0]
    if bad.size:
        raise BoundaryDegeneracyError(
            f"symplectic eigenvalues at or below 1/2 at positions {bad.tolist()}",
            modes=bad.tolist())
    return nu


@dataclass(frozen=True)
class SpectralKernels:
    """Kernel tables at a fixed symplectic spectrum.

    f[i,j] = (f(nu_j)-f(nu_i))/(nu_i-nu_j), g[i,j] = (f(nu_i)+f(nu_j))/(nu_i+nu_j),
    A[i,j,k] = (f[j,k]-f[i,j])/(nu_i-nu_k), B[i,j,k] = (g[j,k]-g[i,j])/(nu_i-nu_k),
    with degenerate entries replaced by their analytic limits.
    """
    nu: np.ndarray
    f: np.ndarray
    g: np.ndarray
    A: np.ndarray
    B: np.ndarray


def kernels(nu, tau=TAU_DEG):
    """Build the SpectralKernels tables for a faithful spectrum."""
    nu = check_spectrum(nu)
    F, G, A, B = _impl().kernel_tables(nu, tau)
    return SpectralKernels(nu=nu, f=F, g=G, A=A, B=B)


def phi_sums(k: SpectralKernels):
    """(sum phi1, sum phi2, sum phi3) of the closed-form curvature."""
    return _impl().phi_sums(k.nu, k.f, k.g, k.A, k.B)


def arccoth2(x):
    """f(x) = arccoth(2x), the spectral function behind every kernel."""
    return 0.5 * np.log1p(2.0 / (2.0 * np.asarray(x, dtype=float) - 1.0))
