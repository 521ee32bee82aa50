"""Covariance matrices of N-mode Gaussian states.

Conventions: quadrature ordering is the block convention (q_1..q_N,
p_1..p_N), hbar = 1, so the symplectic form is Omega = [[0, I], [-I, 0]]
and the vacuum covariance matrix is I/2.  A state is faithful iff every
symplectic eigenvalue exceeds 1/2.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    BoundaryDegeneracyError,
    InvalidDimensionError,
    InvalidInputError,
)

# Tolerances (see README): symmetry is relative to the largest entry,
# the rest are absolute / relative as noted.
TAU_SYM = 1e-10
TAU_SYMP = 1e-9
TAU_REC = 1e-9
TAU_FAITH = 1e-9


def mode_count(V):
    """Number of modes N of a 2N x 2N matrix, with dimension checks."""
    V = np.asarray(V)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise InvalidDimensionError(f"expected a square matrix, got shape {V.shape}")
    if V.shape[0] % 2 != 0 or V.shape[0] == 0:
        raise InvalidDimensionError(
            f"matrix dimension must be a positive even number, got {V.shape[0]}")
    return V.shape[0] // 2


def symplectic_form(n_modes):
    """Symplectic form Omega = [[0, I_N], [-I_N, 0]] in block ordering."""
    if n_modes < 1:
        raise InvalidDimensionError(f"mode count must be >= 1, got {n_modes}")
    eye = np.eye(n_modes)
    zero = np.zeros((n_modes, n_modes))
    return np.block([[zero, eye], [-eye, zero]])


def check_symmetric(V, name="matrix"):
    V = np.asarray(V, dtype=float)
    scale = max(np.abs(V).max(), 1.0)
    if np.abs(V - V.T).max() > TAU_SYM * scale:
        raise InvalidInputError(f"{name} is not symmetric within tolerance")
    return 0.5 * (V + V.T)


def interleaved_to_block_permutation(n_modes):
    """Permutation matrix P with V_block = P @ V_interleaved @ P.T.

    Interleaved ordering is (q_1, p_1, q_2, p_2, ...).
    """
    P = np.zeros((2 * n_modes, 2 * n_modes))
    for j in range(n_modes):
        P[j, 2 * j] = 1.0
        P[n_modes + j, 2 * j + 1] = 1.0
    return P


@dataclass(frozen=True)
class ValidityReport:
    modes: int
    symmetric: bool
    min_symplectic_eigenvalue: float
    valid: bool
    faithful: bool

    def to_dict(self):
        return {
            "modes": self.modes,
            "symmetric": self.symmetric,
            "min_symplectic_eigenvalue": self.min_symplectic_eigenvalue,
            "valid": self.valid,
            "faithful": self.faithful,
        }


@dataclass(frozen=True)
class WilliamsonDecomposition:
    """V = S (D + D) S^T with S symplectic and D = diag(nu), nu ascending."""
    S: np.ndarray
    nu: np.ndarray

    @property
    def modes(self):
        return self.nu.shape[0]


def _sym_sqrt(V):
    w, U = np.linalg.eigh(V)
    if w[0] <= 0.0:
        raise InvalidInputError("matrix is not positive definite")
    return (U * np.sqrt(w)) @ U.T


def _symplectic_factor(M):
    """Williamson factorization of a symmetric positive-definite matrix.

    Returns (S, nu) with M = S (diag(nu) + diag(nu)) S^T, S symplectic,
    nu sorted ascending.  Works for any SPD input (no nu >= 1/2 check).
    """
    n = mode_count(M)
    omega = symplectic_form(n)
    root = _sym_sqrt(M)
    K = root @ omega @ root
    K = 0.5 * (K - K.T)
    T, Q = scipy.linalg.schur(K, output="real")
    # The Schur form of a real antisymmetric matrix is block diagonal with
    # 2x2 blocks [[0, b], [-b, 0]]; orient each block so b > 0.
    nu = np.empty(n)
    cols_q = np.empty((2 * n, n))
    cols_p = np.empty((2 * n, n))
    for k in range(n):
        b = 0.5 * (T[2 * k, 2 * k + 1] - T[2 * k + 1, 2 * k])
        u, w = Q[:, 2 * k], Q[:, 2 * k + 1]
        if b < 0.0:
            b = -b
            u, w = w, u
        nu[k] = b
        cols_q[:, k] = u
        cols_p[:, k] = w
    order = np.argsort(nu, kind="stable")
    nu = nu[order]
    Qb = np.concatenate([cols_q[:, order], cols_p[:, order]], axis=1)
    scale = 1.0 / np.sqrt(np.concatenate([nu, nu]))
    S = root @ Qb * scale
    return S, nu


def symplectic_eigenvalues(V):
    """Symplectic spectrum of a valid covariance matrix, sorted ascending.

    Equal to the moduli of the eigenvalues of i*Omega*V, paired off.
    """
    V = check_symmetric(V, "covariance matrix")
    n = mode_count(V)
    omega = symplectic_form(n)
    try:
        root = _sym_sqrt(V)
    except InvalidInputError:
        raise InvalidInputError("covariance matrix is not positive definite")
    K = root @ omega @ root
    herm = 1j * (0.5 * (K - K.T))
    vals = np.linalg.eigvalsh(herm)
    return vals[n:]  # positive half of the +/- nu pairs, ascending


def validate(V):
    """Check symmetry, the uncertainty relation and faithfulness of V."""
    V = np.asarray(V, dtype=float)
    n = mode_count(V)
    scale = max(np.abs(V).max(), 1.0)
    symmetric = np.abs(V - V.T).max() <= TAU_SYM * scale
    if not symmetric:
        raise InvalidInputError("covariance matrix is not symmetric within tolerance")
    Vs = 0.5 * (V + V.T)
    w = np.linalg.eigvalsh(Vs)
    if w[0] <= 0.0:
        # Not positive definite, so the uncertainty relation fails; report
        # the spectrum of i*Omega*V directly.
        omega = symplectic_form(n)
        nus = np.sort(np.abs(np.linalg.eigvals(1j * omega @ Vs)))[::2]
        min_nu = float(nus.min()) if nus.size else 0.0
        return ValidityReport(n, True, min_nu, False, False)
    nu = symplectic_eigenvalues(Vs)
    min_nu = float(nu[0])
    valid = min_nu >= 0.5 - TAU_FAITH
    faithful = valid and min_nu > 0.5 + TAU_FAITH
    return ValidityReport(n, True, min_nu, valid, faithful)


def require_faithful(V, context="operation"):
    """Validate V and raise BoundaryDegeneracyError if it is not faithful."""
    report = validate(V)
    if not report.valid:
        raise InvalidInputError(
            f"{context}: covariance matrix violates the uncertainty relation "
            f"(min nu = {report.min_symplectic_eigenvalue:.6g})")
    if not report.faithful:
        nu = symplectic_eigenvalues(V)
        bad = [int(j) for j in np.nonzero(nu <= 0.5 + TAU_FAITH)[0]]
        raise BoundaryDegeneracyError(
            f"{context}: state is not faithful, modes {bad} have nu within "
            f"{TAU_FAITH:g} of 1/2", modes=bad)
    return report


def williamson(V):
    """Williamson decomposition of a faithful covariance matrix."""
    require_faithful(V, "williamson")
    V = check_symmetric(V, "covariance matrix")
    S, nu = _symplectic_factor(V)
    return WilliamsonDecomposition(S=S, nu=nu)


def arccoth(x):
    """arccoth(x) = (1/2) ln((x+1)/(x-1)) for x > 1, elementwise."""
    x = np.asarray(x, dtype=float)
    return 0.5 * np.log1p(2.0 / (x - 1.0))


def hamiltonian_matrix(V):
    """Hamiltonian matrix H_V with V = (1/2) coth(i Omega H_V / 2) i Omega.

    Computed through the Williamson frame: H_V = (S^T)^{-1} (2f(D) + 2f(D))
    S^{-1} with f(x) = arccoth(2x).
    """
    dec = williamson(V)
    d = 2.0 * arccoth(2.0 * dec.nu)
    S_inv = np.linalg.inv(dec.S)
    H = S_inv.T @ (np.concatenate([d, d])[:, None] * S_inv)
    return 0.5 * (H + H.T)


def covariance_from_hamiltonian(H):
    """Invert hamiltonian_matrix: thermal-like covariance of a quadratic H."""
    H = check_symmetric(np.asarray(H, dtype=float), "Hamiltonian matrix")
    mode_count(H)
    if np.linalg.eigvalsh(H)[0] <= 0.0:
        raise InvalidInputError("Hamiltonian matrix must be positive definite")
    S_h, d = _symplectic_factor(H)
    # H = S_h (d + d) S_h^T  <=>  V = (S_h^T)^{-1} (nu + nu) S_h^{-1},
    # nu = (1/2) coth(d / 2).
    nu = 0.5 / np.tanh(0.5 * d)
    Sh_inv = np.linalg.inv(S_h)
    V = Sh_inv.T @ (np.concatenate([nu, nu])[:, None] * Sh_inv)
    return 0.5 * (V + V.T)


def _entropy_terms(nu):
    nu = np.asarray(nu, dtype=float)
    up = nu + 0.5
    dn = nu - 0.5
    terms = up * np.log(up)
    # (nu - 1/2) log(nu - 1/2) -> 0 at the pure-state boundary
    mask = dn > 0.0
    terms[mask] -= dn[mask] * np.log(dn[mask])
    return terms


def entropy_from_spectrum(nu, base="nats"):
    """Von Neumann entropy of a Gaussian state from its symplectic spectrum."""
    s = float(np.sum(_entropy_terms(nu)))
    if base == "nats":
        return s
    if base == "bits":
        return s / np.log(2.0)
    raise InvalidInputError(f"unknown entropy base {base!r}")


def von_neumann_entropy(V, base="nats"):
    """Von Neumann entropy of the Gaussian state with covariance V."""
    report = validate(V)
    if not report.valid:
        raise InvalidInputError("covariance matrix violates the uncertainty relation")
    nu = np.clip(symplectic_eigenvalues(V), 0.5, None)
    return entropy_from_spectrum(nu, base=base)


def log_det_normalization(V):
    """(1/2) ln det(V + i Omega / 2), the faithful-state log-normalization."""
    n = mode_count(V)
    omega = symplectic_form(n)
    M = V + 0.5j * omega
    sign, logdet = np.linalg.slogdet(M)
    return 0.5 * logdet.real


def relative_entropy(V, V2):
    """Quantum relative entropy S(rho(V) || rho(V2)) between Gaussian states."""
    V = check_symmetric(V, "first covariance matrix")
    V2 = check_symmetric(V2, "second covariance matrix")
    if V.shape != V2.shape:
        raise InvalidInputError(
            f"mode mismatch: {V.shape[0] // 2} vs {V2.shape[0] // 2}")
    require_faithful(V, "relative_entropy")
    require_faithful(V2, "relative_entropy")
    H1 = hamiltonian_matrix(V)
    H2 = hamiltonian_matrix(V2)
    return (log_det_normalization(V2) - log_det_normalization(V)
            + 0.5 * np.trace((H2 - H1) @ V))


def random_symplectic(n_modes, rng, scale=0.3):
    """Random symplectic matrix exp(Omega A) with A random symmetric."""
    A = rng.normal(size=(2 * n_modes, 2 * n_modes), scale=scale)
    A = 0.5 * (A + A.T)
    return scipy.linalg.expm(symplectic_form(n_modes) @ A)


def random_covariance(n_modes, seed, nu_range=(0.55, 20.0)):
    """Seeded random faithful covariance matrix V = S (D + D) S^T."""
    lo, hi = nu_range
    if not (0.5 < lo <= hi):
        raise InvalidInputError(f"nu_range must lie in (1/2, inf), got {nu_range}")
    rng = np.random.default_rng(seed)
    nu = np.sort(rng.uniform(lo, hi, size=n_modes))
    S = random_symplectic(n_modes, rng)
    V = S @ (np.concatenate([nu, nu])[:, None] * S.T)
    return 0.5 * (V + V.T)
