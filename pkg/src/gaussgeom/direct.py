"""Brute-force curvature by orthonormal-basis summation.

Riemann tensor, Ricci form and scalar curvature evaluated purely by
composing the Delta-family superoperators over a fixed orthonormal
basis of the tangent space (symmetric 2N x 2N matrices).  This route is
independent of the closed-form spectral sums and serves as their
numerical oracle: the two must agree because the closed form is an
algebraic reduction of exactly this summation.
"""

import numpy as np

from .delta import DeltaKernel, _check_tangent
from .errors import DimensionLimitError, InvalidDimensionError

N_MAX_DIRECT = 6

_SQRT2 = np.sqrt(2.0)
_A1 = np.array([[1.0, 0.0], [0.0, 0.0]])
_A2 = np.array([[0.0, 0.0], [0.0, 1.0]])
_A3 = np.array([[0.0, 1.0], [1.0, 0.0]]) / _SQRT2
_A4 = np.array([[0.0, 1.0], [-1.0, 0.0]]) / _SQRT2


def orthonormal_basis(n_modes):
    """Orthonormal basis of symmetric 2N x 2N matrices, 2N^2 + N elements.

    Hilbert-Schmidt orthonormal, in a frozen deterministic order: the
    three diagonal families a_n kron e_jj (n-major), then
    a_1 kron b_jk, a_2 kron b_jk, then the two mixed symmetric families,
    each lexicographic in (j, k), j < k.
    """
    if n_modes < 1:
        raise InvalidDimensionError(f"mode count must be >= 1, got {n_modes}")
    n = n_modes
    elems = []
    eye_cols = np.eye(n)

    def e_jj(j):
        return np.outer(eye_cols[j], eye_cols[j])

    def b_jk(j, k):
        m = np.zeros((n, n))
        m[j, k] = m[k, j] = 1.0 / _SQRT2
        return m

    def bt_jk(j, k):
        m = np.zeros((n, n))
        m[j, k] = 1.0 / _SQRT2
        m[k, j] = -1.0 / _SQRT2
        return m

    for a in (_A1, _A2, _A3):
        for j in range(n):
            elems.append(np.kron(a, e_jj(j)))
    for a in (_A1, _A2):
        for j in range(n):
            for k in range(j + 1, n):
                elems.append(np.kron(a, b_jk(j, k)))
    for sign in (1.0, -1.0):
        for j in range(n):
            for k in range(j + 1, n):
                elems.append((np.kron(_A3, b_jk(j, k))
                              + sign * np.kron(_A4, bt_jk(j, k))) / _SQRT2)
    return elems


def riemann(V, A, B, C):
    """Riemann curvature tensor as a tangent-valued map.

    R_V(A, B, C) = (1/4) Dinv dDelta(B) Dinv dDelta(A) (C)
                 - (1/4) Dinv dDelta(A) Dinv dDelta(B) (C).
    Antisymmetric under A <-> B.
    """
    k = V if isinstance(V, DeltaKernel) else DeltaKernel(V)
    t1 = k.delta_inverse(k.ddelta(B, k.delta_inverse(k.ddelta(A, C))))
    t2 = k.delta_inverse(k.ddelta(A, k.delta_inverse(k.ddelta(B, C))))
    return 0.25 * (t1 - t2)


def sectional_like_term(V, A, B):
    """The pair functional K(A, B) whose basis double sum gives Scal.

    K(A, B) = <R_V(B, A, Dinv(A)), B> in the Hilbert-Schmidt inner
    product; K(A, A) = 0 by antisymmetry.
    """
    k = V if isinstance(V, DeltaKernel) else DeltaKernel(V)
    A = _check_tangent(A, k.modes)
    B = _check_tangent(B, k.modes)
    r = riemann(k, B, A, k.delta_inverse(A))
    return float(np.sum(r * B))


def _frame_reps(kernel, mats):
    """Lower-frame (L . Ldag) and raised-frame (Pdag . P) representations."""
    L = kernel._L
    P = kernel._P
    lower = [L @ m @ L.conj().T for m in mats]
    raised = [P.conj().T @ m @ P for m in mats]
    return lower, raised


def _dd(m3, x, y):
    """Frame representation of dDelta: both inputs in the lower frame."""
    return 2.0 * (np.einsum("ac,cb,acb->ab", x, y, m3)
                  + np.einsum("ac,cb,acb->ab", y, x, m3))


def scalar_curvature_direct(V):
    """Scalar curvature by the double basis sum Scal = sum_{s != t} K.

    Everything is evaluated in the Williamson frame where Delta and its
    inverse are Hadamard products, so each pair costs four kernel
    contractions.  Limited to N <= N_MAX_DIRECT; the closed form covers
    larger systems.
    """
    kernel = V if isinstance(V, DeltaKernel) else DeltaKernel(V)
    n = kernel.modes
    if n > N_MAX_DIRECT:
        raise DimensionLimitError(
            f"direct summation is limited to N <= {N_MAX_DIRECT}, got N = {n}")
    basis = orthonormal_basis(n)
    m2 = kernel._m2
    m3 = kernel._m3_table()
    lower, raised = _frame_reps(kernel, basis)
    # Z_s: lower-frame representation of Dinv(X_s);
    # E_s: lower-frame representation of Dinv(dDelta(X_s)(Dinv X_s)).
    z = [r / m2 for r in raised]
    e = [_dd(m3, a, zs) / m2 for a, zs in zip(lower, z)]
    total = 0.0
    for s in range(len(basis)):
        a_s, z_s, e_s = lower[s], z[s], e[s]
        for t in range(len(basis)):
            if s == t:
                continue
            b_t, bhat_t = lower[t], raised[t]
            # K(X_s, X_t): first term chains dDelta(B) then dDelta(A),
            # second term uses the precomputed P_s = Dinv dDelta(A) Dinv A
            d1 = _dd(m3, b_t, z_s) / m2
            d3 = _dd(m3, a_s, d1) / m2
            term1 = np.sum(d3 * bhat_t.T).real
            d2 = _dd(m3, b_t, e_s) / m2
            term2 = np.sum(d2 * bhat_t.T).real
            total += 0.25 * (term1 - term2)
    return float(total)


def ricci(V, A, B):
    """Ricci form Ric_V(A, B) = sum_s <R_V(X_s, A, B), X_s>."""
    kernel = V if isinstance(V, DeltaKernel) else DeltaKernel(V)
    A = _check_tangent(A, kernel.modes)
    B = _check_tangent(B, kernel.modes)
    total = 0.0
    for x in orthonormal_basis(kernel.modes):
        total += float(np.sum(riemann(kernel, x, A, B) * x))
    return total
