"""The KMB metric tensor and the Delta superoperator family.

The metric on faithful Gaussian covariance matrices is
g_V(A, B) = Tr[B Delta_V(A)] with
Delta_V(A) = int_{-1}^{1} dlam  theta_lam A theta_lam,
theta_lam = [2V + i lam Omega]^{-1}.

All maps are evaluated without quadrature by rotating into the Williamson
frame: with L = U~^dag S^{-1} (U~ = U kron I_N a fixed complex unitary),
theta_lam = L^dag thetatilde_lam L with thetatilde_lam diagonal, so
Delta, its inverse and its directional derivative become Hadamard
products with kernel tables built from the symplectic spectrum.  A
Gauss-Legendre quadrature of the defining integral is kept as an
independent oracle.
"""

import numpy as np

from .errors import BoundaryDegeneracyError, InvalidInputError
from .gaussian import check_symmetric, mode_count, symplectic_form, williamson
from .kernels import kernels

# Delta-family operations fail fast closer to the boundary than plain
# validation: the arccoth divergence dominates conditioning below this.
TAU_DELTA_BOUNDARY = 1e-6


def _check_tangent(A, n_modes, name="tangent matrix"):
    A = check_symmetric(np.asarray(A, dtype=float), name)
    if A.shape[0] != 2 * n_modes:
        raise InvalidInputError(
            f"{name} has shape {A.shape}, expected {(2 * n_modes, 2 * n_modes)}")
    return A


class DeltaKernel:
    """Frame and Hadamard kernels of the Delta family at a base point V.

    Precompute once per base point; all tangent-space evaluations are
    then O(N^3) matrix products.  Read-only after construction.
    """

    def __init__(self, V):
        V = check_symmetric(np.asarray(V, dtype=float), "covariance matrix")
        dec = williamson(V)
        n = dec.modes
        if dec.nu[0] <= 0.5 + TAU_DELTA_BOUNDARY:
            bad = [int(j) for j in
                   np.nonzero(dec.nu <= 0.5 + TAU_DELTA_BOUNDARY)[0]]
            raise BoundaryDegeneracyError(
                f"state too close to the boundary for Delta-family maps: "
                f"modes {bad} have nu within {TAU_DELTA_BOUNDARY:g} of 1/2",
                modes=bad)
        self.modes = n
        self.V = V
        self.decomposition = dec
        k = kernels(dec.nu)
        self.f_table = k.f
        self.g_table = k.g
        self._A = k.A
        self._B = k.B
        # M2[a, b] = int dlam d_a d_b with d_a = 1/(2 nu - lam) on the
        # first block, 1/(2 nu + lam) on the second: f within a block,
        # g across blocks.
        self._m2 = np.block([[k.f, k.g], [k.g, k.f]])
        u = np.array([[1.0, 1.0], [1.0j, -1.0j]]) / np.sqrt(2.0)
        u_tilde = np.kron(u, np.eye(n))
        s_inv = np.linalg.inv(dec.S)
        self._L = u_tilde.conj().T @ s_inv          # theta = L^dag tt L
        self._P = dec.S @ u_tilde                   # P = L^{-1}
        self._m3 = None

    def _to_frame(self, A):
        return self._L @ A @ self._L.conj().T

    def _m3_table(self):
        """M3[a, c, b] = int dlam d_a d_c d_b: A/2 for same-sign index
        triples, B/2 with the odd-one-out mode in the middle otherwise."""
        if self._m3 is not None:
            return self._m3
        n = self.modes
        sign = np.repeat(np.arange(2), n)
        mode = np.tile(np.arange(n), 2)
        sa = sign[:, None, None]
        sc = sign[None, :, None]
        sb = sign[None, None, :]
        ia, ic, ib = np.broadcast_arrays(
            mode[:, None, None], mode[None, :, None], mode[None, None, :])
        same = (sa == sc) & (sc == sb)
        min_c = (sa == sb) & (sa != sc)
        min_b = (sa == sc) & (sa != sb)
        # middle slot of B carries the minority-sign mode; B is symmetric
        # under swapping its outer indices, so their order is free
        mid = np.where(min_b, ib, np.where(min_c, ic, ia))
        out1 = np.where(min_b | min_c, ia, ic)
        out2 = ib.copy()
        out2[min_b] = ic[min_b]
        self._m3 = 0.5 * np.where(same, self._A[ia, ic, ib],
                                  self._B[out1, mid, out2])
        return self._m3

    def delta(self, A):
        A = _check_tangent(A, self.modes)
        X = self._to_frame(A)
        out = self._L.conj().T @ (self._m2 * X) @ self._L
        return 0.5 * (out + out.T).real

    def delta_inverse(self, A):
        A = _check_tangent(A, self.modes)
        X = self._P.conj().T @ A @ self._P
        out = self._P @ (X / self._m2) @ self._P.conj().T
        return 0.5 * (out + out.T).real

    def metric(self, A, B):
        A = _check_tangent(A, self.modes)
        B = _check_tangent(B, self.modes)
        X = self._to_frame(A)
        Y = self._to_frame(B)
        # Tr[B Delta(A)] in the frame; L L^dag cancels pairwise
        return float(np.sum((self._m2 * X) * Y.conj()).real)

    def ddelta(self, C, A):
        """dDelta_V(C)(A) = -d/dt Delta_{V+tC}(A) at t = 0."""
        C = _check_tangent(C, self.modes, "direction matrix")
        A = _check_tangent(A, self.modes)
        m3 = self._m3_table()
        Ct = self._to_frame(C)
        At = self._to_frame(A)
        T = (np.einsum("ac,cb,acb->ab", Ct, At, m3)
             + np.einsum("ac,cb,acb->ab", At, Ct, m3))
        out = 2.0 * (self._L.conj().T @ T @ self._L)
        return 0.5 * (out + out.T).real

    def christoffel(self, A, B):
        """Gamma_V(A, B) = -(1/2) Delta^{-1}(dDelta(B)(A))."""
        return -0.5 * self.delta_inverse(self.ddelta(B, A))


def _kernel(V):
    return V if isinstance(V, DeltaKernel) else DeltaKernel(V)


def delta(V, A):
    """Delta_V(A), the KMB metric superoperator applied to a tangent."""
    return _kernel(V).delta(A)


def delta_inverse(V, A):
    """Inverse of Delta_V; delta(V, delta_inverse(V, A)) = A."""
    return _kernel(V).delta_inverse(A)


def metric(V, A, B):
    """KMB metric g_V(A, B) = Tr[B Delta_V(A)]."""
    return _kernel(V).metric(A, B)


def ddelta(V, C, A):
    """Directional derivative map dDelta_V(C)(A) (minus-sign convention)."""
    return _kernel(V).ddelta(C, A)


def christoffel(V, A, B):
    """Christoffel operator Gamma_V(A, B) of the Levi-Civita connection."""
    return _kernel(V).christoffel(A, B)


def delta_quadrature(V, A, nodes=64):
    """Gauss-Legendre evaluation of the defining integral of Delta_V(A).

    Independent of the Williamson-frame closed form: inverts
    2V + i lam Omega directly at each node.  Used as a testing oracle and
    as a user-selectable alternative backend.
    """
    if nodes < 1:
        raise InvalidInputError(f"node count must be positive, got {nodes}")
    V = check_symmetric(np.asarray(V, dtype=float), "covariance matrix")
    n = mode_count(V)
    A = _check_tangent(A, n)
    omega = symplectic_form(n)
    lam, w = np.polynomial.legendre.leggauss(nodes)
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    for lk, wk in zip(lam, w):
        theta = np.linalg.inv(2.0 * V + 1j * lk * omega)
        out += wk * (theta @ A @ theta)
    out = 0.5 * (out + out.T)
    return out.real
