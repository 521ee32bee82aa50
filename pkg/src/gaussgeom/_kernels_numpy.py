"""Pure-numpy implementation of the spectral kernel tables and the
closed-form curvature sums.

All kernels are divided differences of f(x) = arccoth(2x) or of
g(x, y) = (f(x) + f(y))/(x + y); entries whose denominator is within
tau of zero are replaced by the analytic limit, evaluated on a
symmetrized stencil.
"""

import numpy as np


def _f(x):
    return 0.5 * np.log1p(2.0 / (2.0 * x - 1.0))


def _fdiag(x):
    # -f'(x), the nu_i -> nu_j limit of the first divided difference
    return 2.0 / (4.0 * x * x - 1.0)


def _fpp(x):
    v = 4.0 * x * x - 1.0
    return 16.0 * x / (v * v)


def f_table(nu, tau):
    """F[i, j] = (f(nu_j) - f(nu_i)) / (nu_i - nu_j), with diagonal limit."""
    x = nu[:, None]
    y = nu[None, :]
    diff = x - y
    close = np.abs(diff) < tau
    safe = np.where(close, 1.0, diff)
    generic = (_f(y) - _f(x)) / safe
    return np.where(close, _fdiag(0.5 * (x + y)), generic)


def g_table(nu):
    """G[i, j] = (f(nu_i) + f(nu_j)) / (nu_i + nu_j)."""
    fv = _f(nu)
    return (fv[:, None] + fv[None, :]) / (nu[:, None] + nu[None, :])


def _a_limit(m, y, tau):
    """Second divided difference f[m, m, y] with its own y -> m limit."""
    close = np.abs(y - m) < tau
    safe = np.where(close, 1.0, y - m)
    generic = ((_f(y) - _f(m)) / safe + _fdiag(m)) / safe
    return np.where(close, 0.5 * _fpp((2.0 * m + y) / 3.0), generic)


def a_table(nu, tau):
    """A[i, j, k] = (F[j, k] - F[i, j]) / (nu_i - nu_k), fully symmetric."""
    n = nu.shape[0]
    F = f_table(nu, tau)
    A = np.empty((n, n, n))
    for i in range(n):
        dik = nu[i] - nu[None, :]
        close = np.abs(dik) < tau
        safe = np.where(close, 1.0, dik)
        generic = (F - F[i][:, None]) / safe
        m = np.broadcast_to(0.5 * (nu[i] + nu[None, :]), (n, n))
        limit = _a_limit(m, np.broadcast_to(nu[:, None], (n, n)), tau)
        A[i] = np.where(close, limit, generic)
    return A


def b_table(nu, tau):
    """B[i, j, k] = (G[j, k] - G[i, j]) / (nu_i - nu_k); B[i,j,k] = B[k,j,i]."""
    n = nu.shape[0]
    G = g_table(nu)
    fv = _f(nu)
    B = np.empty((n, n, n))
    for i in range(n):
        dik = nu[i] - nu[None, :]
        close = np.abs(dik) < tau
        safe = np.where(close, 1.0, dik)
        generic = (G - G[i][:, None]) / safe
        m = 0.5 * (nu[i] + nu[None, :])          # over k
        g_mj = (_f(m) + fv[:, None]) / (m + nu[:, None])   # (j, k)
        limit = (g_mj + _fdiag(m)) / (m + nu[:, None])
        B[i] = np.where(close, limit, generic)
    return B


def kernel_tables(nu, tau):
    return f_table(nu, tau), g_table(nu), a_table(nu, tau), b_table(nu, tau)


def phi_sums(nu, F, G, A, B):
    """The three symmetric spectral sums of the closed-form scalar curvature.

    Returns (sum phi1, sum phi2 over i<j, sum phi3 over i<j<k).
    """
    n = nu.shape[0]
    ar = np.arange(n)
    Fd = np.diag(F).copy()
    Gd = np.diag(G).copy()
    A3 = A[ar, ar, ar]            # A[i,i,i]
    B3 = B[ar, ar, ar]            # B[i,i,i]
    DA = A[ar, ar, :]             # DA[a,b] = A[a,a,b]
    MA = A[:, ar, ar]             # MA[a,b] = A[a,b,b]
    M1 = B[ar[:, None], ar[None, :], ar[:, None]]  # M1[a,b] = B[a,b,a]
    D1 = B[ar, ar, :]             # D1[a,b] = B[a,a,b]
    D2 = B[:, ar, ar]             # D2[a,b] = B[a,b,b]

    # sign fixed against the single-mode closed form and the classical
    # large-nu asymptote (see notes in the repo history)
    s1 = float(np.sum(B3 * (B3 * Fd - 2.0 * A3 * Gd) / (Fd * Fd * Gd * Gd)))

    # pair sum, i < j
    Fii = Fd[:, None]
    Fjj = Fd[None, :]
    Gii = Gd[:, None]
    Gjj = Gd[None, :]
    Aiii = A3[:, None]
    Ajjj = A3[None, :]
    Biii = B3[:, None]
    Bjjj = B3[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        phi2 = (DA / (Fii * F) * (DA / (4.0 * F) - M1 / G
                                  - 2.0 * Biii / Gii - Aiii / Fii)
                + MA / (Fjj * F) * (MA / (4.0 * F) - M1.T / G
                                    - 2.0 * Bjjj / Gjj - Ajjj / Fjj)
                + 3.0 / (F * G) * (D1 ** 2 / Gii + D2 ** 2 / Gjj)
                + M1 / (Fii * G) * (M1 / (4.0 * G) - 2.0 * Biii / Gii
                                    - Aiii / Fii)
                + M1.T / (Fjj * G) * (M1.T / (4.0 * G) - 2.0 * Bjjj / Gjj
                                      - Ajjj / Fjj))
    s2 = float(np.sum(np.where(np.triu(np.ones((n, n), dtype=bool), 1),
                               phi2, 0.0)))

    # triple sum, i < j < k; outer python loop over i keeps memory O(N^2)
    s3 = 0.0
    jk_mask = np.triu(np.ones((n, n), dtype=bool), 1)  # j < k
    vk = np.arange(n)
    for i in range(n - 2):
        Bi = B[i]
        Fij = F[i][:, None]
        Fik = F[i][None, :]
        Gij = G[i][:, None]
        Gik = G[i][None, :]
        t1 = 1.5 * (A[i] ** 2 / (Fij * Fik * F)
                    + Bi.T ** 2 / (Fij * Gik * G)
                    + Bi ** 2 / (Fik * G * Gij)
                    + B[:, i, :] ** 2 / (F * Gij * Gik))
        t2 = ((DA / (Fd[:, None] * F) + M1 / (Fd[:, None] * G))
              * (M1[:, i][:, None] / Gij + MA[i][:, None] / Fij))
        t3 = ((DA[i][:, None] / (Fd[i] * Fij) + M1[i][:, None] / (Fd[i] * Gij))
              * (M1[i][None, :] / Gik + DA[i][None, :] / Fik))
        t4 = ((MA[i][None, :] / (Fd[None, :] * Fik)
               + M1[:, i][None, :] / (Fd[None, :] * Gik))
              * (M1.T / G + MA / F))
        phi3 = t1 - t2 - t3 - t4
        mask = jk_mask & (vk[:, None] > i)
        s3 += float(np.sum(np.where(mask, phi3, 0.0)))
    return s1, s2, s3
