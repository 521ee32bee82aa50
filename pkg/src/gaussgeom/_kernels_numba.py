"""Numba @njit implementation of the spectral kernel tables and the
closed-form curvature sums.  Mirrors _kernels_numpy entry by entry."""

import numpy as np
from numba import njit


@njit(cache=True)
def _f(x):
    return 0.5 * np.log1p(2.0 / (2.0 * x - 1.0))


@njit(cache=True)
def _fdiag(x):
    return 2.0 / (4.0 * x * x - 1.0)


@njit(cache=True)
def _fpp(x):
    v = 4.0 * x * x - 1.0
    return 16.0 * x / (v * v)


@njit(cache=True)
def _f_entry(x, y, tau):
    if abs(x - y) < tau:
        return _fdiag(0.5 * (x + y))
    return (_f(y) - _f(x)) / (x - y)


@njit(cache=True)
def _g_entry(x, y):
    return (_f(x) + _f(y)) / (x + y)


@njit(cache=True)
def _a_entry(xi, xj, xk, tau):
    if abs(xi - xk) < tau:
        m = 0.5 * (xi + xk)
        if abs(xj - m) < tau:
            return 0.5 * _fpp((xi + xj + xk) / 3.0)
        return ((_f(xj) - _f(m)) / (xj - m) + _fdiag(m)) / (xj - m)
    return (_f_entry(xj, xk, tau) - _f_entry(xi, xj, tau)) / (xi - xk)


@njit(cache=True)
def _b_entry(xi, xj, xk, tau):
    if abs(xi - xk) < tau:
        m = 0.5 * (xi + xk)
        return (_g_entry(m, xj) + _fdiag(m)) / (m + xj)
    return (_g_entry(xj, xk) - _g_entry(xi, xj)) / (xi - xk)


@njit(cache=True)
def kernel_tables(nu, tau):
    n = nu.shape[0]
    F = np.empty((n, n))
    G = np.empty((n, n))
    A = np.empty((n, n, n))
    B = np.empty((n, n, n))
    for i in range(n):
        for j in range(n):
            F[i, j] = _f_entry(nu[i], nu[j], tau)
            G[i, j] = _g_entry(nu[i], nu[j])
    for i in range(n):
        for j in range(n):
            for k in range(n):
                A[i, j, k] = _a_entry(nu[i], nu[j], nu[k], tau)
                B[i, j, k] = _b_entry(nu[i], nu[j], nu[k], tau)
    return F, G, A, B


@njit(cache=True)
def phi_sums(nu, F, G, A, B):
    n = nu.shape[0]
    s1 = 0.0
    for i in range(n):
        fii = F[i, i]
        gii = G[i, i]
        aiii = A[i, i, i]
        biii = B[i, i, i]
        # sign fixed against the single-mode closed form and the classical
        # large-nu asymptote (see notes in the repo history)
        s1 += biii * (biii * fii - 2.0 * aiii * gii) / (fii * fii * gii * gii)

    s2 = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            fij = F[i, j]
            gij = G[i, j]
            fii, fjj = F[i, i], F[j, j]
            gii, gjj = G[i, i], G[j, j]
            aiii, ajjj = A[i, i, i], A[j, j, j]
            biii, bjjj = B[i, i, i], B[j, j, j]
            aiij = A[i, i, j]
            aijj = A[i, j, j]
            biji = B[i, j, i]
            bjij = B[j, i, j]
            biij = B[i, i, j]
            bijj = B[i, j, j]
            s2 += (aiij / (fii * fij) * (aiij / (4.0 * fij) - biji / gij
                                         - 2.0 * biii / gii - aiii / fii)
                   + aijj / (fjj * fij) * (aijj / (4.0 * fij) - bjij / gij
                                           - 2.0 * bjjj / gjj - ajjj / fjj)
                   + 3.0 / (fij * gij) * (biij * biij / gii
                                          + bijj * bijj / gjj)
                   + biji / (fii * gij) * (biji / (4.0 * gij)
                                           - 2.0 * biii / gii - aiii / fii)
                   + bjij / (fjj * gij) * (bjij / (4.0 * gij)
                                           - 2.0 * bjjj / gjj - ajjj / fjj))

    s3 = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                fij, fik, fjk = F[i, j], F[i, k], F[j, k]
                gij, gik, gjk = G[i, j], G[i, k], G[j, k]
                fii, fjj, fkk = F[i, i], F[j, j], F[k, k]
                aijk = A[i, j, k]
                bikj = B[i, k, j]
                bijk = B[i, j, k]
                bjik = B[j, i, k]
                t1 = 1.5 * (aijk * aijk / (fij * fik * fjk)
                            + bikj * bikj / (fij * gik * gjk)
                            + bijk * bijk / (fik * gjk * gij)
                            + bjik * bjik / (fjk * gij * gik))
                t2 = ((A[j, j, k] / (fjj * fjk) + B[j, k, j] / (fjj * gjk))
                      * (B[j, i, j] / gij + A[i, j, j] / fij))
                t3 = ((A[i, i, j] / (fii * fij) + B[i, j, i] / (fii * gij))
                      * (B[i, k, i] / gik + A[i, i, k] / fik))
                t4 = ((A[i, k, k] / (fkk * fik) + B[k, i, k] / (fkk * gik))
                      * (B[k, j, k] / gjk + A[j, k, k] / fjk))
                s3 += t1 - t2 - t3 - t4
    return s1, s2, s3
