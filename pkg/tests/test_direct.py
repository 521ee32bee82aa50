import numpy as np
import pytest

from gaussgeom import (
    DeltaKernel,
    DimensionLimitError,
    orthonormal_basis,
    random_covariance,
    random_symplectic,
    ricci,
    riemann,
    scalar_curvature,
    scalar_curvature_direct,
    sectional_like_term,
    symplectic_eigenvalues,
)

from conftest import rand_sym


def test_basis_count_and_gram():
    for n in (1, 2, 3):
        basis = orthonormal_basis(n)
        assert len(basis) == 2 * n * n + n
        gram = np.array([[np.sum(x * y) for y in basis] for x in basis])
        assert np.max(np.abs(gram - np.eye(len(basis)))) < 1e-13
        for x in basis:
            assert np.max(np.abs(x - x.T)) == 0.0


def test_basis_n1_explicit():
    basis = orthonormal_basis(1)
    assert np.allclose(basis[0], [[1, 0], [0, 0]])
    assert np.allclose(basis[1], [[0, 0], [0, 1]])
    assert np.allclose(basis[2], np.array([[0, 1], [1, 0]]) / np.sqrt(2))


def test_basis_completeness(rng):
    for n in (1, 2, 3):
        basis = orthonormal_basis(n)
        M = rand_sym(rng, 2 * n)
        rebuilt = sum(x * np.sum(x * M) for x in basis)
        assert np.max(np.abs(rebuilt - M)) < 1e-12 * np.max(np.abs(M))


def test_riemann_antisymmetry(rng):
    V = random_covariance(2, 0)
    A = rand_sym(rng, 4)
    B = rand_sym(rng, 4)
    C = rand_sym(rng, 4)
    r1 = riemann(V, A, B, C)
    r2 = riemann(V, B, A, C)
    assert np.max(np.abs(r1 + r2)) < 1e-10 * max(1.0, np.max(np.abs(r1)))
    assert np.max(np.abs(riemann(V, A, A, C))) == 0.0


def test_riemann_symplectic_covariance(rng):
    V = random_covariance(2, 1)
    A = rand_sym(rng, 4)
    B = rand_sym(rng, 4)
    C = rand_sym(rng, 4)
    S = random_symplectic(2, rng)
    lhs = riemann(S @ V @ S.T, S @ A @ S.T, S @ B @ S.T, S @ C @ S.T)
    rhs = S @ riemann(V, A, B, C) @ S.T
    assert np.max(np.abs(lhs - rhs)) < 1e-8 * max(1.0, np.max(np.abs(rhs)))


def test_sectional_like_term_diagonal_vanishes(rng):
    V = random_covariance(2, 2)
    A = rand_sym(rng, 4)
    assert sectional_like_term(V, A, A) == 0.0


def test_direct_equals_closed_small_modes():
    for n, seeds in ((1, range(6)), (2, range(4)), (3, range(2))):
        for seed in seeds:
            V = random_covariance(n, seed)
            nu = symplectic_eigenvalues(V)
            d = scalar_curvature_direct(V)
            c = scalar_curvature(nu)
            assert abs(d - c) < 1e-7 * abs(c)


def test_direct_pair_sum_equals_k_functional():
    # the optimized double sum must agree with naive K-term accumulation
    V = random_covariance(2, 11)
    kernel = DeltaKernel(V)
    basis = orthonormal_basis(2)
    naive = sum(sectional_like_term(kernel, a, b)
                for i, a in enumerate(basis)
                for j, b in enumerate(basis) if i != j)
    fast = scalar_curvature_direct(V)
    assert abs(naive - fast) < 1e-9 * abs(fast)


def test_direct_isometry_invariance(rng):
    V = random_covariance(2, 6)
    S = random_symplectic(2, rng)
    a = scalar_curvature_direct(V)
    b = scalar_curvature_direct(S @ V @ S.T)
    assert abs(a - b) < 1e-7 * abs(a)


def test_direct_basis_permutation_invariance(monkeypatch):
    import gaussgeom.direct as direct_mod

    V = random_covariance(2, 8)
    base = scalar_curvature_direct(V)
    original = direct_mod.orthonormal_basis

    def permuted(n):
        elems = original(n)
        return elems[::-1]

    monkeypatch.setattr(direct_mod, "orthonormal_basis", permuted)
    assert abs(direct_mod.scalar_curvature_direct(V) - base) < 1e-9 * abs(base)


def test_direct_dimension_limit():
    V = np.diag([1.0] * 14)
    with pytest.raises(DimensionLimitError):
        scalar_curvature_direct(V)


def test_ricci_symmetric_and_contracts_to_scalar(rng):
    V = random_covariance(1, 3)
    A = rand_sym(rng, 2)
    B = rand_sym(rng, 2)
    assert abs(ricci(V, A, B) - ricci(V, B, A)) < 1e-10
    # contracting Ric with the Delta-inverse-raised basis gives Scal
    kernel = DeltaKernel(V)
    basis = orthonormal_basis(1)
    total = sum(ricci(kernel, x, kernel.delta_inverse(x)) for x in basis)
    assert abs(total - scalar_curvature_direct(V)) < 1e-8 * abs(total)
