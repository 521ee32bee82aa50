import numpy as np
import pytest

from gaussgeom import (
    BoundaryDegeneracyError,
    InvalidDimensionError,
    InvalidInputError,
    covariance_from_hamiltonian,
    entropy_from_spectrum,
    hamiltonian_matrix,
    interleaved_to_block_permutation,
    metric,
    random_covariance,
    random_symplectic,
    relative_entropy,
    symplectic_eigenvalues,
    symplectic_form,
    validate,
    von_neumann_entropy,
    williamson,
)
from gaussgeom.gaussian import require_faithful

from conftest import rand_sym


def test_symplectic_form_shape_and_square():
    for n in (1, 2, 5):
        omega = symplectic_form(n)
        assert omega.shape == (2 * n, 2 * n)
        assert np.allclose(omega @ omega, -np.eye(2 * n))
        assert np.allclose(omega.T, -omega)


def test_symplectic_form_rejects_bad_modes():
    with pytest.raises(InvalidDimensionError):
        symplectic_form(0)


def test_interleaved_permutation_roundtrip():
    n = 3
    P = interleaved_to_block_permutation(n)
    assert np.allclose(P @ P.T, np.eye(2 * n))
    # diag(q1,p1,q2,p2,q3,p3) interleaved -> diag(q1,q2,q3,p1,p2,p3) block
    inter = np.diag([1.0, 10.0, 2.0, 20.0, 3.0, 30.0])
    block = P @ inter @ P.T
    assert np.allclose(np.diag(block), [1.0, 2.0, 3.0, 10.0, 20.0, 30.0])


def test_validate_vacuum_thermal_invalid():
    vac = validate(0.5 * np.eye(2))
    assert vac.valid and not vac.faithful
    thermal = validate(np.eye(2))
    assert thermal.valid and thermal.faithful
    assert abs(thermal.min_symplectic_eigenvalue - 1.0) < 1e-12
    bad = validate(0.25 * np.eye(2))
    assert not bad.valid and not bad.faithful


def test_validate_rejects_asymmetric():
    V = np.array([[1.0, 0.5], [0.2, 1.0]])
    with pytest.raises(InvalidInputError):
        validate(V)


def test_validate_odd_dimension():
    with pytest.raises(InvalidDimensionError):
        validate(np.eye(3))


def test_require_faithful_names_modes():
    V = np.diag([0.5, 2.0, 0.5, 2.0])
    with pytest.raises(BoundaryDegeneracyError) as err:
        require_faithful(V)
    assert 0 in err.value.modes


def test_symplectic_eigenvalues_against_eig_oracle(rng):
    for n in (1, 2, 4):
        for seed in range(5):
            V = random_covariance(n, seed)
            nu = symplectic_eigenvalues(V)
            omega = symplectic_form(n)
            oracle = np.sort(np.abs(np.linalg.eigvals(1j * omega @ V)))[::2]
            assert np.max(np.abs(nu - oracle)) < 1e-10 * max(1, nu.max())


def test_williamson_reconstruction_and_symplecticity():
    for n in (1, 2, 3, 5):
        omega = symplectic_form(n)
        for seed in range(25):
            V = random_covariance(n, 100 * n + seed)
            dec = williamson(V)
            S, nu = dec.S, dec.nu
            assert np.all(np.diff(nu) >= 0)
            assert np.max(np.abs(S @ omega @ S.T - omega)) < 1e-9
            rebuilt = S @ np.diag(np.concatenate([nu, nu])) @ S.T
            assert np.max(np.abs(rebuilt - V)) < 1e-9 * np.max(np.abs(V))


def test_williamson_degenerate_spectrum():
    V = np.diag([2.0, 2.0, 2.0, 2.0])
    dec = williamson(V)
    assert np.allclose(dec.nu, [2.0, 2.0])
    omega = symplectic_form(2)
    assert np.max(np.abs(dec.S @ omega @ dec.S.T - omega)) < 1e-9


def test_hamiltonian_covariance_roundtrip():
    for n in (1, 2, 3):
        for seed in range(5):
            V = random_covariance(n, seed, nu_range=(0.6, 5.0))
            H = hamiltonian_matrix(V)
            back = covariance_from_hamiltonian(H)
            assert np.max(np.abs(back - V)) < 1e-9 * np.max(np.abs(V))


def test_hamiltonian_single_mode_thermal():
    # V = nu I2 has H = 2 arccoth(2 nu) I2
    nu = 1.7
    H = hamiltonian_matrix(nu * np.eye(2))
    expect = np.log((2 * nu + 1) / (2 * nu - 1))
    assert np.allclose(H, expect * np.eye(2))


def test_entropy_values_and_monotonicity():
    assert entropy_from_spectrum([0.5]) == 0.0
    s_nats = entropy_from_spectrum([1.0])
    s_bits = entropy_from_spectrum([1.0], base="bits")
    assert abs(s_bits - s_nats / np.log(2.0)) < 1e-14
    assert abs(s_bits - 1.3774437510817346) < 1e-12
    grid = np.linspace(0.51, 8.0, 200)
    vals = [entropy_from_spectrum([g]) for g in grid]
    assert np.all(np.diff(vals) > 0)


def test_von_neumann_entropy_additive_over_modes():
    V = np.diag([1.0, 2.5, 1.0, 2.5])
    total = von_neumann_entropy(V)
    parts = entropy_from_spectrum([1.0]) + entropy_from_spectrum([2.5])
    assert abs(total - parts) < 1e-10


def test_relative_entropy_zero_and_positive(rng):
    V = random_covariance(2, 0)
    assert abs(relative_entropy(V, V)) < 1e-10
    for seed in range(5):
        V2 = random_covariance(2, seed + 1)
        assert relative_entropy(V, V2) > 0.0


def test_relative_entropy_hessian_is_metric(rng):
    for seed in range(8):
        n = 1 + seed % 3
        V = random_covariance(n, seed, nu_range=(0.8, 5.0))
        A = rand_sym(rng, 2 * n)
        B = rand_sym(rng, 2 * n)
        h = 1e-4 * np.max(np.abs(V))

        def s(t, u):
            return relative_entropy(V + t * A, V + u * B)

        hess = (s(h, h) - s(h, -h) - s(-h, h) + s(-h, -h)) / (4.0 * h * h)
        g = metric(V, A, B)
        assert abs(g + hess) < 1e-5 * abs(g)


def test_random_symplectic_is_symplectic(rng):
    for n in (1, 2, 4):
        S = random_symplectic(n, rng)
        omega = symplectic_form(n)
        assert np.max(np.abs(S @ omega @ S.T - omega)) < 1e-10


def test_random_covariance_deterministic_and_faithful():
    a = random_covariance(3, 12345)
    b = random_covariance(3, 12345)
    assert np.array_equal(a, b)
    report = validate(a)
    assert report.valid and report.faithful


def test_random_covariance_spectrum_in_range():
    lo, hi = 0.7, 3.0
    V = random_covariance(4, 9, nu_range=(lo, hi))
    nu = symplectic_eigenvalues(V)
    assert np.all(nu > lo - 1e-10) and np.all(nu < hi + 1e-10)


def test_random_covariance_rejects_bad_range():
    with pytest.raises(InvalidInputError):
        random_covariance(2, 0, nu_range=(0.3, 1.0))
