import numpy as np
import pytest

from gaussgeom import (
    BoundaryDegeneracyError,
    ChainParams,
    InvalidInputError,
    chain_curvature_scan,
    chain_hamiltonian,
    chain_modes,
    chain_symplectic_eigenvalues,
    covariance_from_hamiltonian,
    high_temperature_ratio,
    symplectic_eigenvalues,
)


def test_params_validation():
    with pytest.raises(InvalidInputError):
        ChainParams(0, 1.0, 1.0)
    with pytest.raises(InvalidInputError):
        ChainParams(3, -1.0, 1.0)
    with pytest.raises(InvalidInputError):
        ChainParams(3, 1.0, 0.0)


def test_modes_small_n():
    assert np.allclose(chain_modes(ChainParams(1, 2.0, 1.0)), [np.sqrt(2.0)])
    omega = chain_modes(ChainParams(2, 1.0, 1.0))
    assert np.allclose(omega, [np.sqrt(5.0), 1.0])
    assert np.all(chain_modes(ChainParams(9, 0.3, 1.0)) >= np.sqrt(0.3))


def test_symplectic_eigenvalues_limits():
    cold = chain_symplectic_eigenvalues(ChainParams(4, 1.0, 0.01))
    assert np.max(np.abs(cold - 0.5)) < 1e-8
    hot = chain_symplectic_eigenvalues(ChainParams(1, 1.0, 100.0))
    assert abs(hot[0] - 100.0) < 0.1 * 100.0 * 1e-2


def test_full_pipeline_consistency():
    for n in (1, 2, 3, 10):
        p = ChainParams(n, 1.3, 0.8)
        direct = np.sort(chain_symplectic_eigenvalues(p))
        via_h = symplectic_eigenvalues(
            covariance_from_hamiltonian(chain_hamiltonian(p)))
        assert np.max(np.abs(direct - via_h)) < 1e-8


def test_hamiltonian_structure():
    p = ChainParams(3, 1.0, 2.0)
    H = chain_hamiltonian(p)
    assert np.max(np.abs(H - H.T)) == 0.0
    assert np.all(np.linalg.eigvalsh(H) > 0.0)
    q = H[:3, :3] * p.t_tilde
    assert np.allclose(np.diag(q), 3.0)
    assert q[0, 1] == q[1, 2] == q[0, 2] == -1.0
    assert np.allclose(H[3:, 3:] * p.t_tilde, np.eye(3))


def test_hamiltonian_wraparound_doubles_at_small_n():
    # periodic wrap-around coincides with nearest-neighbour for N <= 2
    H1 = chain_hamiltonian(ChainParams(1, 1.0, 1.0))
    assert np.allclose(H1[0, 0], 1.0)  # (omega~ + 2) - 2
    H2 = chain_hamiltonian(ChainParams(2, 1.0, 1.0))
    assert np.allclose(H2[0, 1], -2.0)


def test_as_printed_coefficient():
    p = ChainParams(3, 2.0, 1.0)
    default = chain_hamiltonian(p)
    printed = chain_hamiltonian(p, coefficient="as-printed")
    assert np.allclose(np.diag(printed - default)[:3], 2.0 ** 2 - 2.0)
    with pytest.raises(InvalidInputError):
        chain_hamiltonian(p, coefficient="bogus")


def test_scan_monotone_and_entropy():
    temps = np.logspace(np.log10(0.2), np.log10(50.0), 10)
    rows = chain_curvature_scan([ChainParams(20, 1.0, t) for t in temps])
    ratio = np.array([r[4] for r in rows])
    entropy = np.array([r[5] for r in rows])
    assert np.all(np.diff(ratio) >= 0.0)
    assert np.all(np.diff(entropy) > 0.0)
    assert np.all(ratio < 0.0)


def test_scan_temperature_floor():
    with pytest.raises(BoundaryDegeneracyError):
        chain_curvature_scan([ChainParams(5, 4.0, 0.01)])


def test_scan_high_t_matches_expansion():
    p = ChainParams(10, 1.0, 50.0)
    row = chain_curvature_scan([p])[0]
    expansion = high_temperature_ratio(chain_modes(p), p.t_tilde)
    assert abs(row[4] - expansion) < 1e-2 * abs(expansion)
