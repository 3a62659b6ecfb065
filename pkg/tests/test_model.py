"""Model construction: operators, Hubbard map, Hamiltonian, closed-form levels."""

import numpy as np
import pytest

from spindimer import linalg, model
from spindimer.model import HubbardParams, ModelParams


def test_spin1_operators():
    sx, sy, sz = model.spin1_operators()
    assert np.array_equal(sz, np.diag([1.0, 0.0, -1.0]))
    for s in (sx, sy, sz):
        assert linalg.is_hermitian(s)
    assert np.allclose(sx @ sy - sy @ sx, 1j * sz, atol=1e-15)
    assert np.allclose(sx @ sx + sy @ sy + sz @ sz, 2 * np.eye(3), atol=1e-15)


def test_sz_kron_sz_diagonal():
    _, _, sz = model.spin1_operators()
    expected = np.diag([1.0, 0, -1, 0, 0, 0, -1, 0, 1])
    assert np.array_equal(linalg.kron(sz, sz), expected)


def test_couplings_from_hubbard():
    assert model.couplings_from_hubbard(HubbardParams(0.0, 1.0, 1.0)) == (0.0, 0.0, 0.0)
    J, K, eps = model.couplings_from_hubbard(HubbardParams(1.0, 1.0, 1.0))
    assert J == pytest.approx(-2.0)
    assert K == pytest.approx(-14.0 / 3.0)
    assert eps == pytest.approx(8.0 / 3.0)
    # U0 -> infinity kills the spin-0 channel term.
    J, K, eps = model.couplings_from_hubbard(HubbardParams(1.0, 1e12, 3.0))
    assert J == pytest.approx(-2.0 / 3.0)
    assert K == pytest.approx(-2.0 / 9.0, abs=1e-11)
    assert eps == pytest.approx(-4.0 / 9.0, abs=1e-11)


def test_zero_repulsion_rejected():
    with pytest.raises(model.ZeroRepulsionError):
        model.couplings_from_hubbard(HubbardParams(1.0, 0.0, 1.0))
    with pytest.raises(model.ZeroRepulsionError):
        model.couplings_from_hubbard(HubbardParams(1.0, 1.0, 0.0))


def test_model_params_validation():
    with pytest.raises(ValueError):
        ModelParams(0.0, 0.0, 0.0, -0.1)
    with pytest.raises(ValueError):
        ModelParams(np.inf, 0.0, 0.0, 1.0)
    assert ModelParams(1.0, 2.0, 3.0).T == 0.0


def test_build_hamiltonian_trivial_cases():
    assert np.array_equal(
        model.build_hamiltonian(ModelParams(0.0, 0.0, 0.0)), np.zeros((9, 9))
    )
    b = 0.7
    zeeman = model.build_hamiltonian(ModelParams(0.0, 0.0, b))
    # Total-Sz eigenvalues in lexicographic |m1,m2> order, m descending.
    want = b * np.array([2.0, 1, 0, 1, 0, -1, 0, -1, -2])
    assert np.array_equal(zeeman, np.diag(want))


def test_hamiltonian_matches_closed_forms():
    p = ModelParams(-0.4, -0.6, 0.0)
    numeric = linalg.hermitian_eig(model.build_hamiltonian(p)).values
    assert np.allclose(numeric, np.sort(model.level_energies(p)), atol=1e-12)


def test_analytic_spectrum_values():
    p = ModelParams(-0.4, -0.6, 0.0)
    spec = model.analytic_spectrum(p)
    assert spec.level(9).energy == pytest.approx(-1.6)
    rng = np.random.default_rng(7)
    for _ in range(20):
        q = ModelParams(*rng.uniform(-2, 2, size=3))
        s = model.analytic_spectrum(q)
        assert s.level(7).energy - s.level(8).energy == pytest.approx(4 * q.B, abs=1e-12)


def test_analytic_spectrum_states_are_eigenvectors():
    rng = np.random.default_rng(11)
    for _ in range(50):
        p = ModelParams(*rng.uniform(-2, 2, size=3))
        h = model.build_hamiltonian(p)
        spec = model.analytic_spectrum(p)
        v = spec.states()
        assert np.max(np.abs(v.conj().T @ v - np.eye(9))) <= 1e-12
        for lv in spec.levels:
            residual = h @ lv.state - lv.energy * lv.state
            assert np.max(np.abs(residual)) <= 1e-12


def test_spectrum_oracle_equivalence_bulk():
    # Numeric eigensolver vs typed-in closed forms over the full cube.
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        p = ModelParams(*rng.uniform(-2, 2, size=3))
        numeric = linalg.hermitian_eig(model.build_hamiltonian(p)).values
        exact = np.sort(model.level_energies(p))
        assert np.max(np.abs(numeric - exact)) <= 1e-10


def test_commuting_structure():
    sx, sy, sz = model.spin1_operators()
    i3 = np.eye(3, dtype=np.complex128)
    d = sum(linalg.kron(s, s) for s in (sx, sy, sz))
    sz_tot = linalg.kron(sz, i3) + linalg.kron(i3, sz)
    for a, b in ((d, d @ d), (d, sz_tot), (d @ d, sz_tot)):
        assert np.max(np.abs(a @ b - b @ a)) <= 1e-14


def test_field_flip_symmetry():
    rng = np.random.default_rng(3)
    swap = np.array([2, 1, 4, 3, 5, 6, 8, 7, 9])
    for _ in range(50):
        j, k, b = rng.uniform(-2, 2, size=3)
        e_plus = model.level_energies(ModelParams(j, k, b))
        e_minus = model.level_energies(ModelParams(j, k, -b))
        assert np.allclose(np.sort(e_plus), np.sort(e_minus), atol=1e-12)
        assert np.allclose(e_plus, e_minus[swap - 1], atol=1e-12)


def test_ground_state():
    assert model.ground_state(ModelParams(-0.4, -0.6, 0.0)) == ({9}, pytest.approx(-1.6))
    labels, energy = model.ground_state(ModelParams(-0.4, -0.6, 0.5))
    assert labels == {8}
    assert energy == pytest.approx(-2.0)
    labels, energy = model.ground_state(ModelParams(-0.4, -0.6, 0.3))
    assert labels == {8, 9}
    assert energy == pytest.approx(-1.6)
