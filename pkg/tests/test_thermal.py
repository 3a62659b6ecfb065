"""Gibbs states and the closed-form partition function."""

import numpy as np
import pytest

from spindimer import model, thermal
from spindimer.model import ModelParams
from spindimer.thermal import NonpositiveTemperatureError


def test_partition_function_trivial_limits():
    assert thermal.partition_function(ModelParams(0.0, 0.0, 0.0, 0.7)) == pytest.approx(9.0)
    z = thermal.partition_function(ModelParams(-0.4, -0.6, 0.5, 1e9))
    assert z == pytest.approx(9.0, abs=1e-6)


def test_partition_function_matches_spectral_sum():
    p = ModelParams(-0.4, -0.6, 0.5, 0.25)
    direct = np.sum(np.exp(-model.level_energies(p) / p.T))
    assert thermal.partition_function(p) == pytest.approx(direct, rel=1e-12)

    rng = np.random.default_rng(42)
    for _ in range(1000):
        j, k, b = rng.uniform(-2, 2, size=3)
        t = rng.uniform(0.05, 5.0)
        p = ModelParams(j, k, b, t)
        closed = thermal.partition_function(p)
        direct = np.sum(np.exp(-model.level_energies(p) / t))
        assert closed == pytest.approx(direct, rel=1e-12)
        assert closed > 0


def test_nonpositive_temperature_rejected():
    # ModelParams already rejects T < 0, so the thermal ops see only T = 0.
    p0 = ModelParams(0.0, 0.0, 0.0, 0.0)
    with pytest.raises(NonpositiveTemperatureError):
        thermal.partition_function(p0)
    with pytest.raises(NonpositiveTemperatureError):
        thermal.gibbs_state(p0)
    for t in (0.0, -1.0):
        with pytest.raises(NonpositiveTemperatureError):
            thermal.gibbs_state_numeric(np.zeros((2, 2), dtype=np.complex128), t)


def test_gibbs_infinite_temperature_limit():
    rho = thermal.gibbs_state(ModelParams(-0.4, -0.6, 0.5, 1e9))
    assert np.max(np.abs(rho - np.eye(9) / 9)) <= 1e-8


def test_gibbs_freezes_to_ground_projector():
    p = ModelParams(-0.4, -0.6, 0.0, 1e-3)
    psi = model.analytic_spectrum(p).level(9).state
    rho = thermal.gibbs_state(p)
    assert np.max(np.abs(rho - np.outer(psi, psi.conj()))) <= 1e-8


def test_gibbs_is_valid_density_matrix():
    rng = np.random.default_rng(5)
    for _ in range(100):
        p = ModelParams(*rng.uniform(-2, 2, size=3), rng.uniform(1e-3, 5.0))
        rho = thermal.gibbs_state(p)
        assert np.max(np.abs(rho - rho.conj().T)) <= 1e-12
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        eigs = np.linalg.eigvalsh(rho)
        assert eigs[0] >= -1e-12
        purity = np.trace(rho @ rho).real
        assert 1 / 9 - 1e-12 < purity <= 1 + 1e-12


def test_gibbs_commutes_with_hamiltonian():
    rng = np.random.default_rng(6)
    for _ in range(50):
        p = ModelParams(*rng.uniform(-2, 2, size=3), rng.uniform(0.05, 5.0))
        rho = thermal.gibbs_state(p)
        h = model.build_hamiltonian(p)
        assert np.max(np.abs(rho @ h - h @ rho)) <= 1e-10


def test_gibbs_state_numeric_examples():
    rho = thermal.gibbs_state_numeric(np.zeros((4, 4), dtype=np.complex128), 2.0)
    assert np.allclose(rho, np.eye(4) / 4, atol=1e-15)
    rho = thermal.gibbs_state_numeric(np.diag([0.0 + 0j, 1e10]), 1.0)
    assert np.max(np.abs(rho - np.diag([1.0, 0.0]))) <= 1e-15


def test_gibbs_routes_agree():
    p = ModelParams(-0.4, -0.6, 0.5, 0.25)
    h = model.build_hamiltonian(p)
    assert np.max(np.abs(thermal.gibbs_state(p) - thermal.gibbs_state_numeric(h, p.T))) <= 1e-10
    rng = np.random.default_rng(8)
    for _ in range(50):
        q = ModelParams(*rng.uniform(-2, 2, size=3), rng.uniform(1e-3, 5.0))
        hq = model.build_hamiltonian(q)
        diff = thermal.gibbs_state(q) - thermal.gibbs_state_numeric(hq, q.T)
        assert np.max(np.abs(diff)) <= 1e-10


def test_energy_shift_invariance():
    # Adding c to every level rescales Z by exp(-c/T) and leaves rho alone.
    p = ModelParams(-0.4, -0.6, 0.5, 0.25)
    h = model.build_hamiltonian(p)
    shifted = h + 5.0 * np.eye(9)
    rho = thermal.gibbs_state_numeric(h, p.T)
    rho_shifted = thermal.gibbs_state_numeric(shifted, p.T)
    assert np.max(np.abs(rho - rho_shifted)) <= 1e-12

    z = np.sum(np.exp(-model.level_energies(p) / p.T))
    z_shifted = np.sum(np.exp(-(model.level_energies(p) + 5.0) / p.T))
    assert z_shifted == pytest.approx(np.exp(-5.0 / p.T) * z, rel=1e-12)


def test_boltzmann_weights_are_shifted():
    w = thermal.boltzmann_weights(ModelParams(-0.4, -0.6, 0.0, 1e-3))
    assert w.max() == 1.0
    assert np.all(w >= 0)
    assert w[8] == 1.0
