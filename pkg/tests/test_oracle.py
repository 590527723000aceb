"""Brute-force validators: determinism, guards, and cross-route agreement."""

import numpy as np
import pytest

from symcorr.channels import AMPLITUDE_DAMPING, PHASE_DAMPING, ChannelSpec, apply_local_channel
from symcorr.genuine import bipartite_discord
from symcorr.global_discord import global_discord_thermo_analytic
from symcorr.oracle import (
    OracleConfig,
    _givens_unitary,
    oracle_bipartite_discord,
    oracle_channel_dilation,
    oracle_global_discord,
    oracle_lhv_bound,
)
from symcorr.qstate import Cut, DensityMatrix, QubitCapError, tensor
from symcorr.states import ghz_state, thermo_state

FAST = OracleConfig(restarts=4, grid_density=16, seed=5)


def random_density(rng, n):
    dim = 2**n
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = m @ m.conj().T
    return DensityMatrix(n, m / m.trace())


def test_config_guards():
    with pytest.raises(ValueError):
        OracleConfig(max_qubits=6)
    with pytest.raises(QubitCapError):
        oracle_bipartite_discord(thermo_state(5, 0.7), Cut.of(5, {4}), FAST)
    big = OracleConfig(restarts=1, grid_density=4, seed=1, max_qubits=5)
    oracle_global_discord(thermo_state(5, 1.0), big)  # explicit opt-in works


def test_givens_parametrization_is_unitary():
    rng = np.random.default_rng(3)
    for dim in (2, 4, 8):
        params = rng.uniform(0, 2 * np.pi, dim * (dim - 1))
        u = _givens_unitary(dim, params)
        assert np.abs(u @ u.conj().T - np.eye(dim)).max() < 1e-12


def test_bipartite_product_state_zero():
    rng = np.random.default_rng(7)
    rho = tensor(random_density(rng, 1), random_density(rng, 1))
    assert oracle_bipartite_discord(rho, Cut.of(2, {0}), FAST) == pytest.approx(0.0, abs=1e-7)


def test_bipartite_werner_mixture_positive():
    bell = ghz_state(2, 1 / np.sqrt(2)).to_density_matrix()
    rho = DensityMatrix(2, 0.5 * bell.data + 0.5 * np.eye(4) / 4)
    assert oracle_bipartite_discord(rho, Cut.of(2, {1}), FAST) > 1e-3


def test_bipartite_brackets_symmetric_mode():
    rho = thermo_state(3, 0.35)
    for measured in ({2}, {0, 1}):
        cut = Cut.of(3, measured)
        sym, _ = bipartite_discord(rho, cut)
        brute = oracle_bipartite_discord(rho, cut, FAST)
        assert brute <= sym + 1e-9
        assert brute >= sym - 2e-3


def test_global_matches_analytic_and_symmetric():
    rho = thermo_state(3, 0.8)
    value = oracle_global_discord(rho, FAST)
    assert value == pytest.approx(global_discord_thermo_analytic(3, 0.8), abs=2e-3)


def test_global_product_state_zero():
    rng = np.random.default_rng(11)
    rho = tensor(random_density(rng, 1), random_density(rng, 1))
    assert oracle_global_discord(rho, FAST) == pytest.approx(0.0, abs=1e-6)


def test_deterministic_given_seed():
    rho = thermo_state(3, 0.6)
    cut = Cut.of(3, {2})
    a = oracle_bipartite_discord(rho, cut, FAST)
    b = oracle_bipartite_discord(rho, cut, FAST)
    assert a == b
    other = oracle_bipartite_discord(rho, cut, OracleConfig(restarts=4, grid_density=16, seed=99))
    assert a == pytest.approx(other, abs=1e-6)


class TestChannelDilation:
    def test_identity_at_rate_zero(self):
        rng = np.random.default_rng(13)
        rho = random_density(rng, 2)
        for kind in (AMPLITUDE_DAMPING, PHASE_DAMPING):
            out = oracle_channel_dilation(rho, ChannelSpec(kind, 0.0))
            assert np.abs(out.data - rho.data).max() < 1e-12

    def test_matches_kraus_route(self):
        rng = np.random.default_rng(17)
        for kind in (AMPLITUDE_DAMPING, PHASE_DAMPING):
            for rate in (0.25, 0.8):
                rho = random_density(rng, 3)
                spec = ChannelSpec(kind, rate)
                kraus = apply_local_channel(rho, spec)
                dilated = oracle_channel_dilation(rho, spec)
                assert np.abs(kraus.data - dilated.data).max() < 1e-12

    def test_phase_damping_preserves_populations(self):
        rng = np.random.default_rng(19)
        rho = random_density(rng, 2)
        out = oracle_channel_dilation(rho, ChannelSpec(PHASE_DAMPING, 0.6))
        assert np.abs(np.diag(out.data) - np.diag(rho.data)).max() < 1e-12


class TestLhvBound:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_bound_is_exactly_one(self, n):
        assert oracle_lhv_bound(n) == 1.0

    def test_large_n_gated(self):
        with pytest.raises(QubitCapError):
            oracle_lhv_bound(5)
        assert oracle_lhv_bound(5, allow_large=True) == 1.0
        with pytest.raises(QubitCapError):
            oracle_lhv_bound(6, allow_large=True)
