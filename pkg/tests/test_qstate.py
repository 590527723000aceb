"""Density-operator core: construction, reductions, entropies, measurement."""

import numpy as np
import pytest
from scipy.linalg import logm

from symcorr.qstate import (
    Cut,
    DensityMatrix,
    PureState,
    QubitCapError,
    conditional_state,
    embed_operator,
    is_invariant_under,
    mutual_information,
    partial_trace,
    permutation_unitary,
    tensor,
    total_correlations,
    von_neumann_entropy,
)
from symcorr.states import ghz_state, symmetric_basis, thermo_state


def random_density(rng, n):
    dim = 2**n
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = m @ m.conj().T
    return DensityMatrix(n, m / m.trace())


def random_unitary(rng, dim):
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def naive_partial_trace(data, n, keep):
    """Index-loop reduction, independent of the reshape-based implementation."""
    keep = sorted(keep)
    traced = [q for q in range(n) if q not in keep]
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    out = np.zeros((dk, dk), dtype=complex)

    def assemble(kbits, tbits):
        idx = 0
        for pos, q in enumerate(keep):
            idx |= ((kbits >> (len(keep) - 1 - pos)) & 1) << (n - 1 - q)
        for pos, q in enumerate(traced):
            idx |= ((tbits >> (len(traced) - 1 - pos)) & 1) << (n - 1 - q)
        return idx

    for a in range(dk):
        for b in range(dk):
            for t in range(dt):
                out[a, b] += data[assemble(a, t), assemble(b, t)]
    return out


def bell_state():
    return PureState.from_vector(np.array([1, 0, 0, 1]) / np.sqrt(2)).to_density_matrix()


class TestTypes:
    def test_pure_state_rejects_bad_norm(self):
        with pytest.raises(ValueError, match="norm"):
            PureState(1, np.array([1.0, 1.0]))

    def test_density_matrix_rejects_non_hermitian(self):
        m = np.array([[0.5, 0.1], [0.4, 0.5]], dtype=complex)
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix(1, m)

    def test_density_matrix_rejects_bad_trace(self):
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix(1, np.eye(2))

    def test_psd_violation_caught_at_entropy(self):
        m = np.diag([1.1, -0.1]).astype(complex)
        rho = DensityMatrix(1, m)
        with pytest.raises(ValueError, match="positive semidefinite"):
            von_neumann_entropy(rho)

    def test_qubit_cap(self):
        with pytest.raises(QubitCapError):
            DensityMatrix(13, np.eye(2**13) / 2**13)

    def test_cut_validation(self):
        with pytest.raises(ValueError):
            Cut(frozenset({0}), frozenset({0, 1}))
        with pytest.raises(ValueError):
            Cut(frozenset(), frozenset({0}))
        with pytest.raises(ValueError):
            Cut(frozenset({0}), frozenset({2}))
        cut = Cut.of(3, {2})
        assert cut.remainder == frozenset({0, 1})

    def test_data_is_read_only(self):
        rho = DensityMatrix.maximally_mixed(1)
        with pytest.raises(ValueError):
            rho.data[0, 0] = 2.0


class TestTensorAndTrace:
    def test_tensor_identity_case(self):
        mixed = DensityMatrix.maximally_mixed(1)
        out = tensor(mixed, mixed)
        assert np.allclose(out.data, np.diag([0.25] * 4))

    def test_tensor_basis_product(self):
        zero = PureState.basis_state(1, 0).to_density_matrix()
        one = PureState.basis_state(1, 1).to_density_matrix()
        out = tensor(zero, one)
        expected = np.zeros((4, 4))
        expected[1, 1] = 1.0  # |01> sits at index 1: qubit 0 is the high bit
        assert np.allclose(out.data, expected)

    def test_tensor_trace_multiplies(self):
        rng = np.random.default_rng(7)
        for _ in range(5):
            a, b = random_density(rng, 1), random_density(rng, 2)
            out = tensor(a, b)
            assert out.n_qubits == 3
            assert np.allclose(out.data, np.kron(a.data, b.data))
            assert abs(out.data.trace() - a.data.trace() * b.data.trace()) < 1e-12

    def test_partial_trace_bell(self):
        reduced = partial_trace(bell_state(), {0})
        assert np.abs(reduced.data - np.eye(2) / 2).max() < 1e-12

    def test_partial_trace_product_factorizes(self):
        rng = np.random.default_rng(11)
        a, b = random_density(rng, 1), random_density(rng, 1)
        assert np.abs(partial_trace(tensor(a, b), {0}).data - a.data).max() < 1e-12
        assert np.abs(partial_trace(tensor(a, b), {1}).data - b.data).max() < 1e-12

    def test_partial_trace_ghz_pair(self):
        rho = ghz_state(3, 1 / np.sqrt(2)).to_density_matrix()
        reduced = partial_trace(rho, {0, 1})
        expected = np.zeros((4, 4))
        expected[0, 0] = expected[3, 3] = 0.5
        assert np.abs(reduced.data - expected).max() < 1e-12

    def test_partial_trace_matches_naive(self):
        rng = np.random.default_rng(13)
        for keep in ({0}, {2}, {0, 2}, {1, 3}, {0, 1, 3}):
            rho = random_density(rng, 4)
            got = partial_trace(rho, keep).data
            want = naive_partial_trace(rho.data, 4, keep)
            assert np.abs(got - want).max() < 1e-12

    def test_partial_trace_composes(self):
        rng = np.random.default_rng(17)
        rho = random_density(rng, 3)
        two_step = partial_trace(partial_trace(rho, {0, 1}), {0})
        one_step = partial_trace(rho, {0})
        assert np.abs(two_step.data - one_step.data).max() < 1e-12

    def test_partial_trace_errors(self):
        rho = DensityMatrix.maximally_mixed(2)
        with pytest.raises(ValueError):
            partial_trace(rho, set())
        with pytest.raises(ValueError):
            partial_trace(rho, {5})


class TestEntropy:
    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(DensityMatrix.maximally_mixed(1)) == pytest.approx(1.0)

    def test_pure_state_zero(self):
        rng = np.random.default_rng(19)
        vec = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi = PureState.from_vector(vec / np.linalg.norm(vec))
        assert von_neumann_entropy(psi.to_density_matrix()) == pytest.approx(0.0, abs=1e-12)

    def test_three_quarters_mixture(self):
        rho = DensityMatrix(1, np.diag([0.75, 0.25]).astype(complex))
        expected = 0.75 * np.log2(4 / 3) + 0.25 * np.log2(4)
        assert von_neumann_entropy(rho) == pytest.approx(expected, abs=1e-12)

    def test_matches_logm_oracle(self):
        rng = np.random.default_rng(23)
        for n in (1, 2, 3):
            rho = random_density(rng, n)
            oracle = -np.trace(rho.data @ logm(rho.data)).real / np.log(2)
            assert von_neumann_entropy(rho) == pytest.approx(oracle, abs=1e-9)

    def test_unitary_invariance(self):
        rng = np.random.default_rng(29)
        for _ in range(5):
            rho = random_density(rng, 3)
            u = random_unitary(rng, 8)
            rotated = DensityMatrix(3, u @ rho.data @ u.conj().T)
            assert abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) < 1e-9


class TestCorrelationQuantities:
    def test_total_correlations_product_pure(self):
        zero = PureState.basis_state(1, 0).to_density_matrix()
        rho = tensor(tensor(zero, zero), zero)
        assert total_correlations(rho) == pytest.approx(0.0, abs=1e-12)

    def test_total_correlations_ghz(self):
        for n in (2, 3, 4):
            rho = ghz_state(n, 1 / np.sqrt(2)).to_density_matrix()
            assert total_correlations(rho) == pytest.approx(n, abs=1e-9)

    def test_total_correlations_thermo_half(self):
        assert total_correlations(thermo_state(4, 0.5)) == pytest.approx(0.0, abs=1e-12)

    def test_total_correlations_needs_two_qubits(self):
        with pytest.raises(ValueError):
            total_correlations(DensityMatrix.maximally_mixed(1))

    def test_mutual_information_product_zero(self):
        rng = np.random.default_rng(31)
        rho = tensor(random_density(rng, 1), random_density(rng, 2))
        assert mutual_information(rho, Cut.of(3, {0})) == pytest.approx(0.0, abs=1e-9)

    def test_mutual_information_ghz_two(self):
        rho = ghz_state(4, 1 / np.sqrt(2)).to_density_matrix()
        for measured in ({0}, {1, 2}, {3}):
            assert mutual_information(rho, Cut.of(4, measured)) == pytest.approx(2.0, abs=1e-9)

    def test_mutual_information_symmetric_in_blocks(self):
        rng = np.random.default_rng(37)
        rho = random_density(rng, 3)
        cut = Cut.of(3, {1})
        flipped = Cut(cut.remainder, cut.measured)
        assert mutual_information(rho, cut) == pytest.approx(
            mutual_information(rho, flipped), abs=1e-12
        )

    def test_mutual_information_thermo_independent_eval(self):
        rho = thermo_state(3, 0.8)
        cut = Cut.of(3, {2})
        entropies = []
        for block in (sorted(cut.measured), sorted(cut.remainder), list(range(3))):
            reduced = naive_partial_trace(rho.data, 3, block)
            evals = np.clip(np.linalg.eigvalsh(reduced), 0, 1)
            nz = evals[evals > 0]
            entropies.append(float(-(nz * np.log2(nz)).sum()))
        expected = entropies[0] + entropies[1] - entropies[2]
        assert mutual_information(rho, cut) == pytest.approx(expected, abs=1e-10)

    def test_total_equals_mutual_information_for_two_qubits(self):
        rng = np.random.default_rng(41)
        rho = random_density(rng, 2)
        assert total_correlations(rho) == pytest.approx(
            mutual_information(rho, Cut.of(2, {1})), abs=1e-12
        )


class TestConditionalState:
    def test_bell_probe(self):
        b, cond = conditional_state(bell_state(), Cut.of(2, {1}), PureState.basis_state(1, 0))
        assert b == pytest.approx(0.5, abs=1e-12)
        assert np.abs(cond.data - np.diag([1.0, 0.0])).max() < 1e-12

    def test_product_state_factorizes(self):
        rng = np.random.default_rng(43)
        a, b = random_density(rng, 1), random_density(rng, 1)
        rho = tensor(a, b)
        vec = rng.normal(size=2) + 1j * rng.normal(size=2)
        probe = PureState.from_vector(vec / np.linalg.norm(vec))
        prob, cond = conditional_state(rho, Cut.of(2, {0}), probe)
        expected = probe.amplitudes.conj() @ a.data @ probe.amplitudes
        assert prob == pytest.approx(expected.real, abs=1e-12)
        assert np.abs(cond.data - b.data).max() < 1e-10

    def test_probabilities_complete(self):
        rng = np.random.default_rng(47)
        rho = random_density(rng, 3)
        cut = Cut.of(3, {1, 2})
        for theta in rng.uniform(0, np.pi / 2, 3):
            total = 0.0
            for probe in symmetric_basis(2, theta).vectors:
                prob, _ = conditional_state(rho, cut, probe)
                total += prob
            assert total == pytest.approx(1.0, abs=1e-10)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="probe"):
            conditional_state(bell_state(), Cut.of(2, {1}), PureState.basis_state(2, 0))

    def test_zero_probability_branch(self):
        zero2 = PureState.basis_state(2, 0).to_density_matrix()  # |00><00|
        prob, cond = conditional_state(zero2, Cut.of(2, {0}), PureState.basis_state(1, 1))
        assert prob == 0.0 and cond is None


class TestSymmetryChecks:
    def test_identity_always_invariant(self):
        rng = np.random.default_rng(53)
        rho = random_density(rng, 2)
        assert is_invariant_under(rho, np.eye(4))

    def test_thermo_invariant_under_any_permutation(self):
        rng = np.random.default_rng(59)
        rho = thermo_state(4, 0.7)
        for _ in range(4):
            perm = rng.permutation(4)
            assert is_invariant_under(rho, permutation_unitary(4, perm))

    def test_single_bit_flip_breaks_invariance(self):
        rho = thermo_state(3, 0.8)
        flip = np.array([[0, 1], [1, 0]], dtype=complex)
        assert not is_invariant_under(rho, flip, qubits=[0])
        assert is_invariant_under(thermo_state(3, 0.5), flip, qubits=[0])

    def test_non_unitary_rejected(self):
        rho = DensityMatrix.maximally_mixed(1)
        with pytest.raises(ValueError, match="unitary"):
            is_invariant_under(rho, np.array([[1, 0], [0, 2]]))

    def test_embed_operator_matches_kron(self):
        rng = np.random.default_rng(61)
        u = random_unitary(rng, 2)
        assert np.abs(embed_operator(u, [0], 2) - np.kron(u, np.eye(2))).max() < 1e-12
        assert np.abs(embed_operator(u, [1], 2) - np.kron(np.eye(2), u)).max() < 1e-12

    def test_embed_operator_nontrivial_order(self):
        rng = np.random.default_rng(67)
        u = random_unitary(rng, 4)
        # acting on (qubit 2, qubit 0) of three qubits, checked on basis states
        full = embed_operator(u, [2, 0], 3)
        assert np.abs(full @ full.conj().T - np.eye(8)).max() < 1e-12
        psi = np.zeros(8, dtype=complex)
        psi[0b011] = 1.0  # qubit order (0,1,2) = (0,1,1)
        out = full @ psi
        # u sees |q2 q0> = |10>, i.e. input index 2; qubit 1 stays |1>
        expected = np.zeros(8, dtype=complex)
        for s in range(4):
            amp = u[s, 2]
            q2, q0 = (s >> 1) & 1, s & 1
            expected[(q0 << 2) | (1 << 1) | q2] += amp
        assert np.abs(out - expected).max() < 1e-12
