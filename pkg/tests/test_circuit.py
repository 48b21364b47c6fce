import numpy as np
import pytest

from qsim import gates
from qsim.circuit import Circuit, Instruction, apply, apply_density, embed, unitary_of
from qsim.errors import (
    ArityError,
    CapacityError,
    DimensionMismatchError,
    DuplicateWireError,
    WireOutOfRangeError,
)
from qsim.numerics import is_unitary, kron
from qsim.qstate import basis_state, inner_product, to_density, zero_state

SQRT2_INV = 1.0 / np.sqrt(2.0)
BELL = Circuit(2, [Instruction(gates.H, (0,)), Instruction(gates.CNOT, (0, 1))])
BELL_VECTOR = np.array([SQRT2_INV, 0.0, 0.0, SQRT2_INV])  # CNOT (H x I) e0 by hand


class TestConstruction:
    def test_instruction_arity(self):
        with pytest.raises(ArityError):
            Instruction(gates.CNOT, (0,))

    def test_instruction_duplicate_wires(self):
        with pytest.raises(DuplicateWireError):
            Instruction(gates.CNOT, (1, 1))

    def test_instruction_negative_wire(self):
        with pytest.raises(WireOutOfRangeError):
            Instruction(gates.X, (-1,))

    def test_circuit_wire_bounds(self):
        with pytest.raises(WireOutOfRangeError):
            Circuit(1, [Instruction(gates.X, (1,))])

    def test_circuit_needs_a_qubit(self):
        with pytest.raises(DimensionMismatchError):
            Circuit(0)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            BELL.num_qubits = 3

    def test_structural_equality(self):
        other = Circuit(2, [Instruction(gates.H, (0,)), Instruction(gates.CNOT, (0, 1))])
        assert BELL == other
        assert BELL != Circuit(2, [Instruction(gates.H, (0,))])


class TestApply:
    def test_bell_preparation(self):
        out = apply(BELL, zero_state(2))
        np.testing.assert_allclose(out.amplitudes, BELL_VECTOR, atol=1e-12)

    def test_empty_circuit_is_identity(self, rng, random_state):
        s = random_state(rng, 2)
        np.testing.assert_array_equal(apply(Circuit(2), s).amplitudes, s.amplitudes)

    def test_x_on_wire_one(self):
        # Qubit 0 is the most significant bit, so X on wire 1 sends |00> to |01>.
        out = apply(Circuit(2, [Instruction(gates.X, (1,))]), zero_state(2))
        np.testing.assert_allclose(out.amplitudes, basis_state(2, 1).amplitudes, atol=1e-15)

    def test_qubit_count_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            apply(BELL, zero_state(3))

    def test_norm_preserved(self, rng, random_circuit, random_state):
        for _ in range(50):
            c = random_circuit(rng)
            s = random_state(rng, c.num_qubits)
            out = apply(c, s)
            assert abs(np.sum(np.abs(out.amplitudes) ** 2) - 1.0) <= 1e-10

    def test_matches_unitary_oracle(self, rng, random_circuit, random_state):
        """Stride kernel against the brute-force matrix product."""
        for _ in range(100):
            c = random_circuit(rng)
            s = random_state(rng, c.num_qubits)
            expected = unitary_of(c) @ s.amplitudes
            np.testing.assert_allclose(apply(c, s).amplitudes, expected, atol=1e-10)

    def test_inner_product_preserved(self, rng, random_circuit, random_state):
        """Unitarity keeps overlaps fixed, so unknown states cannot be copied."""
        for _ in range(50):
            c = random_circuit(rng)
            a = random_state(rng, c.num_qubits)
            b = random_state(rng, c.num_qubits)
            before = abs(inner_product(a, b))
            after = abs(inner_product(apply(c, a), apply(c, b)))
            assert after == pytest.approx(before, abs=1e-10)


class TestApplyDensity:
    def test_bell_conjugation(self):
        rho = apply_density(BELL, to_density(zero_state(2)))
        expected = np.outer(BELL_VECTOR, BELL_VECTOR)
        np.testing.assert_allclose(rho.matrix, expected, atol=1e-12)

    def test_empty_circuit(self):
        rho = to_density(zero_state(2))
        np.testing.assert_array_equal(apply_density(Circuit(2), rho).matrix, rho.matrix)

    def test_hadamard_gives_coherent_projector(self):
        rho = apply_density(Circuit(1, [Instruction(gates.H, (0,))]), to_density(zero_state(1)))
        np.testing.assert_allclose(rho.matrix, np.full((2, 2), 0.5), atol=1e-12)

    def test_matches_pure_state_route(self, rng, random_circuit, random_state):
        for _ in range(50):
            c = random_circuit(rng)
            s = random_state(rng, c.num_qubits)
            via_density = apply_density(c, to_density(s)).matrix
            via_vector = to_density(apply(c, s)).matrix
            np.testing.assert_allclose(via_density, via_vector, atol=1e-10)

    def test_qubit_count_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            apply_density(BELL, to_density(zero_state(1)))


class TestEmbed:
    def test_single_wire_identity_embedding(self):
        np.testing.assert_array_equal(embed(gates.X, [0], 1), gates.X.matrix)

    def test_reversed_cnot_truth_table(self):
        # Control on qubit 1, target on qubit 0: |01> -> |11>, |11> -> |01>.
        u = embed(gates.CNOT, [1, 0], 2)
        for src, dst in [(0b00, 0b00), (0b01, 0b11), (0b10, 0b10), (0b11, 0b01)]:
            col = np.zeros(4)
            col[src] = 1.0
            np.testing.assert_allclose(u @ col, np.eye(4)[dst], atol=1e-15)

    def test_identity_padding_structure(self):
        np.testing.assert_allclose(
            embed(gates.H, [1], 2), kron(np.eye(2), gates.H.matrix), atol=1e-15
        )

    @pytest.mark.parametrize("label", gates.GATE_LABELS)
    def test_leading_wires_reproduce_gate(self, label):
        gate = gates.standard_gate(label)
        np.testing.assert_array_equal(
            embed(gate, list(range(gate.arity)), gate.arity), gate.matrix
        )

    def test_wire_out_of_range(self):
        with pytest.raises(WireOutOfRangeError):
            embed(gates.X, [2], 2)

    def test_duplicate_wire(self):
        with pytest.raises(DuplicateWireError):
            embed(gates.CNOT, [0, 0], 2)


class TestUnitaryOf:
    def test_empty_single_qubit(self):
        np.testing.assert_array_equal(unitary_of(Circuit(1)), np.eye(2))

    def test_bell_matrix(self):
        expected = gates.CNOT.matrix @ kron(gates.H.matrix, np.eye(2))
        np.testing.assert_allclose(unitary_of(BELL), expected, atol=1e-12)

    def test_single_instruction(self):
        np.testing.assert_array_equal(
            unitary_of(Circuit(1, [Instruction(gates.X, (0,))])), gates.X.matrix
        )

    def test_capacity(self):
        with pytest.raises(CapacityError):
            unitary_of(Circuit(13))

    def test_is_unitary(self, rng, random_circuit):
        for _ in range(25):
            assert is_unitary(unitary_of(random_circuit(rng)), 1e-10)
