import numpy as np
import pytest

from qsim import circuit, gates, qstate


def make_random_circuit(rng, num_qubits=None, max_qubits=3, max_instructions=20):
    """Random circuit over the full gate library (arity-permitting)."""
    n = num_qubits if num_qubits is not None else int(rng.integers(1, max_qubits + 1))
    usable = [g for g in gates.LIBRARY.values() if g.arity <= n]
    instructions = []
    for _ in range(int(rng.integers(0, max_instructions + 1))):
        gate = usable[int(rng.integers(len(usable)))]
        wires = tuple(int(w) for w in rng.choice(n, size=gate.arity, replace=False))
        instructions.append(circuit.Instruction(gate, wires))
    return circuit.Circuit(n, instructions)


def make_random_state(rng, num_qubits):
    """Haar-ish random pure state from normalized Gaussian amplitudes."""
    dim = 1 << num_qubits
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return qstate.normalize(amps)


def make_random_hermitian(rng, dim):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2.0


@pytest.fixture
def random_circuit():
    return make_random_circuit


@pytest.fixture
def random_state():
    return make_random_state


@pytest.fixture
def random_hermitian():
    return make_random_hermitian


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
