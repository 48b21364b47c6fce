"""The fixed gate library: X, Y, Z, S, T, H, SWAP, CNOT.

Each gate is a label, an arity, and a unitary matrix. The library is
closed: circuits compose these eight; there is no user-defined gate at
this layer. Lookup is case-insensitive so the text format can stay
lowercase. For the two-qubit gates, basis labels read control-first:
CNOT maps |10> to |11>, SWAP maps |01> to |10>.
"""

import numpy as np

from .errors import ArityError, UnknownGateError
from .qstate import StateVector


class Gate:
    """An immutable named unitary acting on ``arity`` qubits."""

    __slots__ = ("label", "arity", "matrix")

    def __init__(self, label: str, arity: int, matrix):
        m = np.asarray(matrix, dtype=np.complex128).copy()
        if m.shape != (2**arity, 2**arity):
            raise ArityError(
                f"gate {label!r} with arity {arity} needs a {2**arity}x{2**arity} matrix"
            )
        m.setflags(write=False)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("Gate is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Gate)
            and self.label == other.label
            and self.arity == other.arity
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self):
        return hash((self.label, self.arity, self.matrix.tobytes()))

    def __repr__(self):
        return f"Gate({self.label!r}, arity={self.arity})"


_SQRT2_INV = 1.0 / np.sqrt(2.0)

X = Gate("X", 1, [[0, 1], [1, 0]])
Y = Gate("Y", 1, [[0, -1j], [1j, 0]])
Z = Gate("Z", 1, [[1, 0], [0, -1]])
S = Gate("S", 1, [[1, 0], [0, 1j]])
T = Gate("T", 1, [[1, 0], [0, np.exp(1j * np.pi / 4)]])
H = Gate("H", 1, np.array([[1, 1], [1, -1]]) * _SQRT2_INV)
SWAP = Gate(
    "SWAP",
    2,
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ],
)
CNOT = Gate(
    "CNOT",
    2,
    [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ],
)

LIBRARY = {g.label: g for g in (X, Y, Z, S, T, H, SWAP, CNOT)}
GATE_LABELS = tuple(LIBRARY)


def standard_gate(label: str) -> Gate:
    """Look up a library gate by name (case-insensitive)."""
    gate = LIBRARY.get(str(label).upper())
    if gate is None:
        raise UnknownGateError(
            f"unknown gate {label!r}; expected one of {', '.join(GATE_LABELS)}"
        )
    return gate


def apply_two_qubit_truth_table(gate: Gate, basis_label: str) -> StateVector:
    """Apply a two-qubit gate to a computational basis ket given as two bits."""
    if gate.arity != 2:
        raise ArityError(f"gate {gate.label!r} has arity {gate.arity}, expected 2")
    if len(basis_label) != 2 or any(ch not in "01" for ch in basis_label):
        raise ValueError(f"basis label must be two bits, got {basis_label!r}")
    vec = np.zeros(4, dtype=np.complex128)
    vec[int(basis_label, 2)] = 1.0
    return StateVector(gate.matrix @ vec)
