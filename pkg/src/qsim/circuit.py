"""Circuit representation and execution.

A circuit is a qubit count plus an ordered list of instructions, each a
library gate bound to distinct wires (for CNOT, wires[0] is the control).
Execution on state vectors uses an in-place tensor kernel that touches
only the wires a gate acts on: O(2**n) per gate, no 2**n x 2**n matrix.
:func:`embed` and :func:`unitary_of` build those full matrices explicitly
and exist as the brute-force oracle the kernel is tested against.

Density matrices evolve by unitary conjugation rho -> U rho U†, computed
as two kernel passes (U rho, then U (U rho)†).
"""

import numpy as np

from . import capacity
from .errors import (
    ArityError,
    DimensionMismatchError,
    DuplicateWireError,
    WireOutOfRangeError,
)
from .gates import Gate
from .qstate import DensityMatrix, StateVector


class Instruction:
    """One gate application: the gate plus the wires it acts on, in order."""

    __slots__ = ("gate", "wires")

    def __init__(self, gate: Gate, wires):
        ws = tuple(int(w) for w in wires)
        if len(ws) != gate.arity:
            raise ArityError(
                f"gate {gate.label!r} expects {gate.arity} wires, got {len(ws)}"
            )
        if len(set(ws)) != len(ws):
            raise DuplicateWireError(f"wires must be distinct, got {ws}")
        if any(w < 0 for w in ws):
            raise WireOutOfRangeError(f"wires must be non-negative, got {ws}")
        object.__setattr__(self, "gate", gate)
        object.__setattr__(self, "wires", ws)

    def __setattr__(self, name, value):
        raise AttributeError("Instruction is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Instruction)
            and self.gate == other.gate
            and self.wires == other.wires
        )

    def __hash__(self):
        return hash((self.gate, self.wires))

    def __repr__(self):
        return f"Instruction({self.gate.label}, wires={self.wires})"


class Circuit:
    """An ordered gate sequence on ``num_qubits`` wires."""

    __slots__ = ("num_qubits", "instructions")

    def __init__(self, num_qubits: int, instructions=()):
        n = int(num_qubits)
        if n < 1:
            raise DimensionMismatchError(f"circuit needs at least 1 qubit, got {n}")
        instrs = tuple(instructions)
        for instr in instrs:
            if max(instr.wires) >= n:
                raise WireOutOfRangeError(
                    f"instruction {instr!r} touches wires beyond qubit {n - 1}"
                )
        object.__setattr__(self, "num_qubits", n)
        object.__setattr__(self, "instructions", instrs)

    def __setattr__(self, name, value):
        raise AttributeError("Circuit is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Circuit)
            and self.num_qubits == other.num_qubits
            and self.instructions == other.instructions
        )

    def __hash__(self):
        return hash((self.num_qubits, self.instructions))

    def __repr__(self):
        return f"Circuit(num_qubits={self.num_qubits}, instructions={len(self.instructions)})"


def _kernel(amps: np.ndarray, gate: Gate, wires, num_qubits: int) -> np.ndarray:
    """Apply a gate to the wire axes of a state tensor.

    ``amps`` may carry trailing batch axes (used for density matrices);
    the first ``num_qubits`` axes of the reshaped tensor are the qubits,
    qubit 0 first. Single-qubit gates on a plain state take a flat
    three-axis path: with qubit 0 as the most significant bit, wire w
    splits the amplitudes into (2**w, 2, rest) blocks.
    """
    if gate.arity == 1 and amps.ndim == 1:
        blocks = amps.reshape(1 << wires[0], 2, -1)
        g = gate.matrix
        out = np.empty_like(blocks)
        out[:, 0, :] = g[0, 0] * blocks[:, 0, :] + g[0, 1] * blocks[:, 1, :]
        out[:, 1, :] = g[1, 0] * blocks[:, 0, :] + g[1, 1] * blocks[:, 1, :]
        return out.reshape(-1)
    m = gate.arity
    batch = amps.shape[1:] if amps.ndim > 1 else ()
    psi = amps.reshape((2,) * num_qubits + batch)
    gt = gate.matrix.reshape((2,) * (2 * m))
    # Contract the gate's input axes with the wire axes, then restore order.
    psi = np.tensordot(gt, psi, axes=(tuple(range(m, 2 * m)), tuple(wires)))
    psi = np.moveaxis(psi, tuple(range(m)), tuple(wires))
    return psi.reshape((-1,) + batch)


def apply(circuit: Circuit, state: StateVector) -> StateVector:
    """Run the circuit on a state vector, instruction by instruction."""
    if state.num_qubits != circuit.num_qubits:
        raise DimensionMismatchError(
            f"state has {state.num_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    capacity.check("statevector", circuit.num_qubits)
    amps = state.amplitudes
    for instr in circuit.instructions:
        amps = _kernel(amps, instr.gate, instr.wires, circuit.num_qubits)
    return StateVector(amps)


def apply_density(circuit: Circuit, rho: DensityMatrix) -> DensityMatrix:
    """Conjugate a density matrix by the circuit: rho -> U rho U†."""
    if rho.num_qubits != circuit.num_qubits:
        raise DimensionMismatchError(
            f"density matrix has {rho.num_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    capacity.check("density", circuit.num_qubits)
    n = circuit.num_qubits
    mat = rho.matrix
    for instr in circuit.instructions:
        half = _kernel(mat, instr.gate, instr.wires, n)  # U rho
        mat = _kernel(half.conj().T, instr.gate, instr.wires, n)  # U (U rho)† = U rho U†
    return DensityMatrix(mat, check_psd=False)


def embed(gate: Gate, wires, num_qubits: int) -> np.ndarray:
    """Full 2**n x 2**n unitary acting as ``gate`` on ``wires``, identity elsewhere.

    Built entry by entry from the basis-state action, deliberately
    independent of the tensor kernel so the two can check each other.
    """
    ws = tuple(int(w) for w in wires)
    if len(ws) != gate.arity:
        raise ArityError(f"gate {gate.label!r} expects {gate.arity} wires, got {len(ws)}")
    if len(set(ws)) != len(ws):
        raise DuplicateWireError(f"wires must be distinct, got {ws}")
    if any(w < 0 or w >= num_qubits for w in ws):
        raise WireOutOfRangeError(f"wires {ws} out of range for {num_qubits} qubits")
    capacity.check("unitary", num_qubits)
    m = gate.arity
    dim = 1 << num_qubits
    # Bit position of wire w in the basis index (qubit 0 is the MSB).
    shifts = [num_qubits - 1 - w for w in ws]
    full = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        sub_in = 0
        for j, shift in enumerate(shifts):
            sub_in |= ((col >> shift) & 1) << (m - 1 - j)
        cleared = col
        for shift in shifts:
            cleared &= ~(1 << shift)
        for sub_out in range(1 << m):
            amp = gate.matrix[sub_out, sub_in]
            if amp == 0.0:
                continue
            row = cleared
            for j, shift in enumerate(shifts):
                row |= ((sub_out >> (m - 1 - j)) & 1) << shift
            full[row, col] += amp
    return full


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Product of the embedded instruction unitaries (first instruction rightmost)."""
    capacity.check("unitary", circuit.num_qubits)
    u = np.eye(1 << circuit.num_qubits, dtype=np.complex128)
    for instr in circuit.instructions:
        u = embed(instr.gate, instr.wires, circuit.num_qubits) @ u
    return u
