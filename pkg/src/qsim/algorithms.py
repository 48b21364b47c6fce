"""Demonstrator circuits: Bell-pair preparation and Grover search.

Grover here is the textbook amplitude-amplification loop at desk scale:
start from the uniform superposition H^n |0...0>, then repeat (diffusion
* oracle). The oracle flips the sign of the single marked amplitude; the
diffusion operator is H^n (2|0><0| - I) H^n, applied through the state
kernel rather than as an explicit matrix. With theta = arcsin(2**(-n/2)),
the success probability after k iterations is sin^2((2k+1) * theta),
the closed form every run is checked against.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import capacity
from .circuit import Circuit, Instruction, apply
from .errors import DimensionMismatchError, QsimError
from .gates import CNOT, H
from .qstate import StateVector, zero_state


def bell_circuit() -> Circuit:
    """Two-qubit circuit preparing (|00> + |11>)/sqrt(2): H on 0, CNOT 0 -> 1."""
    return Circuit(2, [Instruction(H, (0,)), Instruction(CNOT, (0, 1))])


@dataclass(frozen=True)
class GroverSpec:
    """Search problem: n qubits, one marked basis index, k iterations."""

    num_qubits: int
    marked: int
    iterations: int

    def __post_init__(self):
        if self.num_qubits < 2:
            raise QsimError(f"Grover needs at least 2 qubits, got {self.num_qubits}")
        if not 0 <= self.marked < (1 << self.num_qubits):
            raise DimensionMismatchError(
                f"marked index {self.marked} out of range for {self.num_qubits} qubits"
            )
        if self.iterations < 0:
            raise QsimError(f"iterations must be non-negative, got {self.iterations}")


class GroverResult(NamedTuple):
    final_state: StateVector
    success_probability: float


def _hadamard_layer(num_qubits: int) -> Circuit:
    return Circuit(num_qubits, [Instruction(H, (w,)) for w in range(num_qubits)])


def _oracle(state: StateVector, marked: int) -> StateVector:
    amps = state.amplitudes.copy()
    amps[marked] = -amps[marked]
    return StateVector(amps)


def _reflect_about_zero(state: StateVector) -> StateVector:
    # 2|0><0| - I: keep amplitude 0, negate the rest.
    amps = state.amplitudes.copy()
    amps[1:] = -amps[1:]
    return StateVector(amps)


def _diffusion(state: StateVector, h_layer: Circuit) -> StateVector:
    return apply(h_layer, _reflect_about_zero(apply(h_layer, state)))


def grover_success_trajectory(spec: GroverSpec) -> list[float]:
    """Success probability after 0, 1, ..., spec.iterations iterations."""
    capacity.check("grover", spec.num_qubits)
    h_layer = _hadamard_layer(spec.num_qubits)
    state = apply(h_layer, zero_state(spec.num_qubits))
    trajectory = [float(abs(state.amplitudes[spec.marked]) ** 2)]
    for _ in range(spec.iterations):
        state = _diffusion(_oracle(state, spec.marked), h_layer)
        trajectory.append(float(abs(state.amplitudes[spec.marked]) ** 2))
    return trajectory


def grover_run(spec: GroverSpec) -> GroverResult:
    """Run the full loop and report the marked-state hit probability."""
    capacity.check("grover", spec.num_qubits)
    h_layer = _hadamard_layer(spec.num_qubits)
    state = apply(h_layer, zero_state(spec.num_qubits))
    for _ in range(spec.iterations):
        state = _diffusion(_oracle(state, spec.marked), h_layer)
    return GroverResult(
        final_state=state,
        success_probability=float(abs(state.amplitudes[spec.marked]) ** 2),
    )


def grover_success_closed_form(num_qubits: int, iterations: int) -> float:
    """Analytic success probability sin^2((2k+1) * arcsin(2**(-n/2)))."""
    theta = math.asin(2.0 ** (-num_qubits / 2.0))
    return math.sin((2 * iterations + 1) * theta) ** 2


def grover_optimal_iterations(num_qubits: int) -> int:
    """Iteration count bringing the state closest to the marked item."""
    if num_qubits < 1:
        raise QsimError(f"need at least 1 qubit, got {num_qubits}")
    theta = math.asin(2.0 ** (-num_qubits / 2.0))
    return max(0, round(math.pi / (4.0 * theta) - 0.5))
