"""Qubit-count limits for the different execution paths.

Defaults keep every operation desk-scale: state vectors up to 24 qubits
(16M amplitudes), density matrices up to 10, explicit circuit unitaries up
to 12, and the search demonstrator up to 20. Setting the environment
variable ``QSIM_MAX_QUBITS`` to an integer overrides all four caps at once.
"""

import os

from .errors import CapacityError

ENV_OVERRIDE = "QSIM_MAX_QUBITS"

STATEVECTOR_QUBITS = 24
DENSITY_QUBITS = 10
UNITARY_QUBITS = 12
GROVER_QUBITS = 20

_DEFAULTS = {
    "statevector": STATEVECTOR_QUBITS,
    "density": DENSITY_QUBITS,
    "unitary": UNITARY_QUBITS,
    "grover": GROVER_QUBITS,
}


def limit(kind: str) -> int:
    """Current qubit cap for ``kind``, honoring the environment override."""
    raw = os.environ.get(ENV_OVERRIDE)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise CapacityError(
                f"{ENV_OVERRIDE} must be an integer, got {raw!r}"
            ) from None
    return _DEFAULTS[kind]


def check(kind: str, num_qubits: int) -> None:
    """Raise :class:`CapacityError` when ``num_qubits`` exceeds the cap."""
    cap = limit(kind)
    if num_qubits > cap:
        raise CapacityError(
            f"{kind} path supports at most {cap} qubits, got {num_qubits}"
        )
