"""The qcf circuit file format: a tiny line-oriented text language.

Grammar (UTF-8, LF newlines; CRLF accepted on input and normalized away):

    file        := header line*
    header      := "qubits" INT          -- INT >= 1, must be the first line
    line        := comment | instruction | blank
    comment     := "#" ...               -- full-line only
    instruction := GATE INT{arity}       -- one per line
    GATE        := x | y | z | s | t | h | swap | cnot   -- case-insensitive

cnot wires read control then target. Canonical output (``serialize``) uses
lowercase gate labels, single spaces, one instruction per line, and a
trailing newline; parse(serialize(c)) == c for every valid circuit.

Errors carry a 1-based line and column pointing at the offending token,
and the first error wins.
"""

import enum
import re

from .circuit import Circuit, Instruction
from .errors import QsimError
from .gates import LIBRARY, standard_gate


class ParseErrorKind(enum.Enum):
    UNKNOWN_GATE = "UnknownGate"
    BAD_ARITY = "BadArity"
    WIRE_OUT_OF_RANGE = "WireOutOfRange"
    BAD_INTEGER = "BadInteger"
    MISSING_HEADER = "MissingHeader"
    TRAILING_GARBAGE = "TrailingGarbage"


class ParseError(QsimError):
    """A rejection with a precise source location."""

    def __init__(self, line: int, column: int, kind: ParseErrorKind, message: str):
        super().__init__(f"line {line}, column {column}: {kind.value}: {message}")
        self.line = line
        self.column = column
        self.kind = kind
        self.message = message


_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"\d+\Z")

_ARITY = {label.lower(): gate.arity for label, gate in LIBRARY.items()}


def _tokens(line: str) -> list[tuple[str, int]]:
    """(text, 1-based column) for each whitespace-separated token."""
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _parse_int(text: str, line_no: int, column: int, what: str) -> int:
    if not _INT.match(text):
        raise ParseError(
            line_no, column, ParseErrorKind.BAD_INTEGER, f"{what} must be an unsigned integer, got {text!r}"
        )
    return int(text)


def parse(source: str) -> Circuit:
    """Parse qcf text into a circuit."""
    lines = source.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline produces no extra line
    lines = [line[:-1] if line.endswith("\r") else line for line in lines]

    header_tokens = _tokens(lines[0]) if lines else []
    if not header_tokens or header_tokens[0][0].lower() != "qubits":
        found_col = header_tokens[0][1] if header_tokens else 1
        raise ParseError(
            1, found_col, ParseErrorKind.MISSING_HEADER, "file must start with 'qubits N'"
        )
    if len(header_tokens) < 2:
        raise ParseError(
            1, header_tokens[0][1], ParseErrorKind.BAD_INTEGER, "header needs a qubit count"
        )
    count_text, count_col = header_tokens[1]
    num_qubits = _parse_int(count_text, 1, count_col, "qubit count")
    if num_qubits < 1:
        raise ParseError(
            1, count_col, ParseErrorKind.BAD_INTEGER, "qubit count must be at least 1"
        )
    if len(header_tokens) > 2:
        text, col = header_tokens[2]
        raise ParseError(
            1, col, ParseErrorKind.TRAILING_GARBAGE, f"unexpected token {text!r} after header"
        )

    instructions = []
    for line_no, raw in enumerate(lines[1:], start=2):
        stripped = raw.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(raw)
        label, label_col = toks[0]
        arity = _ARITY.get(label.lower())
        if arity is None:
            raise ParseError(
                line_no, label_col, ParseErrorKind.UNKNOWN_GATE, f"unknown gate {label!r}"
            )
        if len(toks) - 1 < arity:
            raise ParseError(
                line_no,
                label_col,
                ParseErrorKind.BAD_ARITY,
                f"gate {label!r} expects {arity} wire(s), got {len(toks) - 1}",
            )
        if len(toks) - 1 > arity:
            text, col = toks[1 + arity]
            raise ParseError(
                line_no, col, ParseErrorKind.TRAILING_GARBAGE, f"unexpected token {text!r}"
            )
        wires = []
        for text, col in toks[1 : 1 + arity]:
            wire = _parse_int(text, line_no, col, "wire index")
            if wire >= num_qubits:
                raise ParseError(
                    line_no,
                    col,
                    ParseErrorKind.WIRE_OUT_OF_RANGE,
                    f"wire {wire} out of range for {num_qubits} qubit(s)",
                )
            if wire in wires:
                raise ParseError(
                    line_no,
                    col,
                    ParseErrorKind.WIRE_OUT_OF_RANGE,
                    f"wire {wire} listed twice in one instruction",
                )
            wires.append(wire)
        instructions.append(Instruction(standard_gate(label), tuple(wires)))

    return Circuit(num_qubits, instructions)


def serialize(circuit: Circuit) -> str:
    """Canonical text form of a circuit."""
    out = [f"qubits {circuit.num_qubits}"]
    for instr in circuit.instructions:
        out.append(" ".join([instr.gate.label.lower(), *map(str, instr.wires)]))
    return "\n".join(out) + "\n"
