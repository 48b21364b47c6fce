"""Command-line front end.

Subcommands:
    run FILE        execute a .qcf circuit (sampled or exact output)
    unitary FILE    print the circuit's full unitary matrix
    grover N MARKED run the search demonstrator
    validate FILE   check that a file parses

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
2 parse/usage error, 3 capacity/runtime error. Identical invocations
(same flags, same seed) produce byte-identical stdout.
"""

import argparse
import json
import sys

from . import measure, qcf
from .algorithms import (
    GroverSpec,
    grover_optimal_iterations,
    grover_run,
    grover_success_closed_form,
)
from .circuit import Circuit, apply_density, unitary_of
from .errors import CapacityError, QsimError
from .qcf import ParseError
from .qstate import to_density, zero_state

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsim",
        description="Desk-scale quantum circuit simulator for .qcf files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a circuit file")
    run.add_argument("file", help="path to a .qcf circuit")
    run.add_argument("--shots", type=int, default=1024, help="samples to draw (default 1024)")
    run.add_argument("--seed", type=int, default=0, help="64-bit sampling seed (default 0)")
    run.add_argument(
        "--backend",
        choices=("statevector", "density"),
        default="statevector",
        help="statevector samples shots; density prints the exact distribution "
        "(default statevector)",
    )
    run.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default="text",
        help="output format (default text)",
    )
    run.set_defaults(func=_cmd_run)

    unitary = sub.add_parser("unitary", help="print the circuit unitary")
    unitary.add_argument("file", help="path to a .qcf circuit")
    unitary.set_defaults(func=_cmd_unitary)

    grover = sub.add_parser("grover", help="run the search demonstrator")
    grover.add_argument("qubits", type=int, help="number of qubits")
    grover.add_argument("marked", type=int, help="marked basis index")
    grover.add_argument(
        "--iterations", type=int, default=None, help="loop count (default: optimal)"
    )
    grover.set_defaults(func=_cmd_grover)

    validate = sub.add_parser("validate", help="check that a file parses")
    validate.add_argument("file", help="path to a .qcf circuit")
    validate.set_defaults(func=_cmd_validate)

    return parser


def _load_circuit(path: str) -> Circuit:
    with open(path, encoding="utf-8") as handle:
        return qcf.parse(handle.read())


def _format_density(circuit: Circuit, fmt: str) -> str:
    rho = apply_density(circuit, to_density(zero_state(circuit.num_qubits)))
    dist = measure.probabilities_density(rho)
    labels = dist.labels()
    probs = dist.probabilities
    if fmt == "json":
        payload = {
            "num_qubits": dist.num_qubits,
            "probabilities": {label: float(p) for label, p in zip(labels, probs)},
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return "".join(f"{label},{float(p)!r}\n" for label, p in zip(labels, probs))
    return "".join(f"{label} {p:.9f}\n" for label, p in zip(labels, probs))


def _format_histogram(hist: measure.ShotHistogram, fmt: str) -> str:
    if fmt == "json":
        return hist.to_json()
    if fmt == "csv":
        return hist.to_csv()
    width = max(len(str(c)) for c in hist.counts.values())
    return "".join(
        f"{label} {hist.counts[label]:>{width}}\n" for label in sorted(hist.counts)
    )


def _cmd_run(args, out, err) -> int:
    if args.shots < 1:
        err.write("error: --shots must be at least 1\n")
        return EXIT_USAGE
    if not 0 <= args.seed <= measure.MAX_SEED:
        err.write("error: --seed must be an unsigned 64-bit integer\n")
        return EXIT_USAGE
    circuit = _load_circuit(args.file)
    if args.backend == "density":
        out.write(_format_density(circuit, args.format))
    else:
        hist = measure.sample(circuit, args.shots, args.seed)
        out.write(_format_histogram(hist, args.format))
    return EXIT_OK


def _entry(value: float) -> float:
    # Round to the printed precision first so values inside half an ulp of
    # zero (including IEEE -0.0) cannot surface as "-0.000000".
    return round(value, 6) + 0.0


def _cmd_unitary(args, out, err) -> int:
    u = unitary_of(_load_circuit(args.file))
    for row in u:
        out.write(
            " ".join(f"{_entry(e.real):.6f}{_entry(e.imag):+.6f}i" for e in row) + "\n"
        )
    return EXIT_OK


def _cmd_grover(args, out, err) -> int:
    iterations = args.iterations
    if iterations is None:
        if args.qubits < 1:
            err.write("error: qubits must be at least 1\n")
            return EXIT_USAGE
        iterations = grover_optimal_iterations(args.qubits)
    try:
        spec = GroverSpec(num_qubits=args.qubits, marked=args.marked, iterations=iterations)
    except QsimError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    result = grover_run(spec)
    out.write(f"qubits {spec.num_qubits}\n")
    out.write(f"marked {spec.marked}\n")
    out.write(f"iterations {spec.iterations}\n")
    out.write(f"success_probability {result.success_probability:.9f}\n")
    out.write(
        f"closed_form {grover_success_closed_form(spec.num_qubits, spec.iterations):.9f}\n"
    )
    return EXIT_OK


def _cmd_validate(args, out, err) -> int:
    _load_circuit(args.file)
    out.write("OK\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, sys.stdout, sys.stderr)
    except ParseError as exc:
        sys.stderr.write(f"{getattr(args, 'file', 'input')}: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAPACITY
    except QsimError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
