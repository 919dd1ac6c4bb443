"""Command-line front end: circuit files in, JSON reports out.

Circuit file grammar (1-based qubit indices, `#` starts a comment):

    qubits N
    H q | S q | X q | Y q | Z q | T q | TDG q | CNOT a b

Exit codes: 0 ok, 2 parse/config error, 3 backend or cap mismatch,
4 promise violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .circuits import GATE_ARITY, Circuit, Gate
from .distinguisher import bell_pair_ensemble, distinguish, magic_product_ensemble
from .estimator import (
    EstimatorParams,
    default_epsilon,
    estimate_entropy,
    required_sample_count,
)
from .statevector import (
    bell_difference_sample_bits,
    characteristic_distribution,
    entanglement_entropy_oracle,
    simulate_circuit,
)
from .symplectic import Cut, to_pauli_string
from .tableau import simulate_clifford, weyl_group_from_tableau
from .weyl import DEFAULT_DENSE_CAP, CapExceededError, weyl_group_oracle

__all__ = ["CircuitParseError", "format_circuit", "main", "parse_circuit"]


class CircuitParseError(ValueError):
    """Malformed circuit file or run configuration (exit code 2)."""


class BackendError(RuntimeError):
    """Requested backend cannot run the given circuit (exit code 3)."""


def parse_circuit(text: str) -> Circuit:
    """Parse the circuit file grammar above into a Circuit."""
    n: int | None = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0].lower() != "qubits":
                raise CircuitParseError(f"line {lineno}: expected 'qubits N' header")
            try:
                n = int(tokens[1])
            except ValueError:
                raise CircuitParseError(f"line {lineno}: bad qubit count") from None
            if n < 1:
                raise CircuitParseError(f"line {lineno}: qubit count must be >= 1")
            continue
        name = tokens[0].upper()
        arity = GATE_ARITY.get(name)
        if arity is None:
            raise CircuitParseError(f"line {lineno}: unknown gate {tokens[0]!r}")
        if len(tokens) - 1 != arity:
            raise CircuitParseError(
                f"line {lineno}: {name} takes {arity} qubit index(es)"
            )
        try:
            qubits = tuple(int(tok) for tok in tokens[1:])
        except ValueError:
            raise CircuitParseError(f"line {lineno}: bad qubit index") from None
        for q in qubits:
            if not 1 <= q <= n:
                raise CircuitParseError(f"line {lineno}: qubit {q} outside 1..{n}")
        try:
            gates.append(Gate(name, qubits))
        except ValueError as exc:
            raise CircuitParseError(f"line {lineno}: {exc}") from None
    if n is None:
        raise CircuitParseError("missing 'qubits N' header")
    return Circuit(n, tuple(gates))


def format_circuit(c: Circuit) -> str:
    lines = [f"qubits {c.n}"]
    lines += [" ".join((g.name, *map(str, g.qubits))) for g in c.gates]
    return "\n".join(lines) + "\n"


def _load_circuit(path: str) -> Circuit:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CircuitParseError(f"cannot read {path}: {exc}") from None
    return parse_circuit(text)


def _parse_cut(text: str, n: int) -> Cut:
    try:
        indices = frozenset(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise CircuitParseError(f"bad cut value {text!r}") from None
    try:
        return Cut(n, indices)
    except ValueError as exc:
        raise CircuitParseError(str(exc)) from None


def _resolve_k(args, circuit: Circuit) -> int:
    if args.k is not None:
        return args.k
    if args.t is not None:
        return 2 * args.t
    return 2 * circuit.t  # stabilizer dimension is at least n - 2t


def _emit(record: dict, output: str | None) -> None:
    text = json.dumps(record, indent=2) + "\n"
    sys.stdout.write(text)
    if output:
        with open(output, "w") as fh:
            fh.write(text)


def _cmd_estimate(args) -> int:
    circuit = _load_circuit(args.circuit)
    cut = _parse_cut(args.cut, circuit.n)
    k = _resolve_k(args, circuit)
    backend = args.backend
    if backend == "auto":
        backend = "tableau" if circuit.is_clifford else "dense"

    if backend == "tableau":
        if not circuit.is_clifford:
            raise BackendError("tableau backend cannot run non-Clifford circuits")
        group = weyl_group_from_tableau(simulate_clifford(circuit))
        report = estimate_entropy(group=group, cut=cut)
        epsilon = delta = None
    else:
        if circuit.n > args.cap:
            raise CapExceededError(f"n={circuit.n} exceeds dense cap {args.cap}")
        epsilon = args.epsilon
        if epsilon is None:
            epsilon = default_epsilon(circuit.n) if circuit.n >= 2 else 0.25
        delta = args.delta
        params = EstimatorParams(epsilon=epsilon, delta=delta, k=k, seed=args.seed)
        psi = simulate_circuit(circuit, cap=args.cap)
        dist = characteristic_distribution(psi, cap=args.cap)
        rng = np.random.default_rng(args.seed)
        count = required_sample_count(circuit.n, epsilon, delta)
        bits = bell_difference_sample_bits(dist, rng, count)
        report = estimate_entropy(samples=bits, cut=cut, params=params)

    record = report.to_dict()
    record.update(
        epsilon=epsilon,
        delta=delta,
        k=int(k),
        seed=int(args.seed),
        backend=backend,
    )
    _emit(record, args.output)
    if report.promise_violated:
        print(
            f"promise violated: dim S = {report.dim_s} < n - k = {circuit.n - k}",
            file=sys.stderr,
        )
        return 4
    return 0


def _cmd_oracle(args) -> int:
    circuit = _load_circuit(args.circuit)
    cut = _parse_cut(args.cut, circuit.n)
    psi = simulate_circuit(circuit, cap=args.cap)
    entropy = entanglement_entropy_oracle(psi, cut, cap=args.cap)
    _emit(
        {
            "entropy": float(entropy),
            "n": circuit.n,
            "cut_A": [int(q) for q in cut.a_sorted],
            "backend": "dense",
        },
        args.output,
    )
    return 0


def _cmd_weyl(args) -> int:
    circuit = _load_circuit(args.circuit)
    backend = args.backend
    if backend == "auto":
        backend = "tableau" if circuit.is_clifford else "dense"
    if backend == "tableau":
        if not circuit.is_clifford:
            raise BackendError("tableau backend cannot run non-Clifford circuits")
        group = weyl_group_from_tableau(simulate_clifford(circuit))
    else:
        psi = simulate_circuit(circuit, cap=args.cap)
        group = weyl_group_oracle(psi, cap=args.cap)
    _emit(
        {
            "dim": group.dim,
            "n": circuit.n,
            "basis": [to_pauli_string(v) for v in group.subspace.basis],
            "backend": backend,
        },
        args.output,
    )
    return 0


def _cmd_distinguish(args) -> int:
    n = args.n
    high = bell_pair_ensemble(n)
    low = magic_product_ensemble(n, t=args.t_prime)
    cut = Cut(n, frozenset(range(1, n // 2 + 1)))
    result = distinguish(
        high,
        low,
        args.t_prime,
        cut,
        args.delta,
        trials=args.trials,
        seed=args.seed,
        epsilon=args.epsilon,
        cap=args.cap,
    )
    record = result.to_dict()
    record.update(
        f_level=high.entropy_level,
        g_level=low.entropy_level,
        t_prime=int(args.t_prime),
        n=int(n),
        delta=float(args.delta),
        seed=int(args.seed),
    )
    _emit(record, args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabent",
        description="Entanglement entropy bounds from stabilizer structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="entropy bounds for a circuit file")
    est.add_argument("circuit", help="circuit file path")
    est.add_argument("--cut", required=True, help="comma-separated A-side qubits")
    est.add_argument("--epsilon", type=float, default=None)
    est.add_argument("--delta", type=float, default=0.125)
    kt = est.add_mutually_exclusive_group()
    kt.add_argument("--k", type=int, default=None, help="stabilizer deficit promise")
    kt.add_argument("--t", type=int, default=None, help="non-Clifford budget (k=2t)")
    est.add_argument("--seed", type=int, default=0)
    est.add_argument(
        "--backend", choices=("auto", "tableau", "dense"), default="auto"
    )
    est.add_argument("--cap", type=int, default=DEFAULT_DENSE_CAP)
    est.add_argument("--output", default=None)
    est.set_defaults(func=_cmd_estimate)

    orc = sub.add_parser("oracle", help="exact dense entropy at the cut")
    orc.add_argument("circuit")
    orc.add_argument("--cut", required=True)
    orc.add_argument("--cap", type=int, default=DEFAULT_DENSE_CAP)
    orc.add_argument("--output", default=None)
    orc.set_defaults(func=_cmd_oracle)

    wey = sub.add_parser("weyl", help="dump the unsigned stabilizer group")
    wey.add_argument("circuit")
    wey.add_argument(
        "--backend", choices=("auto", "tableau", "dense"), default="auto"
    )
    wey.add_argument("--cap", type=int, default=DEFAULT_DENSE_CAP)
    wey.add_argument("--output", default=None)
    wey.set_defaults(func=_cmd_weyl)

    dis = sub.add_parser("distinguish", help="run the ensemble distinguisher")
    dis.add_argument("--n", type=int, default=6)
    dis.add_argument("--t-prime", dest="t_prime", type=int, default=1)
    dis.add_argument("--trials", type=int, default=100)
    dis.add_argument("--delta", type=float, default=1.0 / 3.0)
    dis.add_argument("--epsilon", type=float, default=None)
    dis.add_argument("--seed", type=int, default=0)
    dis.add_argument("--cap", type=int, default=DEFAULT_DENSE_CAP)
    dis.add_argument("--output", default=None)
    dis.set_defaults(func=_cmd_distinguish)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BackendError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CircuitParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
