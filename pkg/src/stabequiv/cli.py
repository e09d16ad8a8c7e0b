"""``stab`` command line. Exit codes: 0 success, 1 domain error, 2 usage error."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from stabequiv import config
from stabequiv.exceptions import StabError
from stabequiv.files import format_generators, parse_generator_file
from stabequiv.ghz import ghz_stabilizer
from stabequiv.graphstate import graph_state, parse_graph, random_stabilizer
from stabequiv.lclifford import lc_equivalent
from stabequiv.oracle import verify_dense
from stabequiv.report import analyze


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stab", description="Local equivalence analysis of stabilizer states.")
    p.add_argument("--max-enum-qubits", type=_positive, help=f"enumeration cap (env {config.ENUM_ENV})")
    p.add_argument("--max-lc-qubits", type=_positive, help=f"LC search cap (env {config.LC_ENV})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="report minimal supports and criteria")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.add_argument("--max-weight", type=_positive)

    c = sub.add_parser("check-lc", help="exhaustive LC-equivalence search")
    c.add_argument("file1")
    c.add_argument("file2")
    c.add_argument("--certificate", action="store_true")

    gen = sub.add_parser("gen", help="print generators")
    kinds = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    kinds.add_parser("ghz").add_argument("n", type=_positive)
    kinds.add_parser("graph").add_argument("file")
    r = kinds.add_parser("random")
    r.add_argument("n", type=_positive)
    r.add_argument("--seed", type=int, required=True)

    o = sub.add_parser("oracle", help="dense-matrix checks")
    checks = o.add_subparsers(dest="check", required=True, parser_class=_Parser)
    checks.add_parser("verify").add_argument("file")
    return p


def _run(args, out) -> int:
    if args.command == "analyze":
        g = parse_generator_file(args.file)
        rep = analyze(g, args.max_weight, args.max_enum_qubits)
        out.write(rep.to_json() + "\n" if args.json else rep.to_text())
        return 0
    if args.command == "check-lc":
        g1, g2 = parse_generator_file(args.file1), parse_generator_file(args.file2)
        op = lc_equivalent(g1, g2, args.max_lc_qubits)
        if op is None:
            out.write(f"NOT LC-EQUIVALENT (exhaustive at n={g1.n})\n")
        else:
            out.write("LC-EQUIVALENT\n")
            if args.certificate:
                out.write(f"factors: {' '.join(op.names)}\nlayer: {op.pauli_layer}\n")
        return 0
    if args.command == "gen":
        if args.kind == "ghz":
            g = ghz_stabilizer(args.n)
        elif args.kind == "graph":
            g = graph_state(parse_graph(args.file))
        else:
            g = random_stabilizer(args.n, args.seed)
        out.write(format_generators(g))
        return 0
    g = parse_generator_file(args.file)
    results = verify_dense(g)
    for r in results:
        out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name} (max error {r.error:.2e})\n")
    return 0 if all(r.passed for r in results) else 1


def run_cli(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (StabError, OSError) as exc:
        err.write(f"stab: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_cli())
