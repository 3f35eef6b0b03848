"""Command-line front end.

Exit codes: 0 solvable / equivalent / ok, 1 unsolvable / not equivalent,
2 bad input, 3 internal check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import InvariantError
from .normal_form import equiv, lterm_to_term, normalize
from .oracle import GenParams, generate_problem, gf2_solve, to_linear_system
from .problemfile import format_problem_file, parse_problem_file
from .substitution import idempotent_by_disjointness, is_idempotent
from .term import ParseError, SymbolTable, parse_term, print_term
from .unify import solve, solves_problems

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}") from None


def cmd_solve(args, out) -> int:
    table = SymbolTable()
    text = _read(args.path)
    try:
        ps = parse_problem_file(text, table)
    except ParseError as e:
        raise InputError(f"{args.path}:{e}") from None

    result = solve(ps)
    sub = result.substitution

    if args.check and sub is not None:
        if not solves_problems(sub, ps):
            raise InvariantError("result does not solve the problem")
        if not (is_idempotent(sub) and idempotent_by_disjointness(sub)):
            raise InvariantError("result is not idempotent")
    if args.oracle:
        oracle_ok = gf2_solve(to_linear_system(ps)) is not None
        if oracle_ok != result.solvable:
            raise InvariantError(
                f"oracle disagrees: solver says {result.solvable}, GF(2) says {oracle_ok}"
            )

    if args.json:
        payload = {
            "status": "solution" if sub is not None else "unsatisfiable",
            "substitution": None if sub is None else {
                name: print_term(lterm_to_term(nf), table) for name, nf in sub.items()
            },
            "steps": result.steps,
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif sub is not None:
        out.write("SOLUTION\n" + sub.format(table) + "\n")
    else:
        out.write("UNSATISFIABLE\n")
    return EXIT_OK if sub is not None else EXIT_NO


def _parse_arg(text: str, table: SymbolTable, label: str):
    try:
        return parse_term(text, table)
    except ParseError as e:
        raise InputError(f"{label}:{e}") from None


def cmd_normalize(args, out) -> int:
    table = SymbolTable()
    t = _parse_arg(args.term, table, "term")
    out.write(print_term(lterm_to_term(normalize(t)), table) + "\n")
    return EXIT_OK


def cmd_equiv(args, out) -> int:
    table = SymbolTable()
    t1 = _parse_arg(args.left, table, "left")
    t2 = _parse_arg(args.right, table, "right")
    if equiv(t1, t2):
        out.write("EQUIV\n")
        return EXIT_OK
    out.write("NOT-EQUIV\n")
    return EXIT_NO


def cmd_gen(args, out) -> int:
    try:
        params = GenParams(args.max_equations, args.max_vars, args.max_consts,
                           args.max_atoms, args.seed)
    except ValueError as e:
        raise InputError(str(e)) from None
    ps = generate_problem(params)
    header = [
        f"generated: seed={params.seed} max_equations={params.max_equations} "
        f"max_vars={params.max_vars} max_consts={params.max_consts} "
        f"max_atoms={params.max_atoms_per_eq}",
    ]
    text = format_problem_file(ps, SymbolTable(), header)
    if args.output is None or args.output == "-":
        out.write(text)
        print(f"seed {params.seed}", file=sys.stderr)
    else:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as e:
            raise InputError(f"{args.output}: {e}") from None
        out.write(f"seed {params.seed}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xorunify", description="Unification modulo exclusive-or.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a problem file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--check", action="store_true", help="verify the unifier after solving")
    p.add_argument("--oracle", action="store_true", help="cross-check solvability over GF(2)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("normalize", help="print the canonical form of a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equiv", help="decide equivalence of two terms")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("gen", help="write a random problem file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-equations", type=int, default=5)
    p.add_argument("--max-vars", type=int, default=6)
    p.add_argument("--max-consts", type=int, default=6)
    p.add_argument("--max-atoms", type=int, default=8)
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:  # noqa: BLE001 - keep the exit-code contract total
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
