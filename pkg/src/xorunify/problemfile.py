"""Problem files: one ``term = term`` equation per line.

``#`` starts a comment, blank lines are skipped, and all lines share one
constant-name table.
"""

from __future__ import annotations

from .term import ParseError, SymbolTable, parse_term, print_term
from .unify import Equation, ProblemSet

__all__ = ["parse_problem_file", "format_problem_file"]


def parse_problem_file(text: str, table: SymbolTable | None = None) -> ProblemSet:
    if table is None:
        table = SymbolTable()
    equations = []
    offset = 0
    for line in text.splitlines(keepends=True):
        start = offset
        offset += len(line)
        body = line.split("#", 1)[0].rstrip("\r\n")
        if not body.strip():
            continue
        parts = body.split("=")
        if len(parts) != 2:
            where = body.find("=", len(parts[0]) + 1) if len(parts) > 2 else len(body)
            raise ParseError("expected exactly one '=' per equation", text, start + where)
        sides = []
        col = 0
        for part in parts:
            try:
                sides.append(parse_term(part, table))
            except ParseError as e:
                raise ParseError(e.message, text, start + col + e.pos) from None
            col += len(part) + 1
        equations.append(Equation(*sides))
    return ProblemSet(tuple(equations))


def format_problem_file(ps: ProblemSet, table: SymbolTable | None = None,
                        header: list[str] | tuple[str, ...] = ()) -> str:
    lines = [f"# {h}" for h in header]
    for eq in ps:
        lines.append(f"{print_term(eq.lhs, table)} = {print_term(eq.rhs, table)}")
    return "".join(line + "\n" for line in lines)
