"""Term syntax for the exclusive-or theory.

A term is a constant, a variable, or the XOR of two terms.  ``Const(0)`` is
the unit.  Concrete syntax uses Prolog-style capitalisation::

    term := atom | term '+' term | '(' term ')'
    atom := '0' | lowercase-ident | Uppercase-ident

Lowercase identifiers are constants, uppercase identifiers are variables and
``+`` is XOR (left-associative).  Constant names are mapped to numeric ids by
a :class:`SymbolTable`, which acts as the parse session.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

__all__ = [
    "Const",
    "Var",
    "Xor",
    "Term",
    "Atom",
    "UNIT",
    "ParseError",
    "SymbolTable",
    "is_atom",
    "atom_key",
    "atom_compare",
    "xor",
    "leaves",
    "variables",
    "parse_term",
    "print_term",
]


@dataclass(frozen=True)
class Const:
    id: int

    def __post_init__(self):
        if not isinstance(self.id, int) or isinstance(self.id, bool):
            raise TypeError(f"constant id must be an int, got {self.id!r}")
        if not 0 <= self.id < 2**64:
            raise ValueError(f"constant id out of range: {self.id}")

    def __repr__(self):
        return f"Const({self.id})"


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("variable name must be nonempty text")

    def __repr__(self):
        return f"Var({self.name!r})"


@dataclass(frozen=True)
class Xor:
    left: "Term"
    right: "Term"

    def __repr__(self):
        return f"Xor({self.left!r}, {self.right!r})"


Term = Union[Const, Var, Xor]
Atom = Union[Const, Var]

UNIT = Const(0)


def is_atom(t: Term) -> bool:
    """True for constants other than the unit, and for variables."""
    return isinstance(t, Var) or (isinstance(t, Const) and t.id != 0)


def atom_key(a: Atom) -> tuple:
    # Constants before variables; constants by id, variables by name.
    if isinstance(a, Const):
        return (0, a.id, "")
    if isinstance(a, Var):
        return (1, 0, a.name)
    raise TypeError(f"not an atom: {a!r}")


def atom_compare(a: Atom, b: Atom) -> int:
    """Three-way comparison under the atom order: -1, 0 or 1."""
    ka, kb = atom_key(a), atom_key(b)
    return (ka > kb) - (ka < kb)


def xor(*terms: Term) -> Term:
    """Left-associated XOR of ``terms``; the unit when called with none."""
    if not terms:
        return UNIT
    out = terms[0]
    for t in terms[1:]:
        out = Xor(out, t)
    return out


def leaves(t: Term) -> Iterator[Term]:
    """Non-Xor leaves of ``t`` in left-to-right order (unit included)."""
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Xor):
            stack.append(node.right)
            stack.append(node.left)
        else:
            yield node


def variables(t: Term) -> set[str]:
    return {leaf.name for leaf in leaves(t) if isinstance(leaf, Var)}


class ParseError(ValueError):
    """Malformed term text.  ``pos`` is a 0-based offset into the input."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{self.line}:{self.column}: {message}")
        self.message = message


class SymbolTable:
    """Bijection between constant names and constant ids for one session.

    New names get ids in first-occurrence order starting at 1.  Ids that
    were never named print as ``c<id>``; that name is registered on first
    use so printing and re-parsing with the same table round-trips.
    """

    def __init__(self, names=None):
        self._ids: dict[str, int] = {}
        self._names: dict[int, str] = {}
        for name in names or ():
            self.id_of(name)

    def __len__(self):
        return len(self._ids)

    def __contains__(self, name):
        return name in self._ids

    def items(self):
        return self._ids.items()

    def _next_id(self) -> int:
        return max(self._names, default=0) + 1

    def id_of(self, name: str) -> int:
        if not _LOWER_RE.fullmatch(name):
            raise ValueError(f"not a constant name: {name!r}")
        if name not in self._ids:
            self._register(name, self._next_id())
        return self._ids[name]

    def name_of(self, const_id: int) -> str:
        if const_id == 0:
            return "0"
        if const_id not in self._names:
            name = f"c{const_id}"
            if name in self._ids:
                raise ValueError(f"default name {name!r} already bound to another id")
            self._register(name, const_id)
        return self._names[const_id]

    def _register(self, name: str, const_id: int) -> None:
        self._ids[name] = const_id
        self._names[const_id] = name


_LOWER_RE = re.compile(r"[a-z][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<plus>\+)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<num>[0-9][A-Za-z0-9_]*)
  | (?P<const>[a-z][A-Za-z0-9_]*)
  | (?P<var>[A-Z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind == "num" and m.group() != "0":
            raise ParseError(f"numeric literal {m.group()!r}: only 0 is allowed", text, pos)
        if kind != "ws":
            yield kind, m.group(), pos
        pos = m.end()
    yield "eof", "", len(text)


class _Parser:
    def __init__(self, text: str, table: SymbolTable):
        self.text = text
        self.table = table
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok):
        raise ParseError(message, self.text, tok[2])

    def parse(self) -> Term:
        t = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            self.error(f"unexpected {tok[1]!r}", tok)
        return t

    def expr(self) -> Term:
        t = self.primary()
        while self.peek()[0] == "plus":
            self.advance()
            t = Xor(t, self.primary())
        return t

    def primary(self) -> Term:
        tok = self.advance()
        kind, value, _ = tok
        if kind == "num":
            return UNIT
        if kind == "const":
            return Const(self.table.id_of(value))
        if kind == "var":
            return Var(value)
        if kind == "lparen":
            t = self.expr()
            close = self.advance()
            if close[0] != "rparen":
                self.error("expected ')'", close)
            return t
        if kind == "eof":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {value!r}", tok)


def parse_term(text: str, table: SymbolTable | None = None) -> Term:
    """Parse ``text`` into a Term, registering constant names in ``table``."""
    if table is None:
        table = SymbolTable()
    return _Parser(text, table).parse()


def print_term(t: Term, table: SymbolTable | None = None) -> str:
    """Render ``t`` so that ``parse_term`` with the same table gives it back.

    Only right operands that are themselves XORs get parentheses, which is
    exactly what left-associative parsing needs.
    """
    if table is None:
        table = SymbolTable()
    if isinstance(t, Const):
        return table.name_of(t.id)
    if isinstance(t, Var):
        return t.name
    left = print_term(t.left, table)
    right = print_term(t.right, table)
    if isinstance(t.right, Xor):
        right = f"({right})"
    return f"{left} + {right}"
