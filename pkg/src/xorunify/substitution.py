"""Substitutions over XOR-sums.

A substitution maps variable names to normal forms.  Applying it to a normal
form splices each bound variable's value in place of the variable and
re-reduces, so application is a GF(2)-linear map on XOR-sums.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import InvariantError
from .normal_form import NormalForm, lterm_to_term, reduce, term_to_lterm
from .term import Const, SymbolTable, Term, Var, Xor, print_term

__all__ = [
    "Substitution",
    "apply_to_nf",
    "apply_to_term",
    "compose",
    "is_idempotent",
    "idempotent_by_application",
    "idempotent_by_disjointness",
]


class Substitution(Mapping):
    """Immutable finite map ``variable name -> NormalForm``.

    Values may be given as any iterable of terms; they are reduced on the way
    in.  Bindings ``X -> X`` are identity bindings and are dropped, so two
    substitutions that act the same on every variable compare equal.
    """

    __slots__ = ("_map", "_hash")

    def __init__(self, bindings: Mapping[str, Iterable[Term]] | None = None):
        m = {}
        for name, value in (bindings or {}).items():
            if isinstance(name, Var):
                name = name.name
            if isinstance(value, (Const, Var, Xor)):
                value = (value,)
            nf = reduce(value)
            if nf != (Var(name),):
                m[name] = nf
        self._map = dict(sorted(m.items()))
        self._hash = None

    @classmethod
    def from_terms(cls, bindings: Mapping[str, Term]) -> "Substitution":
        return cls({k: term_to_lterm(v) for k, v in bindings.items()})

    def __getitem__(self, name: str) -> NormalForm:
        return self._map[name]

    def __iter__(self):
        return iter(self._map)

    def __len__(self):
        return len(self._map)

    def __eq__(self, other):
        if isinstance(other, Substitution):
            return self._map == other._map
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {v!r}" for k, v in self._map.items())
        return f"Substitution({{{inner}}})"

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._map)

    @property
    def range_vars(self) -> frozenset[str]:
        return frozenset(a.name for nf in self._map.values() for a in nf if isinstance(a, Var))

    def image(self, name: str) -> NormalForm:
        """Value of the variable under this substitution, ``(Var(name),)`` if unbound."""
        return self._map.get(name, (Var(name),))

    def format(self, table: SymbolTable | None = None) -> str:
        """``Var := term`` lines sorted by variable name; ``{}`` for the identity."""
        if not self._map:
            return "{}"
        return "\n".join(
            f"{name} := {print_term(lterm_to_term(nf), table)}" for name, nf in self._map.items()
        )


def apply_to_nf(s: Mapping[str, NormalForm], nf: Sequence[Term]) -> NormalForm:
    spliced: list = []
    for a in nf:
        if isinstance(a, Var) and a.name in s:
            spliced.extend(s[a.name])
        else:
            spliced.append(a)
    return reduce(spliced)


def apply_to_term(s: Substitution, t: Term) -> Term:
    return lterm_to_term(apply_to_nf(s, reduce(term_to_lterm(t))))


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """The substitution that applies ``inner`` first, then ``outer``."""
    out = {name: apply_to_nf(outer, nf) for name, nf in inner.items()}
    for name, nf in outer.items():
        out.setdefault(name, nf)
    return Substitution(out)


def idempotent_by_application(s: Substitution) -> bool:
    """``s(s(v)) == s(v)`` for every bound variable ``v``."""
    return all(apply_to_nf(s, nf) == nf for nf in s.values())


def idempotent_by_disjointness(s: Substitution) -> bool:
    """No bound variable occurs in any binding's value (solved form)."""
    return not (s.domain & s.range_vars)


def is_idempotent(s: Substitution) -> bool:
    """``s`` composed with itself is ``s``.

    Disjointness of domain and range implies this.  Modulo XOR the converse
    fails: ``{X: Y+Z, Y: X+Z, Z: X+Y}`` is idempotent yet every value
    mentions bound variables.
    """
    result = idempotent_by_application(s)
    if idempotent_by_disjointness(s) and not result:
        raise InvariantError(f"solved-form substitution is not idempotent: {s!r}")
    return result
