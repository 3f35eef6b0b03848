"""Flat list representation of XOR-sums and its canonical form.

An *lterm* is a tuple of leaves read as their XOR.  ``reduce`` turns an lterm
into a normal form: sorted by the atom order, each atom at most once, no unit.
Two terms are XOR-equivalent exactly when their normal forms are equal
tuples, which is how :func:`equiv` decides the theory.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .term import UNIT, Atom, Term, Xor, atom_key, is_atom, leaves, xor

__all__ = [
    "LTerm",
    "NormalForm",
    "term_to_lterm",
    "lterm_to_term",
    "reduce",
    "normalize",
    "is_normal_form",
    "equiv",
    "atoms_of",
    "parity_vector",
]

LTerm = tuple  # tuple[Const | Var, ...], unit allowed
NormalForm = tuple  # tuple[Atom, ...], strictly ascending, unit-free


def term_to_lterm(t: Term) -> LTerm:
    """Flatten the XOR tree into its leaves, left to right.  Never empty."""
    return tuple(leaves(t))


def lterm_to_term(lt: Sequence[Term]) -> Term:
    return xor(*lt)


def reduce(lt: Iterable[Term]) -> NormalForm:
    """Canonical form of an lterm.

    Sorts by the atom order, cancels equal neighbours in pairs and drops the
    unit.  Xor nodes inside ``lt`` are flattened first, so any iterable of
    terms is accepted.
    """
    items = []
    for t in lt:
        if isinstance(t, Xor):
            items.extend(leaves(t))
        else:
            items.append(t)
    items = [t for t in items if t != UNIT]
    items.sort(key=atom_key)
    out: list = []
    for a in items:
        if out and out[-1] == a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def normalize(t: Term) -> NormalForm:
    return reduce(term_to_lterm(t))


def is_normal_form(nf: Sequence) -> bool:
    if not all(is_atom(a) for a in nf):
        return False
    keys = [atom_key(a) for a in nf]
    return all(k1 < k2 for k1, k2 in zip(keys, keys[1:]))


def equiv(t1: Term, t2: Term) -> bool:
    """Decide ``t1 = t2`` modulo XOR: ``t1 + t2`` must normalise to 0."""
    return reduce(term_to_lterm(t1) + term_to_lterm(t2)) == ()


def atoms_of(*terms: Term) -> tuple[Atom, ...]:
    """Sorted distinct non-unit atoms occurring in ``terms``."""
    found = {leaf for t in terms for leaf in leaves(t) if is_atom(leaf)}
    return tuple(sorted(found, key=atom_key))


def parity_vector(t: Term, basis: Sequence[Atom]) -> tuple[int, ...]:
    """Occurrence count mod 2 of each basis atom among the leaves of ``t``.

    Walks the tree directly; independent of :func:`reduce`.
    """
    counts = Counter(leaves(t))
    index = set(basis)
    if len(index) != len(basis):
        raise ValueError("basis contains duplicate atoms")
    for leaf in counts:
        if leaf != UNIT and leaf not in index:
            raise ValueError(f"basis is missing atom {leaf!r}")
    return tuple(counts[a] % 2 for a in basis)
