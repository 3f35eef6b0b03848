import random

import pytest
from hypothesis import strategies as st

from xorunify import UNIT, Const, SymbolTable, Var, Xor, parse_term, xor
from xorunify.term import leaves
from xorunify.substitution import Substitution

VAR_NAMES = ["W", "X", "Y", "Z"]

atoms = st.one_of(
    st.just(UNIT),
    st.builds(Const, st.integers(1, 5)),
    st.builds(Var, st.sampled_from(VAR_NAMES)),
)
terms = st.recursive(atoms, lambda inner: st.builds(Xor, inner, inner), max_leaves=16)
lterms = st.lists(atoms, max_size=12).map(tuple)
substitutions = st.dictionaries(st.sampled_from(VAR_NAMES), lterms, max_size=4).map(Substitution)


def rearranged(rng, t, perturb):
    """A term equal to ``t`` modulo XOR (or off by one atom when ``perturb``)."""
    items = list(leaves(t))
    for _ in range(rng.randint(0, 3)):
        extra = rng.choice(items + [Const(7), Var("Q")])
        items += [extra, extra]
    if rng.random() < 0.3:
        items.append(UNIT)
    if perturb:
        items.append(rng.choice([Const(1), Var("X0"), Const(8)]))
    rng.shuffle(items)
    return xor(*items) if rng.random() < 0.5 else _tree(rng, items)


def _tree(rng, items):
    if len(items) == 1:
        return items[0]
    cut = rng.randint(1, len(items) - 1)
    return Xor(_tree(rng, items[:cut]), _tree(rng, items[cut:]))


@pytest.fixture
def table():
    return SymbolTable()


@pytest.fixture
def p(table):
    """Parse term text in a shared session: a, b, c, ... get ids 1, 2, 3, ..."""
    for name in "abcdefgh":
        table.id_of(name)
    return lambda text: parse_term(text, table)


@pytest.fixture
def rng():
    return random.Random(20241017)


_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
