"""Independent GF(2) check for XOR unification problems.

Each equation's XOR-sum is a vector over GF(2) indexed by atoms.  Splitting
it into a variable part ``A`` and a constant part ``B``, a ground unifier
assigns to each variable a set of constants (a row of ``X``) with
``A X = B``.  Gaussian elimination decides that system and parametrises
all ground solutions.  Ground solvability is equivalent to solvability,
since setting the free variables of any unifier to 0 gives a ground one.

Bit vectors are Python ints; bit ``i`` is index ``i`` of the relevant list.
Nothing here calls the rule-based solver.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .normal_form import NormalForm, atoms_of
from .substitution import Substitution
from .term import UNIT, Const, Term, Var, Xor, atom_key
from .unify import Equation, ProblemSet

__all__ = [
    "LinearSystem",
    "GF2Solution",
    "to_linear_system",
    "gf2_solve",
    "sample_unifiers",
    "GenParams",
    "generate_problem",
    "random_term",
]


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class LinearSystem:
    var_index: tuple[str, ...]
    const_index: tuple[int, ...]
    coeff: tuple[int, ...]  # one bitmask over var_index per equation
    rhs: tuple[int, ...]  # one bitmask over const_index per equation

    def coeff_matrix(self) -> list[list[int]]:
        n = len(self.var_index)
        return [[(row >> j) & 1 for j in range(n)] for row in self.coeff]

    def rhs_matrix(self) -> list[list[int]]:
        n = len(self.const_index)
        return [[(row >> j) & 1 for j in range(n)] for row in self.rhs]

    def decode_row(self, r: int) -> NormalForm:
        atoms = [Const(self.const_index[j]) for j in _bits(self.rhs[r])]
        atoms += [Var(self.var_index[j]) for j in _bits(self.coeff[r])]
        return tuple(sorted(atoms, key=atom_key))


def to_linear_system(ps: ProblemSet) -> LinearSystem:
    """Count atom parities of each equation directly from its two sides."""
    sides = [t for eq in ps for t in (eq.lhs, eq.rhs)]
    basis = atoms_of(*sides)
    var_index = tuple(a.name for a in basis if isinstance(a, Var))
    const_index = tuple(a.id for a in basis if isinstance(a, Const))
    vpos = {name: j for j, name in enumerate(var_index)}
    cpos = {cid: j for j, cid in enumerate(const_index)}
    coeff, rhs = [], []
    for eq in ps:
        c = r = 0
        for side in (eq.lhs, eq.rhs):
            stack = [side]
            while stack:
                node = stack.pop()
                if isinstance(node, Xor):
                    stack += (node.left, node.right)
                elif isinstance(node, Var):
                    c ^= 1 << vpos[node.name]
                elif node.id != 0:
                    r ^= 1 << cpos[node.id]
        coeff.append(c)
        rhs.append(r)
    return LinearSystem(var_index, const_index, tuple(coeff), tuple(rhs))


@dataclass(frozen=True)
class GF2Solution:
    """Ground solutions ``particular + span(nullspace)``.

    ``particular[j]`` is a bitmask over constants for variable ``j``;
    each nullspace vector is a bitmask over variables.
    """

    system: LinearSystem
    particular: tuple[int, ...]
    nullspace: tuple[int, ...]

    def substitution(self, values: tuple[int, ...] | None = None) -> Substitution:
        values = self.particular if values is None else values
        sys = self.system
        return Substitution({
            name: tuple(Const(sys.const_index[k]) for k in _bits(values[j]))
            for j, name in enumerate(sys.var_index)
        })


def gf2_solve(sys: LinearSystem) -> Optional[GF2Solution]:
    """Row-reduce ``[coeff | rhs]``; None when some row reads ``0 = nonzero``."""
    rows = [[c, r] for c, r in zip(sys.coeff, sys.rhs)]
    n = len(sys.var_index)
    pivots: list[int] = []  # pivot column of row k
    k = 0
    for col in range(n):
        bit = 1 << col
        p = next((i for i in range(k, len(rows)) if rows[i][0] & bit), None)
        if p is None:
            continue
        rows[k], rows[p] = rows[p], rows[k]
        for i in range(len(rows)):
            if i != k and rows[i][0] & bit:
                rows[i][0] ^= rows[k][0]
                rows[i][1] ^= rows[k][1]
        pivots.append(col)
        k += 1
    if any(r for _, r in rows[k:]):
        return None

    particular = [0] * n
    for row, col in zip(rows, pivots):
        particular[col] = row[1]
    pivot_set = set(pivots)
    nullspace = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, col in zip(rows, pivots):
            if row[0] >> free & 1:
                vec |= 1 << col
        nullspace.append(vec)
    return GF2Solution(sys, tuple(particular), tuple(nullspace))


def sample_unifiers(sys: LinearSystem, count: int, seed: int) -> list[Substitution]:
    """``count`` ground unifiers: particular solution plus random nullspace mixes.

    The mix is drawn independently for each constant coordinate.
    """
    sol = gf2_solve(sys)
    if sol is None:
        raise ValueError("system is unsolvable; nothing to sample")
    rng = random.Random(seed)
    m = len(sys.const_index)
    out = []
    for _ in range(count):
        values = list(sol.particular)
        for k in range(m):
            for vec in sol.nullspace:
                if rng.getrandbits(1):
                    for j in _bits(vec):
                        values[j] ^= 1 << k
        out.append(sol.substitution(tuple(values)))
    return out


@dataclass(frozen=True)
class GenParams:
    max_equations: int = 5
    max_vars: int = 6
    max_consts: int = 6
    max_atoms_per_eq: int = 8
    seed: int = 0

    def __post_init__(self):
        if self.max_equations < 0:
            raise ValueError("max_equations must be >= 0")
        for name in ("max_vars", "max_consts", "max_atoms_per_eq"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be >= 0")


def var_name(i: int) -> str:
    return f"X{i}"


def _random_tree(rng: random.Random, leaves: list[Term]) -> Term:
    if len(leaves) == 1:
        return leaves[0]
    cut = rng.randint(1, len(leaves) - 1)
    return Xor(_random_tree(rng, leaves[:cut]), _random_tree(rng, leaves[cut:]))


def generate_problem(params: GenParams) -> ProblemSet:
    """Seeded random problem within the given bounds.

    Each equation draws between 1 and ``max_atoms_per_eq`` leaves from the
    variable pool, the constant pool and the unit, shuffles them, splits them
    into two sides and gives each side a random tree shape.  Each equation
    is ground with probability 1/20, which keeps the solvable share close to
    one half at the default bounds.
    """
    rng = random.Random(params.seed)
    n_eq = rng.randint(1, params.max_equations) if params.max_equations else 0
    n_vars = rng.randint((params.max_vars + 1) // 2, params.max_vars)
    n_consts = rng.randint(1, params.max_consts)
    equations = []
    for _ in range(n_eq):
        size = rng.randint(1, params.max_atoms_per_eq)
        ground = rng.random() < 0.05
        pool: list[Term] = [Const(i) for i in range(1, n_consts + 1)]
        if not ground:
            pool += [Var(var_name(i)) for i in range(n_vars)]
        leaves = [UNIT if rng.random() < 0.05 else rng.choice(pool) for _ in range(size)]
        rng.shuffle(leaves)
        if len(leaves) == 1:
            lhs, rhs = leaves[0], UNIT
            if rng.getrandbits(1):
                lhs, rhs = rhs, lhs
        else:
            cut = rng.randint(1, len(leaves) - 1)
            lhs, rhs = _random_tree(rng, leaves[:cut]), _random_tree(rng, leaves[cut:])
        equations.append(Equation(lhs, rhs))
    return ProblemSet(tuple(equations))


def random_term(rng: random.Random, max_depth: int = 8, max_consts: int = 6,
                max_vars: int = 6, unit_weight: float = 0.1) -> Term:
    """Random term of depth at most ``max_depth``.

    Leaves are the unit, ``Const(1..max_consts)`` or ``X0..X{max_vars-1}``.
    """
    if max_depth <= 0 or rng.random() < 0.3:
        r = rng.random()
        if r < unit_weight:
            return UNIT
        if r < unit_weight + (1 - unit_weight) / 2:
            return Const(rng.randint(1, max_consts))
        return Var(var_name(rng.randrange(max_vars)))
    return Xor(
        random_term(rng, max_depth - 1, max_consts, max_vars, unit_weight),
        random_term(rng, max_depth - 1, max_consts, max_vars, unit_weight),
    )
