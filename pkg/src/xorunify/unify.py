"""XOR unification by Trivial and Variable Substitution.

Every equation ``lhs = rhs`` is stored as the single normal form of
``lhs + rhs``, meaning that sum must become 0.  The solver keeps unsolved
sums in ``gamma`` and solved bindings in ``lam`` and applies:

* Trivial: delete a sum that is already 0.
* Variable Substitution: pick a sum ``x + S``, bind ``x := S`` and apply
  that binding to everything else.

When neither applies, an empty ``gamma`` means ``lam`` is an idempotent most
general unifier; anything left over is a nonzero ground sum and the problem
has no solution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InvariantError
from .normal_form import NormalForm, reduce, term_to_lterm
from .substitution import Substitution, apply_to_nf
from .term import Term, Var, variables

__all__ = [
    "Equation",
    "ProblemSet",
    "SolverState",
    "SolveResult",
    "rule_trivial",
    "rule_var_subst",
    "solve",
    "xor_unification",
    "solves_problems",
    "check_mgu",
]


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term
    nf: NormalForm = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nf", reduce(term_to_lterm(self.lhs) + term_to_lterm(self.rhs)))

    def variables(self) -> set[str]:
        return variables(self.lhs) | variables(self.rhs)


@dataclass(frozen=True)
class ProblemSet:
    equations: tuple[Equation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))

    @classmethod
    def of(cls, *pairs: tuple[Term, Term]) -> "ProblemSet":
        return cls(tuple(Equation(l, r) for l, r in pairs))

    def __iter__(self):
        return iter(self.equations)

    def __len__(self):
        return len(self.equations)

    def variables(self) -> list[str]:
        """Sorted names of all variables written in the problem."""
        names: set[str] = set()
        for eq in self.equations:
            names |= eq.variables()
        return sorted(names)


def _nf_vars(nf: NormalForm) -> list[str]:
    return [a.name for a in nf if isinstance(a, Var)]


@dataclass(frozen=True)
class SolverState:
    gamma: tuple[NormalForm, ...]
    lam: tuple[tuple[str, NormalForm], ...] = ()
    steps: int = 0

    @classmethod
    def initial(cls, ps: ProblemSet) -> "SolverState":
        return cls(tuple(eq.nf for eq in ps))

    def gamma_variables(self) -> set[str]:
        return {name for nf in self.gamma for name in _nf_vars(nf)}

    def measure(self) -> int:
        return len(self.gamma) + len(self.gamma_variables())

    def check(self) -> None:
        bound = [name for name, _ in self.lam]
        if len(set(bound)) != len(bound):
            raise InvariantError(f"variable solved twice: {bound}")
        mentioned = self.gamma_variables()
        for _, nf in self.lam:
            mentioned.update(_nf_vars(nf))
        clash = mentioned.intersection(bound)
        if clash:
            raise InvariantError(f"solved variables still occur: {sorted(clash)}")


def rule_trivial(state: SolverState, rng: random.Random | None = None) -> Optional[SolverState]:
    """Delete one sum that is already 0, or return None if there is none."""
    hits = [i for i, nf in enumerate(state.gamma) if not nf]
    if not hits:
        return None
    i = rng.choice(hits) if rng else hits[0]
    gamma = state.gamma[:i] + state.gamma[i + 1:]
    return SolverState(gamma, state.lam, state.steps + 1)


def rule_var_subst(state: SolverState, rng: random.Random | None = None) -> Optional[SolverState]:
    """Solve one sum for a variable and eliminate that variable everywhere.

    Deterministically this takes the first sum with a variable and isolates
    its least variable; with ``rng`` both choices are random.
    """
    hits = [i for i, nf in enumerate(state.gamma) if _nf_vars(nf)]
    if not hits:
        return None
    i = rng.choice(hits) if rng else hits[0]
    chosen = state.gamma[i]
    var_atoms = [a for a in chosen if isinstance(a, Var)]
    x = rng.choice(var_atoms) if rng else var_atoms[0]
    rest = tuple(a for a in chosen if a != x)
    if x in rest:
        raise InvariantError(f"occurs check failed for {x.name} in {chosen!r}")
    sigma = {x.name: rest}
    gamma = tuple(apply_to_nf(sigma, nf) for j, nf in enumerate(state.gamma) if j != i)
    lam = tuple((name, apply_to_nf(sigma, nf)) for name, nf in state.lam) + ((x.name, rest),)
    return SolverState(gamma, lam, state.steps + 1)


@dataclass(frozen=True)
class SolveResult:
    substitution: Optional[Substitution]
    steps: int
    step_bound: int
    residue: tuple[NormalForm, ...] = ()

    @property
    def solvable(self) -> bool:
        return self.substitution is not None


def solve(ps: ProblemSet, rng: random.Random | None = None) -> SolveResult:
    """Run the rules to quiescence and report the outcome with step counts.

    Trivial has priority over Variable Substitution unless ``rng`` is given,
    in which case the rule order is shuffled at every step.
    """
    state = SolverState.initial(ps)
    bound = len(state.gamma) + len(state.gamma_variables())
    rules = [rule_trivial, rule_var_subst]
    while True:
        if rng:
            rng.shuffle(rules)
        before = state.measure()
        for rule in rules:
            nxt = rule(state, rng)
            if nxt is not None:
                break
        else:
            break
        if nxt.measure() >= before:
            raise InvariantError(f"termination measure did not decrease: {before} -> {nxt.measure()}")
        if nxt.steps > bound:
            raise InvariantError(f"step bound {bound} exceeded")
        nxt.check()
        state = nxt

    if state.gamma:
        if any(_nf_vars(nf) or not nf for nf in state.gamma):
            raise InvariantError(f"solver stopped with reducible sums: {state.gamma!r}")
        return SolveResult(None, state.steps, bound, state.gamma)
    sub = Substitution(dict(state.lam))
    if len(sub) != len(state.lam) or sub.domain & sub.range_vars:
        raise InvariantError(f"result is not in solved form: {sub!r}")
    return SolveResult(sub, state.steps, bound)


def xor_unification(ps: ProblemSet) -> Optional[Substitution]:
    """Idempotent most general unifier of ``ps``, or None if it has no unifier."""
    return solve(ps).substitution


def solves_problems(s: Substitution, ps: ProblemSet) -> bool:
    return all(not apply_to_nf(s, eq.nf) for eq in ps)


def check_mgu(s: Substitution, ps: ProblemSet, candidates: Iterable[Substitution]) -> bool:
    """Check that every candidate unifier ``theta`` factors through ``s``.

    That is ``theta(s(v)) == theta(v)`` for each variable ``v`` of ``ps``.
    Raises ValueError if a candidate does not solve ``ps``.
    """
    names = ps.variables()
    for theta in candidates:
        if not solves_problems(theta, ps):
            raise ValueError(f"candidate is not a unifier: {theta!r}")
        for name in names:
            if apply_to_nf(theta, s.image(name)) != theta.image(name):
                return False
    return True
