"""Unification modulo the exclusive-or theory.

Terms are built from constants, variables and XOR (``+``).  The package
decides equivalence through a canonical sorted, duplicate-free form and
solves systems of equations, returning an idempotent most general unifier
or None.  A Gaussian-elimination oracle over GF(2) cross-checks the solver.
"""

from .errors import InvariantError
from .normal_form import (
    atoms_of,
    equiv,
    is_normal_form,
    lterm_to_term,
    normalize,
    parity_vector,
    reduce,
    term_to_lterm,
)
from .oracle import (
    GenParams,
    LinearSystem,
    generate_problem,
    gf2_solve,
    sample_unifiers,
    to_linear_system,
)
from .problemfile import format_problem_file, parse_problem_file
from .substitution import (
    Substitution,
    apply_to_nf,
    apply_to_term,
    compose,
    idempotent_by_application,
    idempotent_by_disjointness,
    is_idempotent,
)
from .term import (
    UNIT,
    Const,
    ParseError,
    SymbolTable,
    Var,
    Xor,
    atom_compare,
    parse_term,
    print_term,
    xor,
)
from .unify import (
    Equation,
    ProblemSet,
    SolverState,
    check_mgu,
    rule_trivial,
    rule_var_subst,
    solve,
    solves_problems,
    xor_unification,
)

__version__ = "0.1.0"
