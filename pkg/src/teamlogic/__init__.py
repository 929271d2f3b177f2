"""Propositional logics under team semantics: parsing, model checking,
satisfiability and validity, translations, and reductions."""

__version__ = "0.1.0"

from .errors import (
    ArityError,
    FragmentError,
    LimitExceeded,
    ParseError,
    SplitBudgetExceeded,
    TeamLogicError,
    UnknownVariable,
)
from .formula import (
    And,
    ClassNeg,
    Dep,
    Formula,
    Incl,
    Indep,
    IntDisj,
    IntImpl,
    Max,
    NegProp,
    Or,
    Prop,
    Tensor,
    to_text,
    variables,
)
from .parser import parse
from .fragment import Fragment, classify
from .team import Assignment, Team, all_teams, covers, full_team, parse_team, project, read_team
from .evaluator import EvalConfig, Evaluator, empty_team_value, evaluate, evaluate_flagged, satisfying_teams
from .transforms import (
    FreshPool,
    dep_to_indep,
    eliminate_derived,
    erase_indep,
    incl_to_biconditional,
    sat_to_val,
    val_to_sat,
)
from .solvers import (
    Verdict,
    decide,
    sat_bruteforce,
    sat_flat,
    sat_indep_singleton,
    val_bruteforce,
    val_incl_singleton,
)
from .reductions import (
    McInstance,
    QbfInstance,
    index_eq,
    index_neq,
    parse_qbf,
    qbf_eval,
    quantifier_gadget,
    tqbf_to_mc,
)

print_formula = to_text
