"""Satisfiability, validity and model-checking procedures.

Brute force sweeps every nonempty team over ``variables(f)`` in ascending
bitmask order and is the ground truth for the specialised procedures.
Satisfiability and validity are taken over teams whose domain is exactly
``variables(f)``; by locality nothing is lost.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .errors import FragmentError, LimitExceeded
from .evaluator import EvalConfig, Evaluator, evaluate
from .formula import And, Formula, NegProp, Or, Prop, variables
from .fragment import classify
from .team import ALL_TEAMS_LIMIT, Team
from .transforms import erase_indep, incl_to_biconditional

log = logging.getLogger(__name__)

FLAT_LIMIT = 24

SAT, VAL, MC = "sat", "val", "mc"

BRUTE_FORCE = "brute-force"
FLAT = "flat-assignment"
SINGLETON_ERASURE = "singleton-erasure"
SINGLETON_BICONDITIONAL = "singleton-biconditional"
MODEL_CHECK = "model-check"


@dataclass(frozen=True)
class Verdict:
    answer: bool
    #: satisfying team for SAT, counterexample team for VAL
    witness: Team | None = None
    method: str = BRUTE_FORCE


def _team_space(f: Formula, limit: int) -> tuple[tuple[str, ...], int]:
    domain = variables(f)
    if limit > ALL_TEAMS_LIMIT:
        log.warning("brute-force limit raised to %d variables; sweeps may be slow", limit)
    if len(domain) > limit:
        raise LimitExceeded("brute-force variables", len(domain), limit)
    return domain, 1 << (1 << len(domain))


def sat_bruteforce(f: Formula, limit: int = ALL_TEAMS_LIMIT, config: EvalConfig | None = None) -> Verdict:
    domain, n_teams = _team_space(f, limit)
    ev = Evaluator(f, domain, config)
    for mask in range(1, n_teams):
        if ev(mask):
            return Verdict(True, Team(domain, mask), BRUTE_FORCE)
    return Verdict(False, None, BRUTE_FORCE)


def val_bruteforce(f: Formula, limit: int = ALL_TEAMS_LIMIT, config: EvalConfig | None = None) -> Verdict:
    domain, n_teams = _team_space(f, limit)
    ev = Evaluator(f, domain, config)
    for mask in range(1, n_teams):
        if not ev(mask):
            return Verdict(False, Team(domain, mask), BRUTE_FORCE)
    return Verdict(True, None, BRUTE_FORCE)


def classical_value(f: Formula, s: dict[str, int]) -> bool:
    """Ordinary truth of a PL formula at one assignment."""
    if isinstance(f, Prop):
        return s[f.name] == 1
    if isinstance(f, NegProp):
        return s[f.name] == 0
    if isinstance(f, And):
        return classical_value(f.left, s) and classical_value(f.right, s)
    if isinstance(f, Or):
        return classical_value(f.left, s) or classical_value(f.right, s)
    raise FragmentError(f"{type(f).__name__} is not a PL connective")


def _first_model(f: Formula, domain: Sequence[str], limit: int, want: bool) -> int | None:
    """Smallest assignment index at which ``f`` has classical value ``want``."""
    if len(domain) > limit:
        raise LimitExceeded("assignment variables", len(domain), limit)
    for a in range(1 << len(domain)):
        s = {p: (a >> j) & 1 for j, p in enumerate(domain)}
        if classical_value(f, s) == want:
            return a
    return None


def _require_pl(f: Formula, what: str, **allowed: bool) -> None:
    frag = classify(f)
    if not frag.within(**allowed):
        raise FragmentError(f"{what} does not apply to {frag.label}")


def sat_flat(f: Formula, limit: int = FLAT_LIMIT, domain: Sequence[str] | None = None) -> Verdict:
    """Satisfiability of a PL formula via a single satisfying assignment."""
    _require_pl(f, "sat_flat")
    domain = tuple(variables(f) if domain is None else domain)
    a = _first_model(f, domain, limit, True)
    if a is None:
        return Verdict(False, None, FLAT)
    return Verdict(True, Team(domain, 1 << a), FLAT)


def sat_indep_singleton(f: Formula, limit: int = FLAT_LIMIT) -> Verdict:
    """Satisfiability of PL[⊥c]: some singleton team suffices, and there the
    independence atoms are trivially true."""
    _require_pl(f, "sat_indep_singleton", indep=True)
    v = sat_flat(erase_indep(f), limit, domain=variables(f))
    return Verdict(v.answer, v.witness, SINGLETON_ERASURE)


def val_incl_singleton(f: Formula, limit: int = FLAT_LIMIT) -> Verdict:
    """Validity of PL[⊆]: by union closure it is enough that every singleton
    satisfies the formula, where inclusion atoms are biconditionals."""
    _require_pl(f, "val_incl_singleton", incl=True)
    domain = variables(f)
    a = _first_model(incl_to_biconditional(f), domain, limit, False)
    if a is None:
        return Verdict(True, None, SINGLETON_BICONDITIONAL)
    return Verdict(False, Team(domain, 1 << a), SINGLETON_BICONDITIONAL)


def decide(
    f: Formula,
    problem: str,
    team: Team | None = None,
    limit: int = ALL_TEAMS_LIMIT,
    config: EvalConfig | None = None,
) -> Verdict:
    """Route to the cheapest sound procedure for the formula's fragment."""
    if problem == MC:
        if team is None:
            raise ValueError("model checking needs a team")
        return Verdict(evaluate(team, f, config), None, MODEL_CHECK)
    if team is not None:
        raise ValueError(f"a team is only accepted for model checking, not {problem!r}")
    label = classify(f).label
    if problem == SAT:
        if label == "PL":
            return sat_flat(f)
        if label == "PL[⊥c]":
            return sat_indep_singleton(f)
        return sat_bruteforce(f, limit, config)
    if problem == VAL:
        if label == "PL[⊆]":
            return val_incl_singleton(f)
        return val_bruteforce(f, limit, config)
    raise ValueError(f"unknown problem {problem!r}")
