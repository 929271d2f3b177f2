"""Acceptance criteria, one test per criterion.

Every criterion is a plain function returning an :class:`Outcome`; the
tests record a PASS/FAIL line for each (shown in pytest's terminal summary)
and then assert it.  ``python3 tests/test_acceptance.py`` runs the same
checks without pytest and prints the lines directly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

import pytest

from teamlogic import (
    ClassNeg,
    Dep,
    EvalConfig,
    Incl,
    Indep,
    IntDisj,
    IntImpl,
    Max,
    Team,
    Tensor,
    eliminate_derived,
    empty_team_value,
    evaluate,
    evaluate_flagged,
    qbf_eval,
    sat_bruteforce,
    sat_flat,
    sat_indep_singleton,
    sat_to_val,
    tqbf_to_mc,
    val_bruteforce,
    val_incl_singleton,
    val_to_sat,
    variables,
)
from teamlogic.evaluator import Evaluator
from teamlogic.formula import big_and, big_or
from teamlogic.generate import atom_pool, enumerate_formulas, literals, qbf_family, random_formula, random_qbf
from teamlogic.team import submasks
from teamlogic.transforms import ovee_to_tilde, tensor_to_tilde, impl_to_tilde

TWO = ("p", "q")
THREE = ("p", "q", "r")
LITERAL = EvalConfig(use_flatness=False)
ALL_TWO_VAR_MASKS = range(16)


@dataclass
class Outcome:
    checked: int
    failures: int
    seconds: float = 0.0
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _timed(fn):
    start = time.perf_counter()
    outcome = fn()
    outcome.seconds = time.perf_counter() - start
    return outcome


def _random_team(rng, domain, max_size):
    n = 1 << len(domain)
    mask = 0
    for a in rng.sample(range(n), rng.randint(0, min(max_size, n))):
        mask |= 1 << a
    return mask


def _extended(f, domain):
    """Evaluator over ``domain`` plus any extra symbols of ``f`` as high bits."""
    extra = tuple(p for p in variables(f) if p not in domain)
    return Evaluator(f, tuple(domain) + extra)


# -- 1: closure laws ---------------------------------------------------------------


def _good_masks(f):
    ev = Evaluator(f, TWO, LITERAL)
    return {m for m in ALL_TWO_VAR_MASKS if ev(m)}


def _flat(good):
    return all((m in good) == all((1 << a) in good for a in range(4) if m >> a & 1) for m in ALL_TWO_VAR_MASKS)


def _downward(good):
    return all(s in good for m in good for s in submasks(m))


def _union(good):
    return all(a | b in good for a in good for b in good)


def _singletons(good):
    return all((1 << a) in good for m in good for a in range(4) if m >> a & 1)


def _empty(good):
    return 0 in good


CLOSURE_LAWS = [
    ("flatness", (), _flat),
    ("downward closure", ("dep",), _downward),
    ("union closure", ("incl",), _union),
    ("singleton preservation", ("indep",), _singletons),
    ("empty team", ("indep", "incl"), _empty),
]


def criterion_closure_laws() -> Outcome:
    checked = failures = 0
    notes = []
    for name, features, law in CLOSURE_LAWS:
        family = enumerate_formulas(atom_pool(TWO, features), 3)
        bad = sum(1 for f in family if not law(_good_masks(f)))
        checked += len(family)
        failures += bad
        notes.append(f"{name} {len(family) - bad}/{len(family)}")
    return Outcome(checked, failures, note="; ".join(notes))


# -- 2: translations of the derived operators ------------------------------------

GUARD = "g"


def _argument_family():
    base = literals(TWO) + [Dep((), "p"), Indep((), ("p",), ("q",)), Incl(("p",), ("q",))]
    return enumerate_formulas(base, 2, unary=(ClassNeg,))


def _all_tuples(symbols, lo, hi):
    return [t for k in range(lo, hi + 1) for t in product(symbols, repeat=k)]


def _dep_step(atom):
    if not atom.antecedent:
        return IntDisj(*literals([atom.consequent]))
    return IntImpl(big_and([Dep((), x) for x in atom.antecedent]), Dep((), atom.consequent))


def _max_step(atom):
    return ClassNeg(big_or([Dep((), x) for x in atom.symbols]))


def _translation_pairs():
    args = _argument_family()
    pairs = list(combinations_with_replacement(args, 2))
    return {
        "tensor": [(Tensor(a, b), tensor_to_tilde(a, b)) for a, b in pairs],
        "ovee": [(IntDisj(a, b), ovee_to_tilde(a, b)) for a, b in pairs],
        "implication": [(IntImpl(a, b), impl_to_tilde(a, b, GUARD)) for a, b in product(args, args)],
        "dependence": [(d, t) for d in (Dep(xs, y) for xs in _all_tuples(TWO, 0, 2) for y in TWO)
                       for t in (_dep_step(d), eliminate_derived(d))],
        "max": [(m, t) for m in (Max(xs) for xs in _all_tuples(TWO, 1, 2))
                for t in (_max_step(m), eliminate_derived(m))],
    }


def _random_source(rng, kind):
    arg_features = ("dep", "indep", "incl", "classneg")

    def arg():
        return random_formula(rng, THREE, 3, arg_features)

    if kind == "tensor":
        return Tensor(arg(), arg())
    if kind == "ovee":
        return IntDisj(arg(), arg())
    if kind == "implication":
        return IntImpl(arg(), arg())
    if kind == "dependence":
        return Dep(tuple(rng.choice(THREE) for _ in range(rng.randint(0, 3))), rng.choice(THREE))
    return Max(tuple(rng.choice(THREE) for _ in range(rng.randint(1, 3))))


def criterion_translations() -> Outcome:
    checked = failures = 0
    notes = []
    rng = random.Random(2002)
    for kind, pairs in _translation_pairs().items():
        bad = 0
        for source, target in pairs:
            lhs, rhs = Evaluator(source, TWO), _extended(target, TWO)
            bad += sum(lhs(m) != rhs(m) for m in ALL_TWO_VAR_MASKS)
        # 300 random cases over three variables, each on four random teams
        for _ in range(300):
            source = _random_source(rng, kind)
            target = eliminate_derived(source)
            lhs, rhs = Evaluator(source, THREE), _extended(target, THREE)
            masks = [_random_team(rng, THREE, 6) for _ in range(4)]
            bad += sum(lhs(m) != rhs(m) for m in masks)
        checked += len(pairs) + 300
        failures += bad
        notes.append(f"{kind} {bad} mismatches")
    return Outcome(checked, failures, note="; ".join(notes))


# -- 3: empty team -----------------------------------------------------------------


def criterion_empty_team() -> Outcome:
    rng = random.Random(3003)
    failures = 0
    for _ in range(500):
        f = random_formula(rng, THREE, rng.randint(1, 6), ("indep", "incl", "classneg"))
        if empty_team_value(f) != evaluate(Team(variables(f), 0), f):
            failures += 1
    return Outcome(500, failures)


# -- 4: alternating model checking -------------------------------------------------


def criterion_flag_duality() -> Outcome:
    failures = 0
    family = enumerate_formulas(atom_pool(TWO, ("indep", "incl")), 3, unary=(ClassNeg,))
    for f in family:
        ev = Evaluator(f, TWO, LITERAL)
        for m in ALL_TWO_VAR_MASKS:
            x, truth = Team(TWO, m), ev(m)
            if evaluate_flagged(x, f, 1) != truth or evaluate_flagged(x, f, 0) != (not truth):
                failures += 1
    rng = random.Random(4004)
    for _ in range(500):
        f = random_formula(rng, THREE, rng.randint(1, 4), ("indep", "incl", "classneg"))
        x = Team(THREE, _random_team(rng, THREE, 6))
        truth = evaluate(x, f, LITERAL)
        if evaluate_flagged(x, f, 1) != truth or evaluate_flagged(x, f, 0) != (not truth):
            failures += 1
    return Outcome(len(family) * 16 + 500, failures, note=f"{len(family)} formulas x 16 teams + 500 sampled")


# -- 5: specialised solvers against brute force -------------------------------------

SOLVER_SUITES = {
    "sat_flat": ((), sat_flat, sat_bruteforce),
    "sat_indep_singleton": (("indep",), sat_indep_singleton, sat_bruteforce),
    "val_incl_singleton": (("incl",), val_incl_singleton, val_bruteforce),
}


def _three_variable_formula(rng, features):
    while True:
        f = random_formula(rng, THREE, 4, features)
        if len(variables(f)) == 3:
            return f


def criterion_solver_agreement(name: str) -> Outcome:
    features, fast, slow = SOLVER_SUITES[name]
    family = enumerate_formulas(atom_pool(TWO, features), 3)
    failures = sum(1 for f in family if fast(f).answer != slow(f).answer)
    rng = random.Random(5005 + len(name))
    for _ in range(500):
        f = _three_variable_formula(rng, features)
        if fast(f).answer != slow(f).answer:
            failures += 1
    return Outcome(len(family) + 500, failures, note=f"{len(family)} exhaustive + 500 random")


# -- 6: satisfiability / validity bridges --------------------------------------------


def criterion_bridges() -> Outcome:
    rng = random.Random(6006)
    failures = 0
    features = ("dep", "indep", "incl", "classneg", "derived")
    for _ in range(200):
        f = random_formula(rng, TWO[: rng.randint(1, 2)], 3, features)
        if sat_bruteforce(f).answer != val_bruteforce(sat_to_val(f)).answer:
            failures += 1
        if val_bruteforce(f).answer != sat_bruteforce(val_to_sat(f)).answer:
            failures += 1
    return Outcome(400, failures)


# -- 7: TQBF reduction --------------------------------------------------------------


def _reduction_agrees(q) -> bool:
    inst = tqbf_to_mc(q)
    expected = qbf_eval(q)
    direct = evaluate(inst.team, inst.formula)
    eliminated = eliminate_derived(inst.formula)
    core = _extended(eliminated, inst.team.domain)(inst.team.mask)
    return direct == expected and core == expected


def criterion_tqbf() -> Outcome:
    family = qbf_family(2, 2)
    rng = random.Random(7007)
    randoms = [random_qbf(rng, 4, 3) for _ in range(200)]
    failures = sum(1 for q in family + randoms if not _reduction_agrees(q))
    return Outcome(len(family) + len(randoms), failures, note=f"{len(family)} family + 200 random")


# -- 8: witness soundness ------------------------------------------------------------


def criterion_witnesses() -> Outcome:
    checked = failures = 0

    def audit(f, verdict, claim):
        nonlocal checked, failures
        if verdict.witness is None:
            return
        checked += 1
        w = verdict.witness
        if (verdict.answer is not claim or w.domain != variables(f) or len(w) == 0
                or evaluate(w, f) is not claim):
            failures += 1

    for features, fast, slow in SOLVER_SUITES.values():
        claim = slow is sat_bruteforce
        for f in enumerate_formulas(atom_pool(TWO, features), 3):
            audit(f, fast(f), claim)
            audit(f, slow(f), claim)
    rng = random.Random(8008)
    for _ in range(300):
        f = random_formula(rng, THREE[: rng.randint(1, 3)], 3, ("dep", "indep", "incl", "classneg", "derived"))
        audit(f, sat_bruteforce(f), True)
        audit(f, val_bruteforce(f), False)
    return Outcome(checked, failures, note=f"{checked} witnesses re-evaluated")


# -- pytest front end ----------------------------------------------------------------


def _line(number, title, outcome, limit=None):
    status = "PASS" if outcome.ok and (limit is None or outcome.seconds < limit) else "FAIL"
    budget = f" (limit {limit} s)" if limit is not None else ""
    note = f"; {outcome.note}" if outcome.note else ""
    return (f"[{status}] {number}. {title}: {outcome.failures} failures in {outcome.checked} checks, "
            f"{outcome.seconds:.1f} s{budget}{note}")


CRITERIA = [
    ("1", "closure laws", criterion_closure_laws, 60),
    ("2", "derived-operator translations", criterion_translations, None),
    ("3", "empty-team value", criterion_empty_team, None),
    ("4", "alternating model checking duality", criterion_flag_duality, None),
    ("5a", "sat_flat agrees with brute force", lambda: criterion_solver_agreement("sat_flat"), 120),
    ("5b", "sat_indep_singleton agrees with brute force",
     lambda: criterion_solver_agreement("sat_indep_singleton"), 120),
    ("5c", "val_incl_singleton agrees with brute force",
     lambda: criterion_solver_agreement("val_incl_singleton"), 120),
    ("6", "satisfiability/validity bridges", criterion_bridges, None),
    ("7", "TQBF reduction", criterion_tqbf, 300),
    ("8", "witness soundness", criterion_witnesses, None),
]


@pytest.mark.parametrize("number, title, fn, limit", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(number, title, fn, limit, acceptance_report):
    outcome = _timed(fn)
    line = _line(number, title, outcome, limit)
    acceptance_report(line)
    print(line)
    assert outcome.ok, line
    if limit is not None:
        assert outcome.seconds < limit, line


if __name__ == "__main__":
    for number, title, fn, limit in CRITERIA:
        print(_line(number, title, _timed(fn), limit), flush=True)
