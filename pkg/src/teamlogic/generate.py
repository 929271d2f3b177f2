"""Exhaustive and random generators of formulas, teams and QBFs.

Depth is the height of the syntax tree with atoms at depth 1.  Exhaustive
families combine subformulas as unordered pairs (``a & b`` but not also
``b & a``), since ∧, ∨, ⩣ and ⊗ are symmetric in their arguments.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Iterable, Sequence

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
)
from .reductions import EXISTS, FORALL, QbfInstance
from .team import Team

FEATURES = frozenset({"dep", "indep", "incl", "classneg", "derived"})


def literals(symbols: Sequence[str]) -> list[Formula]:
    out: list[Formula] = []
    for p in symbols:
        out += [Prop(p), NegProp(p)]
    return out


def atom_pool(symbols: Sequence[str], features: Iterable[str] = ()) -> list[Formula]:
    """Small representative atoms over ``symbols`` for exhaustive families."""
    features = set(features)
    pool = literals(symbols)
    pairs = list(permutations(symbols, 2))
    if "dep" in features:
        pool += [Dep((), p) for p in symbols]
        pool += [Dep((p,), q) for p, q in pairs]
    if "indep" in features:
        pool += [Indep((), (p,), (q,)) for p, q in pairs[:1]]
        pool += [Indep((p,), (q,), (q,)) for p, q in pairs]
        if "incl" not in features:
            pool += [Indep((), (symbols[0],), (symbols[0],))]
    if "incl" in features:
        pool += [Incl((p,), (q,)) for p, q in pairs]
        if len(symbols) >= 2 and "indep" not in features:
            pool.append(Incl(tuple(symbols[:2]), tuple(reversed(symbols[:2]))))
    return pool


def enumerate_formulas(
    atoms: Sequence[Formula],
    depth: int,
    binary: Sequence[Callable[[Formula, Formula], Formula]] = (And, Or),
    unary: Sequence[Callable[[Formula], Formula]] = (),
) -> list[Formula]:
    """All formulas of depth at most ``depth`` built from ``atoms``, without duplicates."""
    if depth < 1:
        return []
    levels = [list(atoms)]
    everything = list(atoms)
    for _ in range(depth - 1):
        new = []
        for op in unary:
            new += [op(f) for f in everything]
        for op in binary:
            new += [op(a, b) for a, b in combinations_with_replacement(everything, 2)]
        seen = set(everything)
        new = [f for f in dict.fromkeys(new) if f not in seen]
        levels.append(new)
        everything = everything + new
    return everything


def random_atom(rng: random.Random, symbols: Sequence[str], features: Iterable[str]) -> Formula:
    features = set(features)
    kinds = ["lit"] * 4 + [k for k in ("dep", "indep", "incl", "max") if k in features or
                           (k == "max" and "derived" in features)]
    kind = rng.choice(kinds)

    def tup(lo: int, hi: int) -> tuple[str, ...]:
        return tuple(rng.choice(symbols) for _ in range(rng.randint(lo, hi)))

    if kind == "dep":
        return Dep(tup(0, 2), rng.choice(symbols))
    if kind == "indep":
        return Indep(tup(0, 1), tup(1, 2), tup(1, 2))
    if kind == "incl":
        k = rng.randint(1, 2)
        return Incl(tup(k, k), tup(k, k))
    if kind == "max":
        return Max(tup(1, 2))
    p = rng.choice(symbols)
    return Prop(p) if rng.random() < 0.5 else NegProp(p)


def random_formula(
    rng: random.Random,
    symbols: Sequence[str],
    depth: int,
    features: Iterable[str] = (),
    leaf_bias: float = 0.3,
) -> Formula:
    """Random formula of depth at most ``depth`` using only the given features."""
    features = frozenset(features)
    unknown = features - FEATURES
    if unknown:
        raise ValueError(f"unknown features {sorted(unknown)}")
    binary: list = [And, Or]
    if "derived" in features:
        binary += [IntDisj, Tensor, IntImpl]

    def build(d: int) -> Formula:
        if d <= 1 or rng.random() < leaf_bias:
            return random_atom(rng, symbols, features)
        if "classneg" in features and rng.random() < 0.25:
            return ClassNeg(build(d - 1))
        op = rng.choice(binary)
        return op(build(d - 1), build(d - 1))

    return build(depth)


def random_team(rng: random.Random, domain: Sequence[str], max_size: int | None = None) -> Team:
    """Random team over ``domain``, possibly empty, with at most ``max_size`` members."""
    n_assign = 1 << len(domain)
    cap = n_assign if max_size is None else min(max_size, n_assign)
    k = rng.randint(0, cap)
    mask = 0
    for a in rng.sample(range(n_assign), k):
        mask |= 1 << a
    return Team(tuple(domain), mask)


def qbf_family(n_vars: int, depth: int) -> list[QbfInstance]:
    """Every prefix over ``x1..xn`` combined with every matrix of the given depth."""
    xs = [f"x{i}" for i in range(1, n_vars + 1)]
    matrices = enumerate_formulas(literals(xs), depth)
    return [
        QbfInstance(tuple(zip(kinds, xs)), m)
        for kinds in product((EXISTS, FORALL), repeat=n_vars)
        for m in matrices
    ]


def random_qbf(rng: random.Random, max_vars: int, depth: int) -> QbfInstance:
    n = rng.randint(1, max_vars)
    xs = [f"x{i}" for i in range(1, n + 1)]
    prefix = tuple((rng.choice((EXISTS, FORALL)), x) for x in xs)
    return QbfInstance(prefix, random_formula(rng, xs, depth))
