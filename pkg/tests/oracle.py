"""Naive reference semantics used as an independent oracle in the tests.

Teams are frozensets of assignment tuples; every clause is written out from
its definition with explicit enumeration of subteams and covers.  Nothing
here touches the bitset machinery of the package.
"""

from itertools import chain, combinations, product

from teamlogic.formula import (
    And,
    ClassNeg,
    Dep,
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


def all_assignments(domain):
    return [tuple(bits) for bits in product((0, 1), repeat=len(domain))]


def subsets(team):
    items = sorted(team)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def every_team(domain):
    return subsets(frozenset(all_assignments(domain)))


def holds(domain, team, f):
    idx = {p: i for i, p in enumerate(domain)}

    def val(s, tup):
        return tuple(s[idx[p]] for p in tup)

    def sat(X, g):
        if isinstance(g, Prop):
            return all(s[idx[g.name]] == 1 for s in X)
        if isinstance(g, NegProp):
            return all(s[idx[g.name]] == 0 for s in X)
        if isinstance(g, And):
            return sat(X, g.left) and sat(X, g.right)
        if isinstance(g, Or):
            return any(
                sat(Y, g.left) and sat(Z, g.right)
                for Y in subsets(X)
                for Z in subsets(X)
                if Y | Z == X
            )
        if isinstance(g, ClassNeg):
            return not sat(X, g.body)
        if isinstance(g, Dep):
            return all(
                s[idx[g.consequent]] == t[idx[g.consequent]]
                for s in X
                for t in X
                if val(s, g.antecedent) == val(t, g.antecedent)
            )
        if isinstance(g, Indep):
            pq = g.condition + g.left
            return all(
                any(val(u, pq) == val(s, pq) and val(u, g.right) == val(t, g.right) for u in X)
                for s in X
                for t in X
                if val(s, g.condition) == val(t, g.condition)
            )
        if isinstance(g, Incl):
            return all(any(val(s, g.left) == val(t, g.right) for t in X) for s in X)
        if isinstance(g, IntDisj):
            return sat(X, g.left) or sat(X, g.right)
        if isinstance(g, Tensor):
            return all(
                sat(Y, g.left) or sat(Z, g.right)
                for Y in subsets(X)
                for Z in subsets(X)
                if Y | Z == X
            )
        if isinstance(g, IntImpl):
            return all(sat(Y, g.right) for Y in subsets(X) if sat(Y, g.left))
        if isinstance(g, Max):
            return {val(s, g.symbols) for s in X} == set(product((0, 1), repeat=len(g.symbols)))
        raise TypeError(g)

    return sat(frozenset(team), f)


def team_rows(domain, team):
    return sorted("".join(map(str, s)) for s in team)
