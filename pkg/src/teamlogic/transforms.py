"""Formula-to-formula translations.

Every function here is pure except for the :class:`FreshPool` a caller may
pass in, which hands out symbols that occur nowhere else.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .errors import FragmentError
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
    atom_symbols,
    big_and,
    big_or,
    variables,
)
from .fragment import classify

FRESH_PREFIX = "__f"


class FreshPool:
    """Source of proposition symbols ``__f0, __f1, ...`` avoiding ``taken``."""

    def __init__(self, taken: Iterable[str] = ()):
        self.taken = set(taken)
        self.counter = 0

    def fresh(self) -> str:
        while True:
            name = f"{FRESH_PREFIX}{self.counter}"
            self.counter += 1
            if name not in self.taken:
                self.taken.add(name)
                return name

    @classmethod
    def for_formula(cls, *formulas: Formula) -> "FreshPool":
        return cls(p for f in formulas for p in variables(f))


def _rebuild(f: Formula, leaf: Callable[[Formula], Formula | None]) -> Formula:
    """Bottom-up rewrite; ``leaf`` may replace a node after its children are rebuilt."""
    if isinstance(f, ClassNeg):
        g: Formula = ClassNeg(_rebuild(f.body, leaf))
    elif isinstance(f, (And, Or, IntDisj, Tensor, IntImpl)):
        g = type(f)(_rebuild(f.left, leaf), _rebuild(f.right, leaf))
    else:
        g = f
    out = leaf(g)
    return g if out is None else out


# -- derived operators into PL[∼] ------------------------------------------


def tensor_to_tilde(left: Formula, right: Formula) -> Formula:
    return ClassNeg(Or(ClassNeg(left), ClassNeg(right)))


def ovee_to_tilde(left: Formula, right: Formula) -> Formula:
    return ClassNeg(And(ClassNeg(left), ClassNeg(right)))


def impl_to_tilde(left: Formula, right: Formula, guard: str) -> Formula:
    # (∼φ ⩣ ψ) ⊗ ∼(p ∨ ¬p) with ⩣ and ⊗ already unfolded
    never = ClassNeg(Or(Prop(guard), NegProp(guard)))
    return tensor_to_tilde(ovee_to_tilde(ClassNeg(left), right), never)


def constancy_to_tilde(y: str) -> Formula:
    return ovee_to_tilde(Prop(y), NegProp(y))


def eliminate_derived(f: Formula, pool: FreshPool | None = None) -> Formula:
    """Rewrite ⊗, ⩣, ⊸, dependence atoms and max into PL[∼] (plus ⊥c and ⊆ atoms).

    The guard symbol of the ⊸ translation only ever occurs in the tautology
    ``p ∨ ¬p``, so a single fresh symbol serves every ⊸ in ``f``.
    """
    pool = pool if pool is not None else FreshPool.for_formula(f)
    guard: list[str] = []

    def guard_symbol() -> str:
        if not guard:
            guard.append(pool.fresh())
        return guard[0]

    def leaf(g: Formula) -> Formula | None:
        if isinstance(g, Tensor):
            return tensor_to_tilde(g.left, g.right)
        if isinstance(g, IntDisj):
            return ovee_to_tilde(g.left, g.right)
        if isinstance(g, IntImpl):
            return impl_to_tilde(g.left, g.right, guard_symbol())
        if isinstance(g, Dep):
            if not g.antecedent:
                return constancy_to_tilde(g.consequent)
            premise = big_and([constancy_to_tilde(x) for x in g.antecedent])
            return impl_to_tilde(premise, constancy_to_tilde(g.consequent), guard_symbol())
        if isinstance(g, Max):
            return ClassNeg(big_or([constancy_to_tilde(x) for x in g.symbols]))
        return None

    return _rebuild(f, leaf)


# -- atom rewrites ------------------------------------------------------------


def dep_to_indep(f: Formula) -> Formula:
    """Replace each dep(x̄; y) by the equivalent ind(x̄; y; y)."""

    def leaf(g: Formula) -> Formula | None:
        if isinstance(g, Dep):
            return Indep(g.antecedent, (g.consequent,), (g.consequent,))
        return None

    return _rebuild(f, leaf)


def _require(f: Formula, what: str, **allowed: bool) -> None:
    if not classify(f).within(**allowed):
        raise FragmentError(f"{what} needs a formula of {_names(allowed)}, got {classify(f).label}")


def _names(allowed: dict) -> str:
    if allowed.get("indep"):
        return "PL[⊥c]"
    if allowed.get("incl"):
        return "PL[⊆]"
    return "PL"


def erase_indep(f: Formula) -> Formula:
    """Replace every independence atom by ``(p | !p)``, p its first symbol.

    Only singleton teams are guaranteed to agree on the input and output.
    """
    _require(f, "erase_indep", indep=True)

    def leaf(g: Formula) -> Formula | None:
        if isinstance(g, Indep):
            p = atom_symbols(g)[0]
            return Or(Prop(p), NegProp(p))
        return None

    return _rebuild(f, leaf)


def biconditional(p: str, q: str) -> Formula:
    return Or(And(Prop(p), Prop(q)), And(NegProp(p), NegProp(q)))


def incl_to_biconditional(f: Formula) -> Formula:
    """Replace every inclusion atom by the componentwise biconditional of its tuples."""
    _require(f, "incl_to_biconditional", incl=True)

    def leaf(g: Formula) -> Formula | None:
        if isinstance(g, Incl):
            return big_and([biconditional(p, q) for p, q in zip(g.left, g.right)])
        return None

    return _rebuild(f, leaf)


# -- satisfiability / validity bridges ---------------------------------------


def nonempty(p: str) -> Formula:
    """``∼(p ∧ ¬p)``, true exactly on nonempty teams."""
    return ClassNeg(And(Prop(p), NegProp(p)))


def sat_to_val(f: Formula, pool: FreshPool | None = None) -> Formula:
    """A formula that is valid iff ``f`` is satisfiable."""
    pool = pool if pool is not None else FreshPool.for_formula(f)
    p = pool.fresh()
    body = Or(Or(Prop(p), NegProp(p)), And(f, nonempty(p)))
    return IntImpl(Max(variables(f)), body)


def val_to_sat(f: Formula, pool: FreshPool | None = None) -> Formula:
    """A formula that is satisfiable iff ``f`` is valid."""
    pool = pool if pool is not None else FreshPool.for_formula(f)
    p = pool.fresh()
    return And(Max(variables(f)), IntImpl(nonempty(p), f))


PASSES = {
    "eliminate": eliminate_derived,
    "dep2indep": dep_to_indep,
    "eraseindep": erase_indep,
    "incl2pl": incl_to_biconditional,
    "sat2val": sat_to_val,
    "val2sat": val_to_sat,
}
