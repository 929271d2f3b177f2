"""Model checking under team semantics.

:class:`Evaluator` implements the satisfaction clauses directly, with
memoization keyed by (subformula, subteam bitset).  A single evaluator can
be reused across many teams over the same domain, which is how the
brute-force solvers sweep the team space.

:func:`evaluate_flagged` is a deterministic simulation of the alternating
model-checking procedure with a truth flag: existential choices become
``any`` and universal choices become ``all``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import FragmentError, SplitBudgetExceeded, UnknownVariable
from .formula import (
    CORE,
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
    subformulas,
    variables,
)
from .team import ALL_TEAMS_LIMIT, Team, all_teams, bits_of, cover_masks, submasks

DIRECT = "direct"
ELIMINATE_FIRST = "eliminate-first"


@dataclass(frozen=True)
class EvalConfig:
    derived_mode: str = DIRECT
    #: largest team on which a splitting disjunction or tensor may search covers
    max_split_size: int = 16
    #: largest team on which an intuitionistic implication may search subteams
    max_subset_size: int = 20
    #: decide pure PL subformulas member-wise instead of by the split clause
    use_flatness: bool = True

    def __post_init__(self):
        if self.derived_mode not in (DIRECT, ELIMINATE_FIRST):
            raise ValueError(f"unknown derived_mode {self.derived_mode!r}")
        if self.max_split_size < 0 or self.max_subset_size < 0:
            raise ValueError("budgets must be nonnegative")


DEFAULT_CONFIG = EvalConfig()

_PL = (Prop, NegProp, And, Or)


def _var_mask(n: int, j: int) -> int:
    """Bitset of all assignments over n symbols whose bit j is 1."""
    width = 1 << j
    block = ((1 << width) - 1) << width
    period = width << 1
    mask, span = block, period
    total = 1 << n
    while span < total:
        mask |= mask << span
        span <<= 1
    return mask


def _popcount(x: int) -> int:
    return bin(x).count("1")


class Evaluator:
    """Satisfaction checker for one formula over teams of one domain."""

    def __init__(self, formula: Formula, domain: Sequence[str], config: EvalConfig | None = None):
        self.config = config or DEFAULT_CONFIG
        self.input_domain = self.domain = tuple(domain)
        missing = [p for p in variables(formula) if p not in self.domain]
        if missing:
            raise UnknownVariable(f"{missing[0]!r} is not in the team domain {self.domain}")
        if self.config.derived_mode == ELIMINATE_FIRST:
            from .transforms import FreshPool, eliminate_derived

            formula = eliminate_derived(formula, FreshPool(self.domain))
            # fresh symbols take the high bits and are fixed to 0, so masks carry over
            self.domain = self.domain + tuple(p for p in variables(formula) if p not in self.domain)
        self.formula = formula
        self._pos = {p: j for j, p in enumerate(self.domain)}
        self._n = len(self.domain)
        self._full = (1 << (1 << self._n)) - 1
        self._var_masks: dict[str, int] = {}
        self._flat: dict[int, int | None] = {}
        self._memo: dict[tuple[int, int], bool] = {}
        self._keep = list(subformulas(formula))  # pins ids used as memo keys

    def __call__(self, team: Team | int) -> bool:
        if isinstance(team, Team):
            if team.domain != self.input_domain:
                raise ValueError(f"team domain {team.domain} differs from {self.input_domain}")
            team = team.mask
        return self._sat(self.formula, team)

    # -- helpers -----------------------------------------------------------

    def _bit_mask(self, symbols: Sequence[str]) -> int:
        m = 0
        for p in symbols:
            m |= 1 << self._pos[p]
        return m

    def _tuple(self, a: int, positions: Sequence[int]) -> tuple[int, ...]:
        return tuple((a >> j) & 1 for j in positions)

    def _vm(self, p: str) -> int:
        m = self._var_masks.get(p)
        if m is None:
            m = self._var_masks[p] = _var_mask(self._n, self._pos[p])
        return m

    def flat_set(self, f: Formula) -> int | None:
        """Bitset of assignments satisfying a pure PL formula, else None."""
        key = id(f)
        if key in self._flat:
            return self._flat[key]
        if isinstance(f, Prop):
            s = self._vm(f.name)
        elif isinstance(f, NegProp):
            s = self._full & ~self._vm(f.name)
        elif isinstance(f, (And, Or)):
            left = self.flat_set(f.left)
            right = self.flat_set(f.right) if left is not None else None
            if left is None or right is None:
                s = None
            else:
                s = left & right if isinstance(f, And) else left | right
        else:
            s = None
        self._flat[key] = s
        return s

    def _split_budget(self, x: int) -> None:
        size = _popcount(x)
        if size > self.config.max_split_size:
            raise SplitBudgetExceeded("split team size", size, self.config.max_split_size)

    # -- satisfaction --------------------------------------------------------

    def _sat(self, f: Formula, x: int) -> bool:
        key = (id(f), x)
        memo = self._memo
        if key in memo:
            return memo[key]
        if self.config.use_flatness and isinstance(f, _PL):
            s = self.flat_set(f)
            if s is not None:
                result = x & ~s == 0
                memo[key] = result
                return result
        result = self._compute(f, x)
        memo[key] = result
        return result

    def _compute(self, f: Formula, x: int) -> bool:
        if isinstance(f, Prop):
            return x & ~self._vm(f.name) == 0
        if isinstance(f, NegProp):
            return x & self._vm(f.name) == 0
        if isinstance(f, And):
            return self._sat(f.left, x) and self._sat(f.right, x)
        if isinstance(f, Or):
            return self._or(f, x)
        if isinstance(f, ClassNeg):
            return not self._sat(f.body, x)
        if isinstance(f, Dep):
            return self._dep(f, x)
        if isinstance(f, Indep):
            return self._indep(f, x)
        if isinstance(f, Incl):
            return self._incl(f, x)
        if isinstance(f, IntDisj):
            return self._sat(f.left, x) or self._sat(f.right, x)
        if isinstance(f, Tensor):
            return self._tensor(f, x)
        if isinstance(f, IntImpl):
            size = _popcount(x)
            if size > self.config.max_subset_size:
                raise SplitBudgetExceeded("subteam search size", size, self.config.max_subset_size)
            return all(self._sat(f.right, y) for y in submasks(x) if self._sat(f.left, y))
        if isinstance(f, Max):
            pos = [self._pos[p] for p in f.symbols]
            seen = {self._tuple(a, pos) for a in bits_of(x)}
            return len(seen) == 1 << len(pos)
        raise TypeError(f"not a formula: {f!r}")

    def _or(self, f: Or, x: int) -> bool:
        self._split_budget(x)
        left, right = f.left, f.right
        if self.config.use_flatness:
            # a flat side is satisfied exactly by the subteams of one maximal part,
            # and taking that part whole leaves the other side the most freedom
            sl = self.flat_set(left)
            if sl is None:
                sr = self.flat_set(right)
                if sr is not None:
                    left, right, sl = right, left, sr
            if sl is not None:
                best = x & sl
                rest = x & ~best
                return any(self._sat(right, rest | w) for w in submasks(best))
        for y in submasks(x):
            if self._sat(left, y):
                rest = x & ~y
                for w in submasks(y):
                    if self._sat(right, rest | w):
                        return True
        return False

    def _tensor(self, f: Tensor, x: int) -> bool:
        self._split_budget(x)
        for y in submasks(x):
            if not self._sat(f.left, y):
                rest = x & ~y
                for w in submasks(y):
                    if not self._sat(f.right, rest | w):
                        return False
        return True

    def _dep(self, f: Dep, x: int) -> bool:
        key_mask = self._bit_mask(f.antecedent)
        yj = self._pos[f.consequent]
        seen: dict[int, int] = {}
        for a in bits_of(x):
            v = (a >> yj) & 1
            if seen.setdefault(a & key_mask, v) != v:
                return False
        return True

    def _indep(self, f: Indep, x: int) -> bool:
        cond = self._bit_mask(f.condition)
        pq = cond | self._bit_mask(f.left)
        r = self._bit_mask(f.right)
        shared = pq & r
        both = pq | r
        members = list(bits_of(x))
        present = {a & both for a in members}
        for s in members:
            for t in members:
                if s & cond != t & cond:
                    continue
                if s & shared != t & shared:
                    return False
                if (s & pq) | (t & r) not in present:
                    return False
        return True

    def _incl(self, f: Incl, x: int) -> bool:
        lpos = [self._pos[p] for p in f.left]
        rpos = [self._pos[p] for p in f.right]
        members = list(bits_of(x))
        targets = {self._tuple(a, rpos) for a in members}
        return all(self._tuple(a, lpos) in targets for a in members)


def evaluate(x: Team, f: Formula, config: EvalConfig | None = None) -> bool:
    """Decide ``x ⊨ f``."""
    return Evaluator(f, x.domain, config)(x)


def satisfying_teams(
    f: Formula,
    domain: Sequence[str] | None = None,
    config: EvalConfig | None = None,
    limit: int = ALL_TEAMS_LIMIT,
) -> list[Team]:
    """All teams over ``domain`` (default ``variables(f)``), empty team included, that satisfy f."""
    domain = tuple(variables(f) if domain is None else domain)
    ev = Evaluator(f, domain, config)
    return [x for x in all_teams(domain, limit) if ev(x.mask)]


# -- alternating procedure ----------------------------------------------------


def require_core(f: Formula) -> None:
    for g in subformulas(f):
        if not isinstance(g, CORE):
            raise FragmentError(
                f"{type(g).__name__} is not a core connective; translate the formula first"
            )


class _Alternating:
    def __init__(self, formula: Formula, domain: tuple[str, ...], max_split_size: int):
        self.pos = {p: j for j, p in enumerate(domain)}
        self.max_split_size = max_split_size
        self.memo: dict[tuple[int, int, int], bool] = {}
        self.keep = list(subformulas(formula))

    def proj(self, a: int, symbols: Sequence[str]) -> tuple[int, ...]:
        return tuple((a >> self.pos[p]) & 1 for p in symbols)

    def mc(self, f: Formula, t: int, flag: int) -> bool:
        key = (id(f), t, flag)
        if key not in self.memo:
            self.memo[key] = self._mc(f, t, flag)
        return self.memo[key]

    def _mc(self, f: Formula, t: int, flag: int) -> bool:
        if isinstance(f, And):
            parts = (f.left, f.right)
            if flag == 1:
                return all(self.mc(g, t, 1) for g in parts)
            return any(self.mc(g, t, 0) for g in parts)
        if isinstance(f, Or):
            size = _popcount(t)
            if size > self.max_split_size:
                raise SplitBudgetExceeded("split team size", size, self.max_split_size)
            if flag == 1:
                return any(
                    self.mc(f.left, t1, 1) and self.mc(f.right, t2, 1) for t1, t2 in cover_masks(t)
                )
            return all(
                self.mc(f.left, t1, 0) or self.mc(f.right, t2, 0) for t1, t2 in cover_masks(t)
            )
        if isinstance(f, ClassNeg):
            return self.mc(f.body, t, 1 - flag)
        members = list(bits_of(t))
        x = 1
        if isinstance(f, (Prop, NegProp)):
            bad = 0 if isinstance(f, Prop) else 1
            j = self.pos[f.name]
            for s in members:
                if (s >> j) & 1 == bad:
                    x = 0
        elif isinstance(f, Incl):
            for s in members:
                y = 0
                for s2 in members:
                    if self.proj(s, f.left) == self.proj(s2, f.right):
                        y = 1
                if y == 0:
                    x = 0
        elif isinstance(f, Indep):
            p, q, r = f.condition, f.left, f.right
            for s in members:
                for s1 in members:
                    if self.proj(s, p) != self.proj(s1, p):
                        continue
                    y = 0
                    for s2 in members:
                        if (
                            self.proj(s, p) == self.proj(s2, p)
                            and self.proj(s, q) == self.proj(s2, q)
                            and self.proj(s1, r) == self.proj(s2, r)
                        ):
                            y = 1
                    if y == 0:
                        x = 0
        else:
            raise FragmentError(f"{type(f).__name__} is not a core connective")
        return (x == 1 and flag == 1) or (x == 0 and flag == 0)


def evaluate_flagged(t: Team, f: Formula, flag: int, max_split_size: int = 16) -> bool:
    """Simulate the alternating procedure MC(t, f, flag) deterministically.

    With ``flag == 1`` the result is ``t ⊨ f``; with ``flag == 0`` it is the negation.
    """
    if flag not in (0, 1):
        raise ValueError("flag must be 0 or 1")
    require_core(f)
    missing = [p for p in variables(f) if p not in t.domain]
    if missing:
        raise UnknownVariable(f"{missing[0]!r} is not in the team domain {t.domain}")
    return _Alternating(f, t.domain, max_split_size).mc(f, t.mask, flag)


def empty_team_value(f: Formula) -> bool:
    """Whether the empty team satisfies ``f``, via the arithmetic function π."""
    require_core(f)

    def pi(g: Formula) -> int:
        if isinstance(g, (And, Or)):
            return pi(g.left) * pi(g.right)
        if isinstance(g, ClassNeg):
            return (pi(g.body) + 1) % 2
        return 1

    return pi(f) == 1
