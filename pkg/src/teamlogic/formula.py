"""Formula AST for propositional team logics and its canonical printer.

Formulas are immutable, hashable dataclasses, so structural equality is
plain ``==``.  Dual negation ``NegProp`` exists only at proposition
symbols; every other negation is the classical ``ClassNeg``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import ArityError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

#: Identifiers that cannot be used as proposition symbols.
KEYWORDS = frozenset({"dep", "ind", "inc", "max", "ovee", "otimes"})


def check_symbol(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ValueError(f"invalid proposition symbol: {name!r}")
    if name in KEYWORDS:
        raise ValueError(f"{name!r} is a keyword, not a proposition symbol")
    return name


class _Node:
    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


def _symbols(items: Sequence[str]) -> tuple[str, ...]:
    return tuple(check_symbol(x) for x in items)


@dataclass(frozen=True)
class Prop(_Node):
    name: str

    def __post_init__(self):
        check_symbol(self.name)


@dataclass(frozen=True)
class NegProp(_Node):
    """Dual negation of a proposition symbol."""

    name: str

    def __post_init__(self):
        check_symbol(self.name)


@dataclass(frozen=True)
class And(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or(_Node):
    """Lax splitting disjunction."""

    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Dep(_Node):
    """Dependence atom dep(x1,...,xn; y); an empty antecedent is constancy."""

    antecedent: tuple[str, ...]
    consequent: str

    def __post_init__(self):
        object.__setattr__(self, "antecedent", _symbols(self.antecedent))
        check_symbol(self.consequent)


@dataclass(frozen=True)
class Indep(_Node):
    """Conditional independence atom with tuples (condition; left; right)."""

    condition: tuple[str, ...]
    left: tuple[str, ...]
    right: tuple[str, ...]

    def __post_init__(self):
        for field in ("condition", "left", "right"):
            object.__setattr__(self, field, _symbols(getattr(self, field)))
        if not self.left or not self.right:
            raise ArityError("independence atom needs nonempty left and right tuples")


@dataclass(frozen=True)
class Incl(_Node):
    """Inclusion atom: every value of ``left`` occurs as a value of ``right``."""

    left: tuple[str, ...]
    right: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", _symbols(self.left))
        object.__setattr__(self, "right", _symbols(self.right))
        if not self.left or len(self.left) != len(self.right):
            raise ArityError(
                f"inclusion atom needs tuples of equal nonzero length, "
                f"got {len(self.left)} and {len(self.right)}"
            )


@dataclass(frozen=True)
class ClassNeg(_Node):
    body: "Formula"


@dataclass(frozen=True)
class IntDisj(_Node):
    """Intuitionistic disjunction: the whole team satisfies one side."""

    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Tensor(_Node):
    """Dual of the splitting disjunction."""

    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class IntImpl(_Node):
    """Intuitionistic implication over all subteams."""

    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Max(_Node):
    """The team's projection onto ``symbols`` is the full Boolean cube."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", _symbols(self.symbols))
        if not self.symbols:
            raise ArityError("max needs at least one symbol")


Formula = Union[Prop, NegProp, And, Or, Dep, Indep, Incl, ClassNeg, IntDisj, Tensor, IntImpl, Max]

BINARY = (And, Or, IntDisj, Tensor, IntImpl)
ATOMS = (Prop, NegProp, Dep, Indep, Incl, Max)
DERIVED = (IntDisj, Tensor, IntImpl, Max)
#: Connectives understood by the alternating checker and the empty-team function.
CORE = (Prop, NegProp, And, Or, ClassNeg, Indep, Incl)

_INFIX = {And: "&", Or: "|", IntDisj: "ovee", Tensor: "otimes", IntImpl: "-->"}


def big_and(parts: Sequence[Formula]) -> Formula:
    """Left-nested conjunction of a nonempty sequence."""
    if not parts:
        raise ValueError("empty conjunction")
    out = parts[0]
    for f in parts[1:]:
        out = And(out, f)
    return out


def big_or(parts: Sequence[Formula]) -> Formula:
    """Left-nested splitting disjunction of a nonempty sequence."""
    if not parts:
        raise ValueError("empty disjunction")
    out = parts[0]
    for f in parts[1:]:
        out = Or(out, f)
    return out


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, BINARY):
        return (f.left, f.right)
    if isinstance(f, ClassNeg):
        return (f.body,)
    return ()


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal, left to right."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        stack.extend(reversed(children(g)))


def atom_symbols(f: Formula) -> tuple[str, ...]:
    """Symbols occurring directly in an atom, in written order."""
    if isinstance(f, (Prop, NegProp)):
        return (f.name,)
    if isinstance(f, Dep):
        return f.antecedent + (f.consequent,)
    if isinstance(f, Indep):
        return f.condition + f.left + f.right
    if isinstance(f, Incl):
        return f.left + f.right
    if isinstance(f, Max):
        return f.symbols
    return ()


def variables(f: Formula) -> tuple[str, ...]:
    """All proposition symbols of ``f`` in first-occurrence order."""
    seen: dict[str, None] = {}
    for g in subformulas(f):
        for p in atom_symbols(g):
            seen.setdefault(p)
    return tuple(seen)


def size(f: Formula) -> int:
    """Number of syntax-tree nodes; literals and atoms are single leaves.

    Tuple lengths are measured separately by :func:`max_tuple_length`.
    """
    return sum(1 for _ in subformulas(f))


def depth(f: Formula) -> int:
    """Height of the syntax tree; atoms have depth 1."""
    kids = children(f)
    return 1 + (max(depth(k) for k in kids) if kids else 0)


def max_tuple_length(f: Formula) -> int:
    best = 0
    for g in subformulas(f):
        if isinstance(g, Dep):
            best = max(best, len(g.antecedent) + 1)
        elif isinstance(g, Indep):
            best = max(best, len(g.condition), len(g.left), len(g.right))
        elif isinstance(g, Incl):
            best = max(best, len(g.left))
        elif isinstance(g, Max):
            best = max(best, len(g.symbols))
    return best


def to_text(f: Formula) -> str:
    """Canonical text: binary connectives fully parenthesized, single spaces."""
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, NegProp):
        return "!" + f.name
    if isinstance(f, ClassNeg):
        return "~" + to_text(f.body)
    if isinstance(f, BINARY):
        return f"({to_text(f.left)} {_INFIX[type(f)]} {to_text(f.right)})"
    if isinstance(f, Dep):
        if not f.antecedent:
            return f"dep(;{f.consequent})"
        return f"dep({','.join(f.antecedent)}; {f.consequent})"
    if isinstance(f, Indep):
        cond = " ".join(f.condition)
        head = f"ind({cond}; " if cond else "ind(; "
        return head + f"{' '.join(f.left)}; {' '.join(f.right)})"
    if isinstance(f, Incl):
        return f"inc({' '.join(f.left)}; {' '.join(f.right)})"
    if isinstance(f, Max):
        return f"max({','.join(f.symbols)})"
    raise TypeError(f"not a formula: {f!r}")
