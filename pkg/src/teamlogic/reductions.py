"""TQBF to model checking of PL[∼], quantifier gadgets, and a QBF oracle.

The reduction uses the team ``T = {s_1, ..., s_n}`` where ``s_i`` writes
``i`` in binary over the index symbols ``r0, r1, ...`` (``r0`` is the most
significant bit).  A subteam of ``T`` encodes an assignment to the QBF
variables: ``x_i`` is true iff ``s_i`` is present.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LimitExceeded, ParseError
from .formula import (
    And,
    ClassNeg,
    Dep,
    Formula,
    IntDisj,
    NegProp,
    Or,
    Prop,
    Tensor,
    big_and,
    big_or,
    variables,
)
from .team import Team

EXISTS, FORALL = "E", "A"
QBF_EVAL_LIMIT = 16
REDUCTION_LIMIT = 12


@dataclass(frozen=True)
class QbfInstance:
    """Prenex QBF; the matrix uses ``Prop``/``NegProp`` literals, ``And`` and ``Or``."""

    prefix: tuple[tuple[str, str], ...]
    matrix: Formula

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple((q, x) for q, x in self.prefix))
        if not self.prefix:
            raise ValueError("QBF prefix is empty")
        names = [x for _, x in self.prefix]
        if any(q not in (EXISTS, FORALL) for q, _ in self.prefix):
            raise ValueError("quantifiers must be 'E' or 'A'")
        if len(set(names)) != len(names):
            raise ValueError("a variable is quantified twice")
        free = set(variables(self.matrix)) - set(names)
        if free:
            raise ValueError(f"unquantified matrix variables: {sorted(free)}")
        for g in _walk(self.matrix):
            if not isinstance(g, (Prop, NegProp, And, Or)):
                raise ValueError(f"QBF matrix may not contain {type(g).__name__}")

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(x for _, x in self.prefix)

    def __str__(self) -> str:
        head = " ".join(f"{q} {x}" for q, x in self.prefix)
        return f"{head} : {_matrix_text(self.matrix)}"


def _walk(f: Formula):
    yield f
    if isinstance(f, (And, Or)):
        yield from _walk(f.left)
        yield from _walk(f.right)


def _matrix_text(f: Formula) -> str:
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, NegProp):
        return "-" + f.name
    op = "&" if isinstance(f, And) else "|"
    return f"({_matrix_text(f.left)} {op} {_matrix_text(f.right)})"


# -- QBF text format -----------------------------------------------------------

_QBF_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")


def parse_qbf(text: str) -> QbfInstance:
    """Parse ``E x1 A x2 : (x1 | -x2)``; ``-`` negates a variable only."""
    tokens = []
    for m in _QBF_TOKEN.finditer(text.split("#", 1)[0]):
        if m.group(1):
            tokens.append(m.group(1))
        elif m.group(2) and not m.group(2).isspace():
            tokens.append(m.group(2))
    pos = 0

    def peek() -> str:
        return tokens[pos] if pos < len(tokens) else ""

    def take(expected: str | None = None) -> str:
        nonlocal pos
        tok = peek()
        if not tok or (expected is not None and tok != expected):
            raise ParseError(f"QBF: expected {expected or 'a token'!r}, found {tok or 'end of input'!r}")
        pos += 1
        return tok

    prefix = []
    while peek() in (EXISTS, FORALL):
        q = take()
        name = take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"QBF: bad variable name {name!r}")
        prefix.append((q, name))
    take(":")

    def disj() -> Formula:
        f = conj()
        while peek() == "|":
            take()
            f = Or(f, conj())
        return f

    def conj() -> Formula:
        f = lit()
        while peek() == "&":
            take()
            f = And(f, lit())
        return f

    def lit() -> Formula:
        tok = peek()
        if tok == "(":
            take()
            f = disj()
            take(")")
            return f
        if tok == "-":
            take()
            name = take()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ParseError("QBF: '-' applies only to a variable")
            return NegProp(name)
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok or "!"):
            take()
            return Prop(tok)
        raise ParseError(f"QBF: unexpected {tok or 'end of input'!r}")

    matrix = disj()
    if pos != len(tokens):
        raise ParseError(f"QBF: trailing input at {peek()!r}")
    try:
        return QbfInstance(tuple(prefix), matrix)
    except ValueError as exc:
        raise ParseError(f"QBF: {exc}") from None


# -- oracle ----------------------------------------------------------------


def _matrix_value(f: Formula, s: dict[str, bool]) -> bool:
    if isinstance(f, Prop):
        return s[f.name]
    if isinstance(f, NegProp):
        return not s[f.name]
    if isinstance(f, And):
        return _matrix_value(f.left, s) and _matrix_value(f.right, s)
    return _matrix_value(f.left, s) or _matrix_value(f.right, s)


def qbf_eval(q: QbfInstance, limit: int = QBF_EVAL_LIMIT) -> bool:
    """Truth value by recursion over the quantifier prefix."""
    if len(q.prefix) > limit:
        raise LimitExceeded("QBF variables", len(q.prefix), limit)

    def game(i: int, s: dict[str, bool]) -> bool:
        if i == len(q.prefix):
            return _matrix_value(q.matrix, s)
        kind, x = q.prefix[i]
        branches = (game(i + 1, {**s, x: b}) for b in (False, True))
        return any(branches) if kind == EXISTS else all(branches)

    return game(0, {})


# -- index gadgets -----------------------------------------------------------


def index_symbols(n: int, prefix: str = "r") -> tuple[str, ...]:
    """Index symbols for ``n`` team members: floor(log2 n) + 1 of them."""
    return tuple(f"{prefix}{k}" for k in range(n.bit_length()))


def _index_bits(rs: tuple[str, ...] | list[str], i: int) -> list[int]:
    if i < 0 or i >= 1 << len(rs):
        raise ValueError(f"index {i} does not fit in {len(rs)} bits")
    width = len(rs)
    return [(i >> (width - 1 - k)) & 1 for k in range(width)]


def index_eq(rs, i: int) -> Formula:
    """Conjunction of literals fixing ``rs`` to ``i`` in binary, most significant first."""
    rs = tuple(rs)
    return big_and([Prop(r) if b else NegProp(r) for r, b in zip(rs, _index_bits(rs, i))])


def index_neq(rs, i: int) -> Formula:
    """Literal-level dual of :func:`index_eq`: no member encodes ``i``."""
    rs = tuple(rs)
    return big_or([NegProp(r) if b else Prop(r) for r, b in zip(rs, _index_bits(rs, i))])


def index_team(n: int, rs: tuple[str, ...] | None = None) -> Team:
    """``{s_1, ..., s_n}`` over the index symbols."""
    rs = index_symbols(n) if rs is None else tuple(rs)
    width = len(rs)
    rows = ["".join(str(b) for b in _index_bits(rs, i)) for i in range(1, n + 1)]
    assert all(len(row) == width for row in rows)
    return Team.from_rows(rs, rows)


def quantifier_gadget(kind: str, guard: Formula, inner: Formula) -> Formula:
    """Quantifier step over a guard formula.

    With a dependence-atom guard this is the propositional-quantifier shape
    ``dep ∨ (dep ∧ ψ)`` / ``∼dep ⊗ (∼dep ⩣ ψ)``; with an index guard it is
    ``g ∨ ψ`` / ``∼g ⊗ ψ``.
    """
    if kind not in (EXISTS, FORALL):
        raise ValueError("kind must be 'E' or 'A'")
    if isinstance(guard, Dep):
        if kind == EXISTS:
            return Or(guard, And(guard, inner))
        return Tensor(ClassNeg(guard), IntDisj(ClassNeg(guard), inner))
    if kind == EXISTS:
        return Or(guard, inner)
    return Tensor(ClassNeg(guard), inner)


@dataclass(frozen=True)
class McInstance:
    team: Team
    formula: Formula


def tqbf_to_mc(q: QbfInstance, matrix_disjunction: str = "ovee", limit: int = REDUCTION_LIMIT) -> McInstance:
    """Build (T, φ) with ``q`` true iff ``T ⊨ φ``.

    ``matrix_disjunction="split"`` keeps the splitting ∨ in the matrix; that
    variant is for experiments only and is not a correct reduction.
    """
    if matrix_disjunction not in ("ovee", "split"):
        raise ValueError("matrix_disjunction must be 'ovee' or 'split'")
    n = len(q.prefix)
    if n > limit:
        raise LimitExceeded("QBF variables", n, limit)
    rs = index_symbols(n)
    index_of = {x: i for i, x in enumerate(q.variables, 1)}

    def matrix(f: Formula) -> Formula:
        if isinstance(f, NegProp):
            return index_neq(rs, index_of[f.name])
        if isinstance(f, Prop):
            return ClassNeg(index_neq(rs, index_of[f.name]))
        left, right = matrix(f.left), matrix(f.right)
        if isinstance(f, And):
            return And(left, right)
        return IntDisj(left, right) if matrix_disjunction == "ovee" else Or(left, right)

    phi = matrix(q.matrix)
    for i in range(n, 0, -1):
        kind, _ = q.prefix[i - 1]
        phi = quantifier_gadget(kind, index_eq(rs, i), phi)
    return McInstance(index_team(n, rs), phi)
