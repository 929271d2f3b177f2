"""Recursive-descent parser for the ASCII formula syntax.

Precedence, tightest first: ``~``/``!``, ``&``, ``|``, ``otimes``,
``ovee``, ``-->``.  The first four binary operators associate to the left,
``-->`` to the right.  ``#`` starts a comment running to end of line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityError, ParseError
from .formula import (
    KEYWORDS,
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

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<impl>-->)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()~!&|,;])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "op" or "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "ident":
            tokens.append(Token("ident", chunk, line, col))
        elif kind in ("impl", "punct"):
            tokens.append(Token("op", chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# binding levels, loosest first; each entry is (token text, constructor, right-assoc)
_LEVELS = [
    ("-->", IntImpl, True),
    ("ovee", IntDisj, False),
    ("otimes", Tensor, False),
    ("|", Or, False),
    ("&", And, False),
]


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None, cls=ParseError):
        tok = tok or self.tok
        return cls(message, tok.line, tok.column)

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def parse(self) -> Formula:
        if self.tok.kind == "eof":
            raise self.error("empty formula")
        f = self.binary(0)
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")
        return f

    def binary(self, level: int) -> Formula:
        if level == len(_LEVELS):
            return self.unary()
        op, cls, right_assoc = _LEVELS[level]
        left = self.binary(level + 1)
        if right_assoc:
            if self.tok.text == op:
                self.advance()
                return cls(left, self.binary(level))
            return left
        while self.tok.text == op:
            self.advance()
            left = cls(left, self.binary(level + 1))
        return left

    def unary(self) -> Formula:
        tok = self.tok
        if tok.text == "~":
            self.advance()
            return ClassNeg(self.unary())
        if tok.text == "!":
            self.advance()
            body = self.unary()
            if not isinstance(body, Prop):
                raise self.error("'!' applies only to a proposition symbol", tok)
            return NegProp(body.name)
        if tok.text == "(":
            self.advance()
            f = self.binary(0)
            self.expect(")")
            return f
        if tok.kind == "ident":
            if tok.text in ("dep", "ind", "inc", "max"):
                return self.atom()
            if tok.text in KEYWORDS:
                raise self.error(f"operator {tok.text!r} is missing its left operand")
            self.advance()
            return Prop(tok.text)
        found = tok.text or "end of input"
        raise self.error(f"expected a formula, found {found!r}")

    def tuple_(self, stops: tuple[str, ...]) -> list[str]:
        """Symbols separated by commas and/or whitespace, up to a stop token."""
        names = []
        while self.tok.text not in stops:
            tok = self.tok
            if tok.kind != "ident" or tok.text in KEYWORDS:
                found = tok.text or "end of input"
                raise self.error(f"expected a proposition symbol, found {found!r}")
            names.append(self.advance().text)
            if self.tok.text == ",":
                self.advance()
        return names

    def atom(self) -> Formula:
        head = self.advance()
        self.expect("(")
        groups = [self.tuple_((";", ")"))]
        while self.tok.text == ";":
            self.advance()
            groups.append(self.tuple_((";", ")")))
        self.expect(")")
        name = head.text
        try:
            if name == "dep":
                if len(groups) == 1:
                    # dep(x1,...,xn,y) as in the literature
                    *xs, y = groups[0] or [None]
                    groups = [xs, [y] if y else []]
                if len(groups) != 2 or len(groups[1]) != 1:
                    raise self.error("dep expects 'dep(x1,...,xn; y)'", head, ArityError)
                return Dep(tuple(groups[0]), groups[1][0])
            if name == "ind":
                if len(groups) != 3:
                    raise self.error("ind expects three tuples 'ind(p; q; r)'", head, ArityError)
                return Indep(*map(tuple, groups))
            if name == "inc":
                if len(groups) != 2:
                    raise self.error("inc expects two tuples 'inc(p; q)'", head, ArityError)
                return Incl(tuple(groups[0]), tuple(groups[1]))
            if len(groups) != 1:
                raise self.error("max expects one tuple 'max(x1,...,xn)'", head, ArityError)
            return Max(tuple(groups[0]))
        except ArityError as exc:
            if exc.line:
                raise
            raise self.error(exc.message, head, ArityError) from None


def parse(text: str) -> Formula:
    """Parse formula text into an AST, raising :class:`ParseError` on bad input."""
    return _Parser(text).parse()
