"""Assignments and teams over an ordered domain of proposition symbols.

A team over a domain ``D`` of size ``n`` is stored as a bitset ``mask`` over
the ``2**n`` assignments.  Assignment ``a`` (an integer) maps ``D[j]`` to bit
``j`` of ``a``, so the first domain symbol is the least significant bit.
Canonical order everywhere is ascending integer order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import LimitExceeded, ParseError, UnknownVariable

FULL_TEAM_LIMIT = 20
ALL_TEAMS_LIMIT = 4
COVERS_LIMIT = 16


def _check_domain(domain: Sequence[str]) -> tuple[str, ...]:
    domain = tuple(domain)
    if len(set(domain)) != len(domain):
        raise ValueError(f"duplicate symbols in domain {domain}")
    return domain


def bits_of(mask: int) -> Iterator[int]:
    """Set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in ascending order, from 0 to ``mask``."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class Assignment:
    domain: tuple[str, ...]
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if len(self.bits) != len(self.domain):
            raise ValueError("assignment needs one bit per domain symbol")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("assignment bits must be 0 or 1")

    @classmethod
    def from_index(cls, domain: Sequence[str], index: int) -> "Assignment":
        return cls(tuple(domain), tuple((index >> j) & 1 for j in range(len(domain))))

    @property
    def index(self) -> int:
        return sum(b << j for j, b in enumerate(self.bits))

    def __getitem__(self, p: str) -> int:
        try:
            return self.bits[self.domain.index(p)]
        except ValueError:
            raise UnknownVariable(f"{p!r} is not in the domain {self.domain}") from None

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class Team:
    domain: tuple[str, ...]
    mask: int = 0

    def __post_init__(self):
        object.__setattr__(self, "domain", _check_domain(self.domain))
        if self.mask < 0 or self.mask >> (1 << len(self.domain)):
            raise ValueError("team mask has bits outside the assignment space")

    @classmethod
    def from_rows(cls, domain: Sequence[str], rows: Iterable[str]) -> "Team":
        """Build a team from 0/1 strings written in domain order."""
        domain = _check_domain(domain)
        mask = 0
        for row in rows:
            if len(row) != len(domain) or set(row) - {"0", "1"}:
                raise ValueError(f"row {row!r} is not a 0/1 string of width {len(domain)}")
            mask |= 1 << sum(int(c) << j for j, c in enumerate(row))
        return cls(domain, mask)

    @classmethod
    def from_assignments(cls, domain: Sequence[str], members: Iterable[Assignment]) -> "Team":
        domain = _check_domain(domain)
        mask = 0
        for s in members:
            if s.domain != domain:
                raise ValueError("assignment domain differs from team domain")
            mask |= 1 << s.index
        return cls(domain, mask)

    def indices(self) -> list[int]:
        return list(bits_of(self.mask))

    @property
    def members(self) -> list[Assignment]:
        return [Assignment.from_index(self.domain, a) for a in bits_of(self.mask)]

    def rows(self) -> list[str]:
        return [str(s) for s in self.members]

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[Assignment]:
        return iter(self.members)

    def __contains__(self, s: Assignment) -> bool:
        return s.domain == self.domain and bool(self.mask >> s.index & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def with_mask(self, mask: int) -> "Team":
        return Team(self.domain, mask)

    def issubteam(self, other: "Team") -> bool:
        return self.domain == other.domain and self.mask & ~other.mask == 0

    def union(self, other: "Team") -> "Team":
        if self.domain != other.domain:
            raise ValueError("teams have different domains")
        return Team(self.domain, self.mask | other.mask)

    def extend(self, symbols: Sequence[str], value: int = 0) -> "Team":
        """Add fresh symbols to the domain, all mapped to ``value`` in every member."""
        new = [p for p in symbols if p not in self.domain]
        domain = self.domain + tuple(new)
        shift = len(self.domain)
        high = ((1 << len(new)) - 1) << shift if value else 0
        mask = 0
        for a in bits_of(self.mask):
            mask |= 1 << (a | high)
        return Team(domain, mask)

    def to_text(self) -> str:
        """Render in the team file format."""
        lines = [" ".join(self.domain)] + self.rows()
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return "{" + ", ".join(self.rows()) + "}"


def full_team(domain: Sequence[str], limit: int = FULL_TEAM_LIMIT) -> Team:
    """The team of all ``2**|domain|`` assignments."""
    domain = _check_domain(domain)
    if len(domain) > limit:
        raise LimitExceeded("full-team variables", len(domain), limit)
    return Team(domain, (1 << (1 << len(domain))) - 1)


def all_teams(domain: Sequence[str], limit: int = ALL_TEAMS_LIMIT) -> Iterator[Team]:
    """Every team over ``domain``, the empty team first, in ascending bitmask order."""
    domain = _check_domain(domain)
    if len(domain) > limit:
        raise LimitExceeded("brute-force variables", len(domain), limit)
    for mask in range(1 << (1 << len(domain))):
        yield Team(domain, mask)


def cover_masks(mask: int) -> Iterator[tuple[int, int]]:
    """Pairs ``(y, z)`` of submasks with ``y | z == mask``, ascending in y then z."""
    for y in submasks(mask):
        rest = mask & ~y
        for w in submasks(y):
            yield y, rest | w


def covers(x: Team, limit: int = COVERS_LIMIT) -> Iterator[tuple[Team, Team]]:
    """Every ordered pair of subteams whose union is ``x``; overlap is allowed."""
    if len(x) > limit:
        raise LimitExceeded("cover team size", len(x), limit)
    for y, z in cover_masks(x.mask):
        yield x.with_mask(y), x.with_mask(z)


def project(x: Team, symbols: Sequence[str]) -> Team:
    """Restrict every member of ``x`` to ``symbols``; duplicates collapse."""
    symbols = _check_domain(symbols)
    missing = [p for p in symbols if p not in x.domain]
    if missing:
        raise UnknownVariable(f"{missing[0]!r} is not in the domain {x.domain}")
    positions = [x.domain.index(p) for p in symbols]
    mask = 0
    for a in bits_of(x.mask):
        b = 0
        for k, j in enumerate(positions):
            b |= ((a >> j) & 1) << k
        mask |= 1 << b
    return Team(symbols, mask)


def parse_team(text: str) -> Team:
    """Parse the team file format.

    The first non-comment line lists the domain; every further line is a
    0/1 string of that width.  ``#`` comments run to end of line.
    """
    lines = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((n, line))
    if not lines:
        raise ParseError("team file has no header line")
    domain = tuple(lines[0][1].split())
    if len(set(domain)) != len(domain):
        raise ParseError("duplicate symbol in team header", lines[0][0], 1)
    rows = []
    for n, line in lines[1:]:
        row = "".join(line.split())
        if len(row) != len(domain) or set(row) - {"0", "1"}:
            raise ParseError(f"expected a 0/1 row of width {len(domain)}, got {line!r}", n, 1)
        rows.append(row)
    return Team.from_rows(domain, rows)


def read_team(path: str | Path) -> Team:
    return parse_team(Path(path).read_text(encoding="utf-8"))
