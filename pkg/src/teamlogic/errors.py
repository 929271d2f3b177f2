"""Exception hierarchy shared by the package."""


class TeamLogicError(Exception):
    """Base class for all errors raised by teamlogic."""


class ParseError(TeamLogicError, ValueError):
    """Malformed formula, team file, or QBF text."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class ArityError(ParseError):
    """An atom was given tuples of the wrong shape."""


class LimitExceeded(TeamLogicError):
    """A configured size limit would be exceeded."""

    def __init__(self, limit: str, value: int, maximum: int):
        self.limit = limit
        self.value = value
        self.maximum = maximum
        super().__init__(f"limit '{limit}' exceeded: {value} > {maximum}")


class SplitBudgetExceeded(LimitExceeded):
    """A cover or subteam search was requested on a team that is too large."""


class FragmentError(TeamLogicError, ValueError):
    """The formula lies outside the fragment an operation requires."""


class UnknownVariable(TeamLogicError, KeyError):
    """A proposition symbol is missing from a team's domain."""

    def __str__(self) -> str:
        return Exception.__str__(self)
