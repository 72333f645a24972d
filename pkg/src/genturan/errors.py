"""Exception types shared across the package.

Each maps to a CLI exit code (see :mod:`genturan.cli`).
"""


class GenTuranError(Exception):
    exit_code = 1


class ArgumentError(GenTuranError, ValueError):
    """Invalid parameters or preconditions."""

    exit_code = 2


class InfeasibleError(ArgumentError):
    """The requested object does not exist for these parameters."""


class CapacityError(GenTuranError):
    """Input exceeds a configured size limit."""

    exit_code = 3


class ParseError(ArgumentError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ConsistencyError(GenTuranError):
    """An internal invariant failed. Always a bug or a refuted prediction."""

    exit_code = 4
