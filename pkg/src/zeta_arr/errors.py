"""Exception hierarchy. Each family maps to one CLI exit code."""


class ZetaArrError(Exception):
    exit_code = 1


class ParseError(ZetaArrError):
    """Malformed input file or JSON schema violation."""

    exit_code = 2


class PreconditionError(ZetaArrError, ValueError):
    """A mathematical precondition failed (loops, rank deficiency, w outside the fan, ...)."""

    exit_code = 3


class BadPrimeError(PreconditionError):
    pass


class BudgetExceededError(ZetaArrError):
    exit_code = 4


class VerificationError(ZetaArrError):
    exit_code = 5
