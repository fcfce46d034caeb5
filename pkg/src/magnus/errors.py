"""Exception hierarchy.

Two families matter to callers.  ``DomainError`` means the input was bad
(malformed text, violated invariant, non-homology cobordism, ...).
``CertificationError`` means a result that the library itself produced
failed its own self-check, which points at a bug rather than bad input.
The command line maps them to exit codes 1 and 2.
"""


class MagnusError(Exception):
    pass


class DomainError(MagnusError):
    pass


class ParseError(DomainError):
    def __init__(self, message, line=None, col=None):
        self.msg = message
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class InexactDivision(DomainError, ArithmeticError):
    pass


class InvariantViolation(DomainError):
    """An input object breaks a named structural invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)


class CertificationError(MagnusError):
    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)
