"""Exception types shared across the package.

The command line front end maps these onto exit codes: bad user input
(DomainError) exits 1, a violated internal identity (InternalCheckError)
exits 2.
"""


class DomainError(ValueError):
    """Input outside the supported domain (bad genus, odd degree, ...)."""


class InternalCheckError(RuntimeError):
    """A built-in cross-check failed; indicates a bug, not bad input."""


class DivisionRemainderError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = remainder
