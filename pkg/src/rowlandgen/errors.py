"""Exception types shared across the package.

Every error carries a short ``code`` string so callers (and the CLI exit-code
table) can dispatch without string matching on messages.
"""


class RowlandError(Exception):
    code = "ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DomainError(RowlandError, ValueError):
    code = "DOMAIN"


class SeedError(RowlandError, ValueError):
    """Seed parameters rejected. ``code`` is one of NOT_PRIME_GCD,
    SEED_MISMATCH, M_TOO_SMALL, NOT_PRIME."""

    code = "SEED"


class ValueOverflow(RowlandError, ArithmeticError):
    code = "OVERFLOW"

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class SearchExhausted(RowlandError):
    code = "SEARCH_EXHAUSTED"


class InsufficientRange(RowlandError):
    code = "INSUFFICIENT_RANGE"


class InvalidAnchor(RowlandError, ValueError):
    code = "INVALID_ANCHOR"


class NoLeap(RowlandError):
    code = "NO_LEAP"
