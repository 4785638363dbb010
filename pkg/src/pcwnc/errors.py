"""Exception types shared across the package."""


class ProfileError(ValueError):
    """Malformed profile text or an inconsistent set of votes."""


class UndecidedError(RuntimeError):
    """No polynomial method applies and the exhaustive fallback is too large.

    Raised instead of guessing an answer.
    """


class SearchBudgetExceeded(UndecidedError):
    """An exhaustive search ran out of its node budget before finishing."""


class InvariantError(RuntimeError):
    """An internal consistency check failed (a bug, never a user error)."""
