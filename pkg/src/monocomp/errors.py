"""Exception types shared across the package.

The CLI maps these onto process exit codes: PreconditionError -> 2,
BudgetExceeded -> 3, VerificationError -> 4.
"""

from __future__ import annotations


class PreconditionError(ValueError):
    """Input rejected before any search ran (malformed or out of contract)."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search hit its node budget before completing.

    Distinct from a value on purpose: callers must not confuse a truncated
    search with an exact answer.  ``visited`` is the number of states the
    search evaluated, ``best_so_far`` the incumbent when it gave up (None if
    no complete candidate was seen).
    """

    def __init__(self, message: str, visited: int = 0, best_so_far=None):
        super().__init__(message)
        self.visited = visited
        self.best_so_far = best_so_far


class VerificationError(RuntimeError):
    """A produced witness or report failed its independent re-check."""


class InternalCheckError(AssertionError):
    """A proof-transcription invariant failed on an input that satisfied the
    declared preconditions.  Carries a serialized instance for reproduction;
    never meant to be caught.
    """

    def __init__(self, message: str, dump: str = ""):
        if dump:
            message = f"{message}\ninstance dump:\n{dump}"
        super().__init__(message)
        self.dump = dump
