"""Exception hierarchy shared by every module."""


class GenknotError(Exception):
    """Base class for all library errors."""


class FieldMismatch(GenknotError, ValueError):
    """Operands live in different fields or groups."""


class PreconditionError(GenknotError, ValueError):
    """An operation was called outside its documented domain."""


class HypothesisError(PreconditionError):
    """A structural hypothesis (e.g. a coprimality condition) fails.

    ``details`` carries machine-readable data about the offending input.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}


class BudgetExceeded(GenknotError, RuntimeError):
    """A search would examine more nodes than the configured budget allows."""

    def __init__(self, message, nodes=None, budget=None):
        super().__init__(message)
        self.nodes = nodes
        self.budget = budget


class TheoremViolation(GenknotError, AssertionError):
    """A machine check contradicted a proven statement; this is always a bug."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate
