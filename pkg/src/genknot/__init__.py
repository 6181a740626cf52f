"""Exact group-theoretic computations separating the square and granny knots.

The building blocks are finite fields, PSL(2, q), the groups D(q, r) and
the wreath products H(p, q, r); on top of them sit homomorphism counting,
the n-th root and orbit analysis, and exhaustive verification suites.
"""
__version__ = "0.1.0"

from .errors import (BudgetExceeded, FieldMismatch, GenknotError, HypothesisError,
                     PreconditionError, TheoremViolation)

__all__ = [
    "__version__",
    "BudgetExceeded",
    "FieldMismatch",
    "GenknotError",
    "HypothesisError",
    "PreconditionError",
    "TheoremViolation",
]
