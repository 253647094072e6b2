"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes, so library code should raise the most
specific class that applies.
"""


class BelyiError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTypeError(BelyiError, ValueError):
    """A combinatorial type violates one of its defining invariants."""


class UnsupportedTypeError(BelyiError):
    """A valid combinatorial type for which no closed-form map is in scope."""


class ConstructionError(BelyiError):
    """An internal consistency check failed while building a map."""


class ExactDivisionError(BelyiError, ArithmeticError):
    """An exact division over the integers left a remainder."""


class FactorizationError(BelyiError):
    """Integer factorization exceeded the configured trial-division bound.

    Raised instead of returning a possibly incomplete root set.
    """


class NotBelyiNormalizedError(BelyiError):
    """A separable map is not of the normalized single-cycle shape, so
    generalized ramification indices are undefined for it."""


class BadReductionError(BelyiError):
    """An operation requiring good reduction was called at a bad prime."""


class HypothesisError(BelyiError):
    """The degree/type hypothesis needed for a rigorous conclusion is unmet."""


class InternalConsistencyError(BelyiError):
    """A property that is a theorem for certified inputs failed to hold.

    Indicates a bug, never a user error.
    """
