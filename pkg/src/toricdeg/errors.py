"""Exception hierarchy.

``DomainError`` subclasses signal mathematically invalid requests (the CLI maps
them to exit code 2); malformed input raises ``ValueError`` (exit code 1).
"""


class DomainError(Exception):
    """A well-formed request that has no answer on the given surface."""


class NotPseudoEffectiveError(DomainError):
    pass


class NotBigError(DomainError):
    pass


class DegenerateBodyError(DomainError):
    pass


class TheoryLimitedError(DomainError):
    """The requested criterion is not available on this surface (X7, X8)."""


class InvalidCurveClassError(DomainError):
    pass


class HypothesisError(DomainError):
    """A precondition of a geometric statement fails (e.g. -K - C not big and nef)."""


class UnverifiedSemigroupError(DomainError):
    pass


class DimensionMismatchError(ValueError):
    pass
