class SignedRankError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(SignedRankError):
    """A value lies outside the domain of an operation (rank range, digit bound, group membership)."""


class FormatError(SignedRankError):
    """Text or binary input could not be parsed."""


class NumberSystemOverflow(DomainError):
    """A natural does not fit in a finite, non-extendable number system."""
