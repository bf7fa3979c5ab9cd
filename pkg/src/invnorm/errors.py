"""Semantic exception hierarchy shared by all modules."""


class InvnormError(ValueError):
    """Base class for all invnorm errors."""


class DomainError(InvnormError):
    """An argument is outside the mathematical domain of the operation."""


class UsageError(InvnormError):
    """An operation was called with a method tag of the wrong kind."""


class ConfigError(InvnormError):
    """A grid or configuration object violates its invariants."""
