"""Exception taxonomy shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the range for which a formula is valid."""


class AccuracyError(RuntimeError):
    """The requested accuracy is not achievable with the configured method."""


class CertificationError(RuntimeError):
    """A computed zero census cannot be reconciled with its count certificate."""


class HeightError(ValueError):
    """A query needs zero data above the height the table certifies."""


class CoverageError(ValueError):
    """A stepping argument has holes in the grid it needs to cover."""


class LimitError(ValueError):
    """A sieve query exceeds the configured limit."""
