class ManipulabilityError(Exception):
    """Base class for every error the toolkit raises on bad input."""


class DomainError(ManipulabilityError):
    """Raised when a value lies outside the supported range (candidate ceiling, ballot shape)."""


class RuleError(DomainError):
    """Raised for malformed rule strings or a k that does not fit the election."""


class BudgetExceeded(DomainError):
    """Raised before an enumeration starts when it would exceed the configured budget."""

    def __init__(self, count, budget, what='profiles'):
        self.count = count
        self.budget = budget
        super().__init__(f'{count} {what} exceed the enumeration budget of {budget}')


class ProfileFormatError(ManipulabilityError):
    """Raised when a JSON profile document cannot be parsed; the message names the field."""


class ParameterError(ManipulabilityError):
    """Raised when witness parameters violate a construction's preconditions."""
