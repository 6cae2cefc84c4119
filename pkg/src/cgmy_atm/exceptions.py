"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument falls outside the domain where a function is defined."""


class InvalidParameterError(ValueError):
    """Model or configuration parameters violate their validity bounds.

    ``violations`` lists one message per violated constraint.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class UnsupportedOrderError(ValueError):
    """Requested expansion order has no closed form in this regime."""


class NumericalQualityError(ArithmeticError):
    """A numerical result failed an internal quality check."""
