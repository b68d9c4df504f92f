"""Exception hierarchy shared by all arithdyn modules."""


class ArithdynError(Exception):
    """Base class for domain and precondition failures."""


class SingularCurveError(ArithdynError):
    """The Weierstrass coefficients define a singular cubic."""


class UnitRootError(ArithdynError):
    """A multiplier that is a root of unity was supplied where forbidden."""


class PrecisionExhaustedError(ArithdynError):
    """Not enough tracked digits remain to certify the requested result."""


class UnsupportedReductionError(ArithdynError):
    """Local height requested at a prime where the point reduces singularly."""


class AdmissibilityError(ArithdynError):
    """Point fails the positivity conditions required to assemble a system."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class EnumerationBudgetError(ArithdynError):
    """An enumeration would exceed the configured candidate budget."""


class RefinementError(ArithdynError):
    """Root isolation or refinement could not reach the requested accuracy."""


class InvariantViolationError(ArithdynError):
    """Two independent computation routes disagreed beyond tolerance."""
