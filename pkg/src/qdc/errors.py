"""Exception hierarchy shared by every qdc module."""


class QdcError(ValueError):
    """Base class for all errors raised by qdc."""


class ShapeError(QdcError):
    """Invalid register shape, or two states with mismatched shapes."""


class CapExceeded(ShapeError):
    """Total register dimension is larger than the configured cap."""


class LabelError(QdcError):
    """A Bell/Weyl label, digit or particle index is out of range."""


class NonUnitaryError(QdcError):
    pass


class PlanError(QdcError):
    """Malformed sender plan, or a message that violates the plan."""


class AmbiguousState(QdcError):
    """The state is not (up to phase) a single generalized Bell state."""

    def __init__(self, message, fidelity):
        super().__init__(message)
        self.fidelity = fidelity


class DecodeCollision(QdcError):
    """Two messages of a plan encode to the same Bell state."""


class BudgetExceeded(QdcError):
    """An enumeration would visit more items than its budget allows."""
