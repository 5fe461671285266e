"""Exception types shared across the package."""


class StratEulerError(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatchError(StratEulerError):
    """Two group values from different ambient groups were combined."""


class ValidationError(StratEulerError):
    """Input data violates a structural precondition."""


class EmptySpaceError(ValidationError):
    """A construction received a space with nothing in it."""


class UnknownStratumError(ValidationError):
    """A stratum id was not found in the stratified space."""


class RingMismatchError(ValidationError):
    """Operands belong to different coefficient rings."""


class NonInvertibleError(ValidationError):
    """The class has no Laurent-polynomial inverse.

    Raised when a normal-bundle Euler class contains a weight-zero
    direction, or more generally when no single leading scalar term
    exists to expand a finite geometric series against.
    """


class SplitValidationError(ValidationError):
    """A fixed/moving designation disagrees with the actual weights."""


class ProblemParseError(StratEulerError):
    """A problem file could not be read or does not match the schema."""


class ConsistencyViolationError(StratEulerError):
    """Fiber data disagrees along a closure relation of the base space."""

    def __init__(self, lower_id: str, upper_id: str, message: str | None = None):
        self.lower_id = lower_id
        self.upper_id = upper_id
        detail = message or (
            f"fiber over stratum {lower_id!r} does not restrict to the fiber "
            f"over stratum {upper_id!r} in its closure"
        )
        super().__init__(detail)


class PoleCancellationError(StratEulerError):
    """An integral expected to be a pure number kept nonzero u-powers."""

    def __init__(self, value, message: str | None = None):
        self.value = value
        powers = getattr(value, "residue_powers", lambda: ())()
        detail = message or (
            f"nonzero residue at u-powers {list(powers)}: inconsistent input data"
        )
        super().__init__(detail)
