"""Exception types shared across the package."""


class PosetCodesError(Exception):
    """Base class for all library errors."""


class InputError(PosetCodesError, ValueError):
    """Invalid argument or unparseable input."""


class RangeError(InputError):
    """An element, index, or parameter is outside its allowed range."""


class CycleError(InputError):
    """Cover relations close into a cycle, violating antisymmetry."""


class EmptyInputError(InputError):
    """A nonempty sequence was required."""


class FieldMismatch(InputError):
    """Operands belong to different finite fields."""


class LengthMismatch(InputError):
    """Vector or matrix dimensions are inconsistent."""


class RankError(InputError):
    """Requested subspace dimension is out of range."""


class PreconditionViolated(InputError):
    """A documented operation precondition does not hold."""


class ChainConditionUnsatisfied(PosetCodesError):
    """No maximal flag achieves the weight hierarchy."""


class BudgetExceeded(PosetCodesError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, message, *, count=None, budget=None, r=None):
        super().__init__(message)
        self.count = count
        self.budget = budget
        self.r = r
