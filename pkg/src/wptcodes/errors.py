"""Exception types shared across the package."""


class WptError(Exception):
    """Base class for all library errors."""


class NotPrime(WptError):
    """Modulus is not a prime number."""


class ZeroInverse(WptError):
    """Attempted to invert (or raise to a negative power) the zero element."""


class ZeroElement(WptError):
    """Operation requires a nonzero field element."""


class NotCoprime(WptError):
    """Integers were expected to have gcd 1."""


class UnsupportedWeight(WptError):
    """Operation requires the leading weight to be 1."""


class PreconditionFailed(WptError):
    """Operation requires the leading weight to divide q - 1."""


class TooLarge(WptError):
    """Exhaustive enumeration would exceed the configured budget."""


class OutOfRange(WptError):
    """Argument outside its documented range."""


class EmptyCode(WptError):
    """The code has no nonzero codeword, so minimum distance is undefined."""


class BudgetExceeded(WptError):
    """Exhaustive codeword search would exceed the evaluation budget.

    Carries the required number of weight evaluations so callers can fall
    back to closed formulas or bounds.
    """

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"exhaustive search needs {required} weight evaluations, budget is {budget}"
        )
        self.required = required
        self.budget = budget
