"""Error classes raised by the library

All of them are ``ValueError`` subclasses so callers that only care about
"bad input" can catch a single type. The CLI maps them to exit code 1.
"""

from typing import Tuple


class ConjcalcError(ValueError):
    """Base class of every domain error"""


class ShapeMismatch(ConjcalcError):
    pass


class NonAssociative(ConjcalcError):
    """Raised with the first triple (in lexicographic order) that fails"""

    def __init__(self, a: int, b: int, c: int, detail: str = "") -> None:
        self.triple: Tuple[int, int, int] = (a, b, c)
        message = f"Table is not associative at triple ({a}, {b}, {c})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class BudgetExceeded(ConjcalcError):
    pass


class TooLarge(ConjcalcError):
    pass


class IncompatiblePartition(ConjcalcError):
    pass


class NotAGroup(ConjcalcError):
    pass


class InvalidSandwich(ConjcalcError):
    pass


class HasZeroEntries(ConjcalcError):
    pass


class NotNormalized(ConjcalcError):
    pass


class NotLinked(ConjcalcError):
    pass


class NotClosed(ConjcalcError):
    pass


class NotPermutation(ConjcalcError):
    pass


class NotInjective(ConjcalcError):
    pass


class NotSurjective(ConjcalcError):
    pass


class InvalidGraph(ConjcalcError):
    """Unknown vertex, duplicate name or non-composable path"""
