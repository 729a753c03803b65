"""Exception hierarchy.

Errors raised while reading user input (construction, parsing) derive from
:class:`InputError` and may carry a 1-based ``line``/``col`` position.
"""

from __future__ import annotations


class HyperfuzzError(Exception):
    """Base class for every error raised by this package."""


class InputError(HyperfuzzError, ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(self.__str__())

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.line}:{self.col}: {self.message}"


# -- carrier / table construction ------------------------------------------

class EmptyCarrier(InputError):
    pass


class DuplicateName(InputError):
    pass


class InvalidName(InputError):
    pass


class UnknownElement(InputError):
    pass


class MissingCell(InputError):
    pass


class DuplicateCell(InputError):
    pass


class EmptyCell(InputError):
    pass


class EmptySet(EmptyCell):
    """Empty right-hand side in a ``.hg`` cell line."""


# -- grades and fuzzy subsets ----------------------------------------------

class GradeOutOfRange(InputError):
    pass


class ZeroDenominator(InputError):
    pass


class MissingElement(InputError):
    pass


class DuplicateElement(InputError):
    pass


class FormatSyntaxError(InputError):
    """Malformed line in a ``.hg`` or ``.fz`` document."""


# -- misuse of the algebra -------------------------------------------------

class EmptyOperand(HyperfuzzError, ValueError):
    pass


class CarrierMismatch(HyperfuzzError, ValueError):
    pass


class NotAssociative(HyperfuzzError, ValueError):
    pass


class BudgetExceeded(HyperfuzzError, ValueError):
    pass
