from typing import Any, List, Optional


class HullforgeError(Exception):
    """Base class for every error raised by hullforge."""


class InputError(HullforgeError, ValueError):
    """Arguments that an operation cannot accept."""


class FieldError(InputError):
    """Invalid field parameters, or a form the field does not support."""


class ShapeError(InputError):
    """Matrix dimensions do not fit the requested operation."""


class CodeFileError(InputError):
    """Malformed code file."""

    def __init__(self, message: str, row_indices: Optional[List[int]] = None):
        super().__init__(message)
        self.row_indices = list(row_indices or [])


class BudgetExceeded(HullforgeError):
    """An enumeration would visit more codewords than the budget allows."""

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        super().__init__(
            f"{what} needs {required} codewords, budget is {budget}")
        self.required = required
        self.budget = budget


class UndecidedError(BudgetExceeded):
    """No shortcut applies and enumeration is over budget."""


class DomainRefusal(HullforgeError):
    """The operation does not apply to this (valid) input."""


class CharacteristicError(DomainRefusal):
    """Operation restricted to a characteristic or field size the input lacks."""


class NotLcdError(DomainRefusal):
    """Orthogonal basis requested for a code with a nonzero hull."""

    def __init__(self, ell: int):
        super().__init__(f"code is not LCD: hull dimension is {ell}")
        self.ell = ell


class NotMaximalHullError(DomainRefusal):
    """The hull is not maximal self-orthogonal in the code."""


class VerificationError(HullforgeError):
    """An internal cross-check failed."""

    def __init__(self, message: str, evidence: Any = None):
        super().__init__(message)
        self.evidence = evidence
