"""
Error types for the zero-error adder toolkit.

Every failure the library raises derives from AdderBoundsError, which is a
ValueError so that pydantic validators and callers catching ValueError keep
working unchanged.
"""

from typing import Optional


class AdderBoundsError(ValueError):
    """Base class for all library errors"""


class DomainError(AdderBoundsError):
    """An argument lies outside the domain of a formula"""


class SingularityError(DomainError):
    """A formula divides by zero at the requested point"""


class LengthMismatchError(AdderBoundsError):
    """Two codebooks (or a codebook and a coordinate set) disagree on n"""


class BudgetExceededError(AdderBoundsError):
    """An exhaustive computation was asked for beyond its size limit"""


class PreconditionError(AdderBoundsError):
    """Inputs do not satisfy the preconditions of a construction"""


class MalformedSystemError(AdderBoundsError):
    """A zero-error system has non-uniform lengths or cardinalities"""


class CodebookParseError(AdderBoundsError):
    """A codebook or system file could not be parsed"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
