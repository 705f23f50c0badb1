"""Exception types shared across the package.

Arithmetic errors signal domain violations (non-units, unsupported
exponents) or resource bounds (denominator cap, scan bound).  Parse
errors carry the character position at which the input was rejected.
"""


class NotAUnit(ValueError):
    """Constant coefficient is 0, so the series has no inverse or root."""


class OddSupport(ValueError):
    """Plain-series square root requested but an odd exponent is present."""


class EvenK(ValueError):
    """Odd-root routine called with an even exponent."""


class DenominatorOverflow(OverflowError):
    """An operation needs a root-grid denominator above the configured cap."""


class Indistinguishable(ValueError):
    """All coefficients within precision are zero; cannot certify nonzero."""


class OutOfRange(ValueError):
    """Requested scan or oracle input exceeds the configured bound."""


class ParseError(ValueError):
    """Base class for element-text rejections; knows where it happened."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ElementSyntaxError(ParseError):
    """Input does not match the element grammar."""


class NonUnitLeadingTerm(ParseError):
    """The unit part of a factored element does not start with 1."""


class NonpositivePrecision(ParseError):
    """The O(.) term leaves no positive precision for the stated terms."""


class ExponentNotIncreasing(ParseError):
    """Term exponents are out of order or duplicated."""
