"""Exception types shared across the engine.

Every failure mode of the public API is one of these; callers never see a
bare ValueError out of the arithmetic core.
"""


class QweierError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QweierError):
    """An argument is outside the mathematical domain of the operation
    (odd weight, nonpositive level, elliptic order < 1, ...)."""


class ShapeError(QweierError):
    """Matrix dimensions do not fit the requested operation."""


class DivisionByZeroSeries(QweierError):
    """Division by a series that is identically zero at its stored precision."""


class ValuationError(QweierError):
    """exact_div requires valuation(divisor) <= valuation(dividend)."""


class PrecisionError(QweierError):
    """The stored precision is too small to certify the requested result."""


class EmptyInput(QweierError):
    """An operation received an empty list where at least one element is required."""


class DependentInput(QweierError):
    """Input series are linearly dependent at the available precision.

    This signals either true linear dependence or insufficient precision;
    the message always names both possibilities.
    """


class NotInSpace(QweierError):
    """A series failed the membership verification against a monomial basis."""


class ParseError(QweierError):
    """Malformed basis file; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class ValidationError(QweierError):
    """Basis file parsed but violates a structural invariant."""


class RankDeficit(QweierError):
    """Monomial rank fell short of the expected dimension on a curve where
    the span is guaranteed; indicates bad input data."""


class HyperellipticUnsupported(QweierError):
    """The monomial span is provably a proper subspace on this curve, so no
    Weierstrass verdict can be derived from it."""
