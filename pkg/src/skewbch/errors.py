"""Exception hierarchy shared by every module of the package."""


class SkewBCHError(Exception):
    """Base class for all errors raised by skewbch."""


class FieldMismatch(SkewBCHError, TypeError):
    pass


class DivisionByZero(SkewBCHError, ZeroDivisionError):
    pass


class ExpressionSyntaxError(SkewBCHError, ValueError):
    """Malformed element, polynomial or spec-file text."""


class NotIrreducible(SkewBCHError, ValueError):
    pass


class OrderNotFound(SkewBCHError, ValueError):
    pass


class NotInjective(SkewBCHError, ValueError):
    pass


class NotNormalBasis(SkewBCHError, ValueError):
    pass


class BadDelta(SkewBCHError, ValueError):
    pass


class SearchExhausted(SkewBCHError, RuntimeError):
    pass


class LengthMismatch(SkewBCHError, ValueError):
    pass


class TooManyMinors(SkewBCHError, ValueError):
    pass


class SingularSystem(SkewBCHError, ArithmeticError):
    pass


class NoPositionFound(SkewBCHError, RuntimeError):
    pass


class KeyEquationFailure(SkewBCHError):
    """REEA produced only a proper left divisor of the error locator."""


class UndecodableWord(SkewBCHError):
    """The received word is not within the correction radius."""


class SpecValidationError(SkewBCHError, ValueError):
    """A code specification violates a structural invariant."""


class ZeroErrorValue(SkewBCHError, ArithmeticError):
    """Value solving produced a zero error value at a located position."""
