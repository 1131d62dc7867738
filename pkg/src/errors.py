"""
Exceptions for the Gorenstein Algebra Verifier
Every error raised by the library derives from AlgebraError
"""


class AlgebraError(Exception):
    """Base class for all verifier errors"""


class FieldError(AlgebraError):
    """Invalid field selector, non-prime modulus or mixed fields"""


class ContextMismatchError(AlgebraError):
    """Operands live in different variable contexts"""


class PolynomialSyntaxError(AlgebraError):
    """Malformed polynomial text"""

    def __init__(self, message: str, position: int = -1):
        self.position = position
        if position >= 0:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ZeroPolynomialError(AlgebraError):
    """Operation is undefined on the zero polynomial"""


class ExponentOverflowError(AlgebraError):
    """Exponent exceeds the machine-width bound"""


class BlockInvariantError(AlgebraError):
    """Division would need to invert a coefficient-block polynomial"""


class NotCertifiedError(AlgebraError):
    """Gröbner basis has not passed the Buchberger criterion"""


class InfiniteDimensionalError(AlgebraError):
    """Quotient by the ideal is not finite-dimensional"""


class NotLocalError(AlgebraError):
    """Algebra has no maximal-ideal descriptor"""


class CharacteristicError(AlgebraError):
    """Field characteristic makes a required denominator vanish"""


class NonNilpotentError(AlgebraError):
    """Element is not in the maximal ideal"""


class FunctionalError(AlgebraError):
    """Invalid hyperplane functional"""


class OracleBoundError(AlgebraError):
    """Algebra too large for the full Leibniz oracle"""


class BudgetExceededError(AlgebraError):
    """Runtime budget exhausted"""


class ConfigError(AlgebraError):
    """Invalid run configuration"""


class IdealFileError(AlgebraError):
    """Malformed ideal input file"""
