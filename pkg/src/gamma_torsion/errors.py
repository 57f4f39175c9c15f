"""Exception types carrying machine-readable codes.

Every error raised by the engines derives from :class:`GammaError` and has a
``code`` string (``PARSE_ERROR``, ``NOT_CYCLOTOMIC``...). The CLI maps codes to
exit statuses.
"""


class GammaError(Exception):
    code = "ERROR"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        out = {"code": self.code, "message": str(self)}
        out.update({k: str(v) for k, v in self.details.items()})
        return out


class ZeroPolynomialError(GammaError, ValueError):
    code = "ZERO_POLYNOMIAL"


class DivisionByZeroError(GammaError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class InexactDivisionError(GammaError, ArithmeticError):
    code = "INEXACT_DIVISION"


class BothZeroError(GammaError, ValueError):
    code = "BOTH_ZERO"


class NotCyclotomicError(GammaError, ValueError):
    """Raised with the partial factorization and the residual factor."""

    code = "NOT_CYCLOTOMIC"

    def __init__(self, message="", residual=None, partial=None):
        super().__init__(message)
        self.residual = residual
        self.partial = partial
        if residual is not None:
            self.details["residual"] = residual


class ParseError(GammaError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message, position, expected, text=""):
        super().__init__(f"{message} at offset {position} (expected {expected})")
        self.position = position
        self.expected = expected
        self.text = text
        self.details.update(position=position, expected=expected)


class NotSquareError(GammaError, ValueError):
    code = "NOT_SQUARE"


class ShapeMismatchError(GammaError, ValueError):
    code = "SHAPE_MISMATCH"


class NotAComplexError(GammaError, ValueError):
    code = "NOT_A_COMPLEX"

    def __init__(self, message="", degree=None):
        super().__init__(message)
        self.degree = degree
        self.details["degree"] = degree


class NotTorsionError(GammaError, ValueError):
    code = "NOT_TORSION"


class MissingHomologyBasisError(GammaError, ValueError):
    code = "MISSING_HOMOLOGY_BASIS"


class DegenerateBasisError(GammaError, ValueError):
    code = "DEGENERATE_BASIS"


class ZeroInputError(GammaError, ValueError):
    code = "ZERO_INPUT"


class NonIntegerError(GammaError, ArithmeticError):
    code = "NON_INTEGER"


class NegativeMuError(GammaError, ValueError):
    code = "NEGATIVE_MU"


class DivisibilityViolationError(GammaError, ValueError):
    code = "DIVISIBILITY_VIOLATION"


class BoundViolationError(GammaError, ValueError):
    code = "BOUND_VIOLATION"


class InputError(GammaError, ValueError):
    """Malformed or incomplete input record (dataset, matrix, basis file)."""

    code = "INPUT_ERROR"


class FileAccessError(InputError):
    code = "IO_ERROR"


class IdentityViolationError(GammaError, ArithmeticError):
    code = "IDENTITY_VIOLATION"
