from typing import Optional


class GjxError(Exception):
    """Base class of every error raised by gjx."""


class InvalidArgumentError(GjxError, ValueError):
    """Raised when an invalid argument is passed to a function or method."""

    def __init__(self, message):
        """
        Initialize a new InvalidArgumentError with the specified error message.

        Args:
            message (str): The error message to display.
        """
        super().__init__(message)


class DimensionMismatchError(InvalidArgumentError):
    """Raised when index lists or operands have incompatible sizes."""


class IndexOutOfRangeError(DimensionMismatchError):
    """Raised when a 1-based index falls outside the dimension it addresses."""


class OracleLimitError(InvalidArgumentError):
    """Raised when an exhaustive oracle is asked to work beyond its configured size limit."""


class NotSquareError(InvalidArgumentError):
    """Raised when an operation needs a square matrix."""


class PivotNotNormalizedError(InvalidArgumentError):
    """Raised when a column-clearing step finds a pivot different from 1."""


class ZeroMatrixError(GjxError):
    """Raised when a matrix of rank 0 reaches an operation that needs rank >= 1."""

    def __init__(self, message: str = "the matrix is zero (rank 0)"):
        super().__init__(message)


class SingularMatrixError(GjxError):
    """Raised when an inverse is requested for a matrix of deficient rank."""


class ZeroPivotError(GjxError):
    """
    Raised when the diagonal pivot a^(2k)_{k+1,k+1} vanishes while the block below and to the right of it is
    still non-zero, so that a row or column exchange would be needed to continue.

    Attributes:
        k (int): The elimination stage, 0-based, at which the pivot vanished.
        position (int): The 1-based diagonal position k + 1 of the vanishing pivot.
    """

    def __init__(self, k: int, message: Optional[str] = None):
        self.k = k
        self.position = k + 1
        if message is None:
            message = (f"zero pivot at position ({self.position}, {self.position}) of A^({2 * k}) (k={k}); "
                       f"the matrix is not diagonally eliminable, run `gjx arrange` first")
        super().__init__(message)


class FormulaDivisionError(GjxError, ZeroDivisionError):
    """Raised when a minor-quotient formula would divide by a vanishing principal minor."""


class MatrixParseError(InvalidArgumentError):
    """Base class of the errors raised while reading the matrix text format."""


class EmptyInputError(MatrixParseError):
    """Raised when the input holds no matrix rows after comments and blank lines are dropped."""

    def __init__(self, message: str = "no matrix rows found in input"):
        super().__init__(message)


class RaggedRowsError(MatrixParseError):
    """Raised when the rows of a matrix text have different numbers of entries."""

    def __init__(self, line: int, expected: int, found: int):
        self.line = line
        self.expected = expected
        self.found = found
        super().__init__(f"line {line}: expected {expected} entries, found {found}")


class BadTokenError(MatrixParseError):
    """Raised when an entry does not follow the exact rational token grammar."""

    def __init__(self, line: int, column: int, token: str):
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"line {line}, column {column}: invalid entry {token!r}")


class ZeroDenominatorError(MatrixParseError):
    """Raised when a fraction entry has a zero denominator."""

    def __init__(self, line: int, column: int, token: str):
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"line {line}, column {column}: zero denominator in {token!r}")
