"""Exception hierarchy.

``ValidationError`` subclasses describe bad input (CLI exit code 2);
``ResidueTooLarge`` and ``RepairDidNotConverge`` are runtime failures.
"""


class SurrogateError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SurrogateError, ValueError):
    """Input violates a documented precondition."""


class TooShort(ValidationError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"series needs at least 2 samples, got {n}")


class NonFinite(ValidationError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"non-finite value at index {index}")


class EmptySeries(ValidationError):
    def __init__(self):
        super().__init__("series is empty")


class LengthMismatch(ValidationError):
    def __init__(self, a, b):
        self.lengths = (a, b)
        super().__init__(f"length mismatch: {a} != {b}")


class MOutOfRange(ValidationError):
    def __init__(self, m, n):
        self.m = m
        self.n = n
        bound = "floor(N/2)" if n is None else f"floor(N/2) = {n // 2}"
        super().__init__(f"m must satisfy 0 < m <= {bound}, got m={m}")


class NotRealSymmetric(ValidationError):
    """Spectrum lacks the conjugate symmetry of a real signal."""


class InvalidConfig(ValidationError):
    """A GeneratorConfig or model field is out of range."""


class PreconditionError(ValidationError):
    """Input cannot be processed by the requested operation."""


class LagOutOfRange(ValidationError):
    def __init__(self, lag, n):
        super().__init__(f"max_lag must satisfy 1 <= max_lag < N={n}, got {lag}")


class ConstantSeries(ValidationError):
    def __init__(self):
        super().__init__("series is constant (zero variance)")


class SingularSystem(ValidationError):
    """Yule-Walker Toeplitz system could not be solved."""


class ColumnNotFound(ValidationError):
    def __init__(self, column):
        self.column = column
        super().__init__(f"column not found: {column!r}")


class ParseError(ValidationError):
    def __init__(self, row, text=""):
        self.row = row
        super().__init__(f"cannot parse value {text!r} at data row {row}")


class MissingData(ValidationError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"missing value at data row {row}")


class AllMissing(ValidationError):
    def __init__(self):
        super().__init__("column contains no finite values")


class ResidueTooLarge(SurrogateError, ArithmeticError):
    def __init__(self, residue, limit):
        self.residue = residue
        self.limit = limit
        super().__init__(f"imaginary residue {residue:.3e} exceeds {limit:.3e}")


class RepairDidNotConverge(SurrogateError, RuntimeError):
    def __init__(self, remaining, iterations, index=None):
        self.remaining = remaining
        self.iterations = iterations
        self.index = index
        where = "" if index is None else f" (surrogate {index})"
        super().__init__(
            f"non-negative repair stopped after {iterations} iterations with "
            f"{remaining} negative values left{where}"
        )
