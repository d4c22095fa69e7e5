"""Domain error hierarchy. Every error the library raises subclasses EffvecError."""

from __future__ import annotations


class EffvecError(Exception):
    """Base class for all domain errors raised by this package."""

    def payload(self) -> dict:
        """Machine-readable form, used by the CLI for stderr output."""
        return {"error": type(self).__name__, "detail": str(self)}


class NotSquare(EffvecError):
    def __init__(self, shape):
        self.shape = tuple(shape)
        super().__init__(f"matrix must be square, got shape {self.shape}")


class BadDimension(EffvecError):
    def __init__(self, n: int, detail: str = ""):
        self.n = n
        msg = f"unsupported dimension n={n}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class NonPositiveEntry(EffvecError):
    def __init__(self, i: int, j: int | None, value: float):
        self.i, self.j, self.value = i, j, value
        where = f"({i},{j})" if j is not None else f"{i}"
        super().__init__(f"entry {where} must be strictly positive, got {value!r}")


class NonUnitDiagonal(EffvecError):
    def __init__(self, i: int, value: float):
        self.i, self.value = i, value
        super().__init__(f"diagonal entry ({i},{i}) must equal 1, got {value!r}")


class ReciprocityViolation(EffvecError):
    def __init__(self, i: int, j: int, a_ij: float, a_ji: float):
        self.i, self.j, self.a_ij, self.a_ji = i, j, a_ij, a_ji
        super().__init__(
            f"entries ({i},{j})={a_ij!r} and ({j},{i})={a_ji!r} are not reciprocal"
        )


class DimensionMismatch(EffvecError):
    def __init__(self, expected: int, got: int, what: str = "operand"):
        self.expected, self.got = expected, got
        super().__init__(f"{what} has size {got}, expected {expected}")


class EmptyIndexSet(EffvecError):
    def __init__(self):
        super().__init__("index set must be nonempty")


class IndexOutOfRange(EffvecError):
    def __init__(self, index: int, n: int):
        self.index, self.n = index, n
        super().__init__(f"index {index} outside valid range 1..{n}")


class SeedNotEfficient(EffvecError):
    def __init__(self, detail: str = "seed vector is not efficient for its principal submatrix"):
        super().__init__(detail)


class OutOfInterval(EffvecError):
    def __init__(self, x: float, lo: float, hi: float):
        self.x, self.lo, self.hi = x, lo, hi
        super().__init__(f"value {x!r} outside extension interval [{lo!r}, {hi!r}]")


class BadSeedSize(EffvecError):
    def __init__(self, size: int):
        self.size = size
        super().__init__(f"seed index set must have size 2 or 3, got {size}")


class DimensionTooLarge(EffvecError):
    def __init__(self, n: int, limit: int):
        self.n, self.limit = n, limit
        super().__init__(f"dimension n={n} exceeds the subset-sweep limit {limit}")


class BadRange(EffvecError):
    def __init__(self, detail: str):
        super().__init__(detail)


class NoConvergence(EffvecError):
    def __init__(self, iterations: int, residual: float):
        self.iterations, self.residual = iterations, residual
        super().__init__(
            f"power iteration did not converge within {iterations} iterations"
            f" (last residual {residual:.3e})"
        )


class InvalidTransform(EffvecError):
    def __init__(self, detail: str):
        super().__init__(detail)


class ParseError(EffvecError):
    def __init__(self, detail: str):
        super().__init__(detail)
