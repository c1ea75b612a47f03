"""
Dense exact linear algebra over any field of a tower.

Elimination keeps every entry reduced; pivots are taken column by column,
choosing the first nonzero entry from the current row downwards.
"""

import logging
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from .polynomials import Polynomial

logger = logging.getLogger(__name__)

Vector = Tuple[Any, ...]


class Matrix:
    """Immutable ``rows x cols`` matrix over ``field``, stored row-major."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Any, entries: Iterable[Sequence[Any]], cols: Optional[int] = None):
        table = tuple(tuple(field(x) for x in row) for row in entries)
        width = len(table[0]) if table else (cols or 0)
        if cols is not None and table and width != cols:
            raise ValueError(f"expected {cols} columns, got {width}")
        if any(len(row) != width for row in table):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(table))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", table)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field: Any, n: int) -> "Matrix":
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: Any, rows: int, cols: int) -> "Matrix":
        return cls(field, [[field.zero] * cols for _ in range(rows)], cols)

    @classmethod
    def from_columns(cls, field: Any, columns: Sequence[Sequence[Any]], rows: int = 0) -> "Matrix":
        if not columns:
            return cls(field, [[] for _ in range(rows)], 0) if rows else cls(field, [], 0)
        height = len(columns[0])
        return cls(field, [[col[i] for col in columns] for i in range(height)], len(columns))

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.column(j) for j in range(self.cols)], self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            self.field,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            self.field,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.cols,
        )

    def _check_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def scale(self, scalar: Any) -> "Matrix":
        return Matrix(self.field, [[scalar * a for a in r] for r in self.entries], self.cols)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        columns = [other.column(j) for j in range(other.cols)]
        out = []
        for r in self.entries:
            row = []
            for col in columns:
                acc = zero
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(self.field, out, other.cols)

    def apply(self, vector: Sequence[Any]) -> Vector:
        """Matrix-vector product ``self @ vector``."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.cols} columns")
        zero = self.field.zero
        out = []
        for r in self.entries:
            acc = zero
            for a, b in zip(r, vector):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, exponent: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result, base = Matrix.identity(self.field, self.rows), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(a for r in self.entries for a in r)

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        work = [list(r) for r in self.entries]
        pivots: List[int] = []
        pivot_row = 0
        for col in range(self.cols):
            if pivot_row == self.rows:
                break
            found = next((r for r in range(pivot_row, self.rows) if work[r][col]), None)
            if found is None:
                continue
            if found != pivot_row:
                work[pivot_row], work[found] = work[found], work[pivot_row]
            inverse = self.field.one / work[pivot_row][col]
            work[pivot_row] = [a * inverse if a else a for a in work[pivot_row]]
            pivot = work[pivot_row]
            for r in range(self.rows):
                factor = work[r][col]
                if r == pivot_row or not factor:
                    continue
                work[r] = [a - factor * p if p else a for a, p in zip(work[r], pivot)]
            pivots.append(col)
            pivot_row += 1
        logger.debug(f"rref of {self.rows}x{self.cols} matrix: pivots {pivots}")
        return Matrix(self.field, work, self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> List[Vector]:
        """Basis of the right kernel, one vector per free column (ascending)."""
        return self._kernel_from(*self.rref())

    def _kernel_from(self, reduced: "Matrix", pivots: Tuple[int, ...]) -> List[Vector]:
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vector = [self.field.zero] * self.cols
            vector[free] = self.field.one
            for r, p in enumerate(pivots):
                vector[p] = -reduced.entries[r][free]
            basis.append(tuple(vector))
        return basis

    def solve(self, rhs: Sequence[Any]) -> Optional[Vector]:
        """A particular solution of ``self @ x = rhs`` or None if inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError(f"right-hand side of length {len(rhs)} for {self.rows} rows")
        augmented = Matrix(
            self.field, [list(r) + [b] for r, b in zip(self.entries, rhs)], self.cols + 1
        )
        reduced, pivots = augmented.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        solution = [self.field.zero] * self.cols
        for r, p in enumerate(pivots):
            solution[p] = reduced.entries[r][self.cols]
        return tuple(solution)

    def charpoly(self) -> Polynomial:
        """Monic characteristic polynomial ``det(Y*I - self)`` (Faddeev-LeVerrier)."""
        n = self.rows
        if n != self.cols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        coefficients = [self.field.zero] * (n + 1)
        coefficients[n] = self.field.one
        identity = Matrix.identity(self.field, n)
        accumulator = Matrix.zeros(self.field, n, n)
        for k in range(1, n + 1):
            accumulator = self * accumulator + identity.scale(coefficients[n - k + 1])
            coefficients[n - k] = -(self * accumulator).trace() / self.field(k)
        return Polynomial(self.field, coefficients)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(a) for a in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def rank_kernel_solve(matrix: Matrix) -> Tuple[int, List[Vector]]:
    """Rank and right-kernel basis in one elimination."""
    reduced, pivots = matrix.rref()
    return len(pivots), matrix._kernel_from(reduced, pivots)


def polynomial_at_matrix(poly: Polynomial, matrix: Matrix) -> Matrix:
    """Evaluate ``poly`` at a square matrix by Horner's rule."""
    n = matrix.rows
    result = Matrix.zeros(matrix.field, n, n)
    identity = Matrix.identity(matrix.field, n)
    for c in reversed(poly.coeffs):
        result = result * matrix + identity.scale(c)
    return result


def coordinate_matrix(field: Any, elements: Sequence[Any]) -> Matrix:
    """The ``degree x len(elements)`` matrix of coordinates over ``field.base``."""
    columns = [field(x).coords for x in elements]
    if not columns:
        return Matrix(field.base, [[] for _ in range(field.degree)], 0)
    return Matrix.from_columns(field.base, columns)


def relative_rank(field: Any, elements: Sequence[Any]) -> int:
    """Dimension over ``field.base`` of the span of ``elements``."""
    if not elements:
        return 0
    return coordinate_matrix(field, elements).rank()


def independent_subset(field: Any, elements: Sequence[Any]) -> List[Any]:
    """A basis of the span over ``field.base``, taken greedily in input order."""
    if not elements:
        return []
    _, pivots = coordinate_matrix(field, elements).rref()
    return [field(elements[j]) for j in pivots]
