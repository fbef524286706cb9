"""
Dense exact matrices over the rationals and exact linear solving.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from src.algebra.rational import height
from src.exceptions import DimensionError, SingularMatrixError


class ExactMatrix:
    """Immutable dense row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(
        self, rows: int, cols: int, entries: Iterable[object]
    ) -> None:
        if rows < 1 or cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        values = tuple(Fraction(v) for v in entries)
        if len(values) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries, got {len(values)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = values

    # ------------------------------------------------------------------ #
    # Constructors
    # ------------------------------------------------------------------ #
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "ExactMatrix":
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one entry")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, [v for row in rows for v in row])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls(
            size,
            size,
            [1 if i == j else 0 for i in range(size) for j in range(size)],
        )

    # ------------------------------------------------------------------ #
    # Access
    # ------------------------------------------------------------------ #
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {index} outside {self.shape}")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def entries(self) -> Tuple[Fraction, ...]:
        return self._entries

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #
    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows,
            self.cols,
            [a + b for a, b in zip(self._entries, other._entries)],
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows,
            self.cols,
            [a - b for a, b in zip(self._entries, other._entries)],
        )

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def scale(self, factor: object) -> "ExactMatrix":
        factor = Fraction(factor)
        return ExactMatrix(
            self.rows, self.cols, [v * factor for v in self._entries]
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        # Row-sparse product: the matrices here are mostly zeros.
        out = [Fraction(0)] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * other.cols
            for k, a in enumerate(self.row(i)):
                if not a:
                    continue
                for j, b in enumerate(other.row(k)):
                    if b:
                        out[base + j] += a * b
        return ExactMatrix(self.rows, other.cols, out)

    def apply(self, vector: Sequence[object]) -> List[Fraction]:
        if len(vector) != self.cols:
            raise DimensionError(
                f"vector of length {len(vector)} for {self.shape} matrix"
            )
        vec = [Fraction(v) for v in vector]
        return [
            sum((a * b for a, b in zip(self.row(i), vec) if a), Fraction(0))
            for i in range(self.rows)
        ]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product; pair (i, k) maps to flat index i*other.rows + k."""

        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = [Fraction(0)] * (rows * cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self[i, j]
                if not a:
                    continue
                for k in range(other.rows):
                    for m in range(other.cols):
                        b = other[k, m]
                        if b:
                            r = i * other.rows + k
                            c = j * other.cols + m
                            out[r * cols + c] = a * b
        return ExactMatrix(rows, cols, out)

    def inverse(self) -> "ExactMatrix":
        """Exact inverse by Gauss-Jordan elimination."""

        if self.rows != self.cols:
            raise DimensionError("only square matrices are invertible")
        n = self.rows
        columns = [
            _eliminate(self.to_rows(), [1 if i == j else 0 for i in range(n)])
            for j in range(n)
        ]
        return ExactMatrix(
            n, n, [columns[j][i] for i in range(n) for j in range(n)]
        )

    # ------------------------------------------------------------------ #
    # Predicates
    # ------------------------------------------------------------------ #
    def is_zero(self) -> bool:
        return not any(self._entries)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def max_abs_entry(self) -> Fraction:
        return max(abs(v) for v in self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"


def _eliminate(
    rows: List[List[Fraction]], rhs: Sequence[object]
) -> List[Fraction]:
    n = len(rows)
    aug = [
        [Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)
    ]
    for col in range(n):
        candidates = [r for r in range(col, n) if aug[r][col]]
        if not candidates:
            raise SingularMatrixError(f"no pivot in column {col}")
        # Smallest-height pivot keeps intermediate coefficients short.
        pivot = min(candidates, key=lambda r: height(aug[r][col]))
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pivot_row = aug[col]
        inv = 1 / pivot_row[col]
        for r in range(n):
            if r == col or not aug[r][col]:
                continue
            factor = aug[r][col] * inv
            target = aug[r]
            for c in range(col, n + 1):
                if pivot_row[c]:
                    target[c] -= factor * pivot_row[c]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def solve_exact(a: ExactMatrix, b: Sequence[object]) -> List[Fraction]:
    """
    Solve A·x = b exactly.

    Raises:
        DimensionError: if A is not square or b has the wrong length.
        SingularMatrixError: if A is singular.
    """

    if a.rows != a.cols:
        raise DimensionError(f"solve_exact needs a square matrix, got {a.shape}")
    if len(b) != a.rows:
        raise DimensionError(
            f"right-hand side has length {len(b)}, expected {a.rows}"
        )
    return _eliminate(a.to_rows(), b)
