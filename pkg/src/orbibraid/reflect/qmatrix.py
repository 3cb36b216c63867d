"""Dense matrices over the rational-function field Q(q), exact throughout."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DimensionError, SingularMatrixError
from .laurent import ONE, ZERO, LaurentScalar, parse_scalar

Row = tuple[LaurentScalar, ...]


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple[Row, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("entry grid does not match the declared shape")

    @staticmethod
    def from_rows(rows) -> QMatrix:
        entries = tuple(tuple(row) for row in rows)
        return QMatrix(len(entries), len(entries[0]) if entries else 0, entries)

    @staticmethod
    def from_strings(rows) -> QMatrix:
        return QMatrix.from_rows([[parse_scalar(s) for s in row] for row in rows])

    @staticmethod
    def identity(n: int) -> QMatrix:
        return QMatrix(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @staticmethod
    def flip(d1: int, d2: int) -> QMatrix:
        """Permutation matrix of v (x) w -> w (x) v."""
        n = d1 * d2
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(d1):
            for j in range(d2):
                rows[j * d1 + i][i * d2 + j] = ONE
        return QMatrix.from_rows(rows)

    def __mul__(self, other: QMatrix) -> QMatrix:
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return QMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: QMatrix) -> QMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch in matrix sum")
        return QMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: QMatrix) -> QMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch in matrix difference")
        return QMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def scale(self, s: LaurentScalar) -> QMatrix:
        return QMatrix(self.rows, self.cols, tuple(tuple(s * x for x in r) for r in self.entries))

    def kron(self, other: QMatrix) -> QMatrix:
        rows = []
        for r1 in self.entries:
            for r2 in other.entries:
                rows.append(tuple(a * b for a in r1 for b in r2))
        return QMatrix(self.rows * other.rows, self.cols * other.cols, tuple(rows))

    @property
    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return self == QMatrix.identity(self.rows)

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for r in self.entries for x in r)

    def det(self) -> LaurentScalar:
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        a = [list(r) for r in self.entries]
        det = ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if not a[r][col].is_zero), None)
            if pivot is None:
                return ZERO
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det = det * a[col][col]
            inv = a[col][col].inverse()
            for r in range(col + 1, n):
                if a[r][col].is_zero:
                    continue
                factor = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] = a[r][c] - factor * a[col][c]
        return det

    def inverse(self) -> QMatrix:
        if self.rows != self.cols:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        a = [list(r) + list(QMatrix.identity(n).entries[i]) for i, r in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not a[r][col].is_zero), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r == col or a[r][col].is_zero:
                    continue
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return QMatrix(n, n, tuple(tuple(row[n:]) for row in a))

    def specialize(self, q0: Fraction) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(x.specialize(q0) for x in r) for r in self.entries)

    def to_strings(self) -> list[list[str]]:
        return [[x.to_text() for x in r] for r in self.entries]
