"""Dense matrices of polynomials and their exact determinants."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Sequence

from .errors import InexactDivisionError
from .poly import Polynomial, VariableSet, exact_divide


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[Polynomial, ...]
    vars: VariableSet

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"expected {self.rows * self.cols} entries, got {len(self.entries)}")
        if any(e.vars != self.vars for e in self.entries):
            raise ValueError("all entries must share one variable set")

    @classmethod
    def from_rows(cls, vars: VariableSet, rows: Sequence[Sequence]) -> PolyMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(e if isinstance(e, Polynomial) else Polynomial.constant(vars, e) for e in r)
        return cls(nrows, ncols, tuple(flat), vars)

    @classmethod
    def from_columns(cls, vars: VariableSet, columns: Sequence[Sequence[Polynomial]], rows: int | None = None) -> PolyMatrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ValueError("columns of unequal length")
        flat = tuple(columns[j][i] for i in range(rows) for j in range(len(columns)))
        return cls(rows, len(columns), flat, vars)

    @classmethod
    def identity(cls, vars: VariableSet, size: int) -> PolyMatrix:
        return cls.from_rows(vars, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple[Polynomial, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, keep: Sequence[int]) -> PolyMatrix:
        return PolyMatrix.from_columns(self.vars, [self.column(j) for j in keep], self.rows)

    def hstack(self, other: PolyMatrix) -> PolyMatrix:
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        return PolyMatrix.from_columns(self.vars, self.columns() + other.columns(), self.rows)

    def map(self, fn: Callable[[Polynomial], Polynomial], vars: VariableSet | None = None) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, tuple(fn(e) for e in self.entries), vars or self.vars)

    def swap_columns(self, a: int, b: int) -> PolyMatrix:
        cols = self.columns()
        cols[a], cols[b] = cols[b], cols[a]
        return PolyMatrix.from_columns(self.vars, cols, self.rows)

    def to_lists(self) -> list[list[Polynomial]]:
        return [list(self.row(i)) for i in range(self.rows)]


def bareiss_determinant(M: PolyMatrix) -> Polynomial:
    """Fraction-free Gaussian elimination; every division is exact by Sylvester's identity."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    vars = M.vars
    if n == 0:
        return vars.one()
    a = M.to_lists()
    sign = 1
    prev = vars.one()
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return vars.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                try:
                    a[i][j] = num / prev if prev.is_constant() else exact_divide(num, prev)
                except InexactDivisionError as exc:  # pragma: no cover - Sylvester identity violated
                    raise AssertionError("Bareiss step left a remainder") from exc
            a[i][k] = vars.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_determinant(M: PolyMatrix) -> Polynomial:
    """Laplace expansion along the first row; exponential, meant for small sizes."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    return _laplace(M.to_lists(), M.vars)


def _laplace(a, vars):
    n = len(a)
    if n == 0:
        return vars.one()
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = vars.zero()
    for j in range(n):
        if not a[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _laplace(minor, vars)
        total = total + term if j % 2 == 0 else total - term
    return total


def leibniz_determinant(M: PolyMatrix) -> Polynomial:
    """Sum over permutations. Only for tests and tiny matrices."""
    n = M.rows
    total = M.vars.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = M.vars.one()
        for i, j in enumerate(perm):
            term = term * M[i, j]
            if not term:
                break
        total = total - term if inv % 2 else total + term
    return total


def block_laplace_determinant(M: PolyMatrix, k: int, method: str = "auto") -> Polynomial:
    """Generalized Laplace expansion along the first ``k`` columns.

    ``det M = sum_R (-1)^{|R| + k(k+1)/2} det M[R, :k] * det M[R^c, k:]`` over
    ``k``-row subsets ``R`` (1-based row sum ``|R|``).  Pays off when the
    first columns hold the only main-variable entries.
    """
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    size = M.rows
    if not 0 <= k <= size:
        raise ValueError(f"block width {k} out of range")
    left = list(range(k))
    right = list(range(k, size))
    base = k * (k + 1) // 2
    total = M.vars.zero()
    for R in combinations(range(size), k):
        rest = [r for r in range(size) if r not in R]
        lower = _submatrix(M, rest, right)
        minor_r = determinant(lower, method)
        if not minor_r:
            continue
        minor_l = determinant(_submatrix(M, list(R), left), method)
        term = minor_l * minor_r
        total = total - term if (sum(R) + len(R) + base) % 2 else total + term
    return total


def _submatrix(M: PolyMatrix, rows, cols) -> PolyMatrix:
    flat = tuple(M[i, j] for i in rows for j in cols)
    return PolyMatrix(len(rows), len(cols), flat, M.vars)


def determinant(M: PolyMatrix, method: str = "auto") -> Polynomial:
    """Exact determinant.

    ``auto`` uses cofactor expansion up to 4x4 and Bareiss elimination above.
    """
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if method == "auto":
        method = "cofactor" if M.rows <= 4 else "bareiss"
    if method == "bareiss":
        return bareiss_determinant(M)
    if method == "cofactor":
        return cofactor_determinant(M)
    if method == "leibniz":
        return leibniz_determinant(M)
    raise ValueError(f"unknown determinant method {method!r}")
