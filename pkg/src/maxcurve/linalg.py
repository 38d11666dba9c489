"""Exact dense linear algebra over the rationals.

Rows are cleared of denominators and reduced with fraction-free (Bareiss)
elimination; only the final back-substitution touches ``Fraction``.  Pivots
are the first nonzero entry top-to-bottom in each column, so results are
fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class InconsistentSystemError(ValueError):
    """The linear system has no solution."""


class UnderdeterminedSystemError(ValueError):
    """The system is consistent but has a positive-dimensional solution set."""

    def __init__(self, witness: Vector, null_dim: int):
        super().__init__(f"underdetermined system (null space dimension {null_dim})")
        self.witness = witness
        self.null_dim = null_dim


def _q(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [tuple(_q(v) for v in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RationalMatrix":
        if not columns:
            return cls(rows or 0, 0, ())
        return cls.from_rows(list(zip(*columns)), cols=len(columns))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def hstack(self, column: Sequence) -> "RationalMatrix":
        if len(column) != self.rows:
            raise ValueError("column length must equal number of rows")
        return RationalMatrix.from_rows(
            [r + (_q(v),) for r, v in zip(self.row_list(), column)], cols=self.cols + 1
        )

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length must equal number of columns")
        v = [_q(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.row_list())


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        r = [_q(v) for v in r]
        scale = lcm(*(v.denominator for v in r)) if r else 1
        out.append([int(v * scale) for v in r])
    return out


def _bareiss(a: list[list[int]], pivot_cols: int) -> list[int]:
    """Fraction-free forward elimination in place; returns pivot columns.

    Only the first ``pivot_cols`` columns are searched for pivots; the rest
    (right-hand sides) are carried along.
    """
    m = len(a)
    width = len(a[0]) if a else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(pivot_cols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, m):
            row = a[i]
            lead = row[c]
            if lead == 0:
                for j in range(c + 1, width):
                    row[j] = piv * row[j] // prev
            else:
                for j in range(c + 1, width):
                    row[j] = (piv * row[j] - lead * prow[j]) // prev
                row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _reduce(a: list[list[int]], pivots: list[int]) -> list[list[Fraction]]:
    """Normalize the echelon rows to reduced row echelon form."""
    rank = len(pivots)
    red = []
    for i in range(rank):
        piv = a[i][pivots[i]]
        red.append([Fraction(v, piv) for v in a[i]])
    for i in range(rank - 1, -1, -1):
        c = pivots[i]
        ri = red[i]
        for k in range(i):
            f = red[k][c]
            if f:
                rk = red[k]
                for j in range(c, len(rk)):
                    if ri[j]:
                        rk[j] -= f * ri[j]
    return red


def rank(m: RationalMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    a = _integer_rows(m.row_list())
    return len(_bareiss(a, m.cols))


def null_space(m: RationalMatrix) -> list[Vector]:
    """Basis of {v : M v = 0}, one vector per free column."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(Fraction(int(i == j)) for i in range(m.cols)) for j in range(m.cols)]
    a = _integer_rows(m.row_list())
    pivots = _bareiss(a, m.cols)
    red = _reduce(a, pivots)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][free]
        basis.append(tuple(v))
    return basis


def _solve_general(m: RationalMatrix, rhs: list[Sequence]) -> tuple[list[Vector], int]:
    """Solve M X = B column by column; returns witnesses and null-space dimension."""
    if any(len(b) != m.rows for b in rhs):
        raise ValueError("right-hand side length must equal number of rows")
    rows = [list(m.row(i)) + [_q(b[i]) for b in rhs] for i in range(m.rows)]
    a = _integer_rows(rows)
    pivots = _bareiss(a, m.cols) if m.rows else []
    r = len(pivots)
    for i in range(r, m.rows):
        if any(a[i][m.cols:]):
            raise InconsistentSystemError("system has no solution")
    red = _reduce(a, pivots)
    sols = []
    for k in range(len(rhs)):
        x = [Fraction(0)] * m.cols
        for i, c in enumerate(pivots):
            x[c] = red[i][m.cols + k]
        sols.append(tuple(x))
    return sols, m.cols - r


def solve_any(m: RationalMatrix, b: Sequence) -> tuple[Vector, int]:
    """One solution of M x = b (free variables set to zero) and the null-space dimension.

    Raises InconsistentSystemError when there is none.
    """
    sols, null_dim = _solve_general(m, [b])
    return sols[0], null_dim


def solve(m: RationalMatrix, b: Sequence) -> Vector:
    """Unique solution of M x = b.

    Raises InconsistentSystemError or UnderdeterminedSystemError (carrying a
    witness and the null-space dimension) otherwise.
    """
    x, null_dim = solve_any(m, b)
    if null_dim:
        raise UnderdeterminedSystemError(x, null_dim)
    return x


def solve_many(m: RationalMatrix, rhs: Sequence[Sequence]) -> tuple[list[Vector], int]:
    """Solve for several right-hand sides with one elimination."""
    if not rhs:
        return [], m.cols - rank(m)
    return _solve_general(m, list(rhs))


def inverse(m: RationalMatrix) -> RationalMatrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    eye = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    try:
        cols, null_dim = _solve_general(m, eye)
    except InconsistentSystemError:
        raise ValueError("matrix is singular") from None
    if null_dim:
        raise ValueError("matrix is singular")
    return RationalMatrix.from_columns(cols, rows=n)


def in_column_span(m: RationalMatrix, v: Sequence) -> bool:
    if len(v) != m.rows:
        raise ValueError("vector length must equal number of rows")
    if not any(v):
        return True
    return rank(m.hstack(v)) == rank(m)


class RowEchelon:
    """Incrementally maintained row space; ``add`` reports whether rank grew."""

    def __init__(self, cols: int):
        self.cols = cols
        self._rows: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _residual(self, row: Sequence) -> list[Fraction]:
        r = [_q(v) for v in row]
        if len(r) != self.cols:
            raise ValueError("row length mismatch")
        for c in sorted(self._rows):
            if r[c]:
                f = r[c]
                basis = self._rows[c]
                for j in range(c, self.cols):
                    if basis[j]:
                        r[j] -= f * basis[j]
        return r

    def would_increase(self, row: Sequence) -> bool:
        return any(self._residual(row))

    def add(self, row: Sequence) -> bool:
        r = self._residual(row)
        c = next((j for j, v in enumerate(r) if v), None)
        if c is None:
            return False
        piv = r[c]
        r = [v / piv for v in r]
        # keep stored rows reduced against the new pivot column
        for pc, basis in self._rows.items():
            f = basis[c]
            if f:
                for j in range(self.cols):
                    if r[j]:
                        basis[j] -= f * r[j]
        self._rows[c] = r
        return True
