"""Exact rational matrices and row reduction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def to_rational(x) -> Fraction | int:
    """Coerce to an exact number, returning ``int`` when the value is integral."""
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return to_rational(Fraction(x.strip()))
    if isinstance(x, float):
        raise TypeError("floating-point values are not accepted; use Fraction or str")
    return to_rational(Fraction(x))


@dataclass(frozen=True)
class RationalMatrix:
    nrows: int
    ncols: int
    entries: tuple[tuple, ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "RationalMatrix":
        rows = tuple(tuple(to_rational(v) for v in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.ncols, self.nrows, tuple(self.columns()))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.columns()
        rows = tuple(
            tuple(to_rational(sum((a * b for a, b in zip(r, c)), 0)) for c in cols)
            for r in self.entries
        )
        return RationalMatrix(self.nrows, other.ncols, rows)

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.entries for v in r)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form over the rationals.

    Returns the nonzero rows of the reduced matrix and the pivot column indices.
    """
    m = [[Fraction(v) for v in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    out = [[to_rational(v) for v in row] for row in m[:r]]
    return out, pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def null_space(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {x : M x = 0}, one vector per free column, in RREF-derived order."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -Fraction(row[f])
        basis.append(v)
    return basis


def left_kernel_rref(m: RationalMatrix) -> RationalMatrix:
    """Row-reduced basis of {w : w M = 0}."""
    basis = null_space(m.transpose().entries, m.nrows)
    if not basis:
        return RationalMatrix(0, m.nrows, ())
    red, _ = rref(basis, m.nrows)
    return RationalMatrix.from_rows(red, m.nrows)
