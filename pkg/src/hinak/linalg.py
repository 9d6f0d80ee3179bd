"""Dense exact linear algebra over the rationals.

Every matrix entry is a :class:`fractions.Fraction`; no floating point is
used anywhere.  Matrices at the scale of this package stay small (a few
hundred rows), so plain Gaussian elimination with exact pivoting is enough.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class Mat:
    """An immutable-by-convention dense rational matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: list[list[Fraction]], rows: int | None = None, cols: int | None = None):
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("inconsistent matrix data")
        self.rows = rows
        self.cols = cols
        self.data = data

    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> "Mat":
        data = [[Fraction(x) for x in r] for r in rows]
        if not data:
            return Mat([], 0, 0)
        return Mat(data)

    @staticmethod
    def zeros(rows: int, cols: int) -> "Mat":
        return Mat([[ZERO] * cols for _ in range(rows)], rows, cols)

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n, n)

    def copy(self) -> "Mat":
        return Mat([row[:] for row in self.data], self.rows, self.cols)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        raise TypeError("Mat is unhashable")

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            self.rows,
            self.cols,
        )

    def scale(self, c) -> "Mat":
        c = Fraction(c)
        return Mat([[c * x for x in row] for row in self.data], self.rows, self.cols)

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            out_i = out[i]
            for k, a in enumerate(row):
                if a == 0:
                    continue
                brow = other.data[k]
                for j, b in enumerate(brow):
                    if b != 0:
                        out_i[j] += a * b
        return Mat(out, self.rows, other.cols)

    def transpose(self) -> "Mat":
        if self.rows == 0:
            return Mat([[] for _ in range(self.cols)], self.cols, 0) if self.cols else Mat([], 0, 0)
        return Mat([list(col) for col in zip(*self.data)], self.cols, self.rows)

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.data]

    def _same_shape(self, other: "Mat") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def rref(self) -> tuple["Mat", list[int]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [row[:] for row in self.data]
        rows, cols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            if pv != 1:
                m[r] = [x / pv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Mat(m, rows, cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "Mat":
        """Columns form the canonical rref basis of the right null space."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -red.data[r][fc]
            basis.append(v)
        if not basis:
            return Mat([[] for _ in range(self.cols)], self.cols, 0) if self.cols else Mat([], 0, 0)
        return Mat([list(col) for col in zip(*basis)], self.cols, len(basis))

    def left_kernel_basis(self) -> "Mat":
        """Rows Y with Y * self = 0 spanning the full left null space."""
        return self.transpose().kernel_basis().transpose()

    def solve(self, rhs: "Mat") -> "Mat | None":
        """A particular solution X of self * X = rhs, or None if inconsistent."""
        if rhs.rows != self.rows:
            raise ValueError("shape mismatch in solve")
        aug_cols = self.cols + rhs.cols
        aug = Mat(
            [self.data[i][:] + rhs.data[i][:] for i in range(self.rows)],
            self.rows,
            aug_cols,
        )
        red, pivots = aug.rref()
        for c in pivots:
            if c >= self.cols:
                return None
        sol = [[ZERO] * rhs.cols for _ in range(self.cols)]
        for r, pc in enumerate(pivots):
            for j in range(rhs.cols):
                sol[pc][j] = red.data[r][self.cols + j]
        return Mat(sol, self.cols, rhs.cols)

    def inverse(self) -> "Mat | None":
        if self.rows != self.cols:
            return None
        sol = self.solve(Mat.identity(self.rows))
        if sol is None or (self * sol) != Mat.identity(self.rows):
            return None
        return sol


def hstack(mats: Sequence[Mat]) -> Mat:
    mats = [m for m in mats]
    if not mats:
        raise ValueError("nothing to stack")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("row mismatch in hstack")
    data = [sum((m.data[i] for m in mats), []) for i in range(rows)]
    return Mat(data, rows, sum(m.cols for m in mats))


def vstack(mats: Sequence[Mat]) -> Mat:
    mats = [m for m in mats]
    if not mats:
        raise ValueError("nothing to stack")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("column mismatch in vstack")
    data = [row[:] for m in mats for row in m.data]
    return Mat(data, sum(m.rows for m in mats), cols)


def block_diag(mats: Sequence[Mat]) -> Mat:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Mat.zeros(rows, cols)
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            out.data[r0 + i][c0 : c0 + m.cols] = m.data[i][:]
        r0 += m.rows
        c0 += m.cols
    return out


def cokernel_projection(m: Mat) -> Mat:
    """A full-row-rank P with P * m = 0; P presents the cokernel of m."""
    return m.left_kernel_basis()


def column_space_completion(m: Mat) -> list[int]:
    """Indices of standard basis vectors completing col(m) to the full space.

    Greedy in index order, so the choice is deterministic.
    """
    chosen: list[int] = []
    cur = m
    rank = m.rank()
    for j in range(m.rows):
        if rank == m.rows:
            break
        e = Mat.zeros(m.rows, 1)
        e.data[j][0] = ONE
        cand = hstack([cur, e])
        r = cand.rank()
        if r > rank:
            chosen.append(j)
            cur = cand
            rank = r
    return chosen
