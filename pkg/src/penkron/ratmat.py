"""Exact rational scalar and dense matrix kernel.

Every rank decision, solve, and power in the package runs over
`fractions.Fraction`, so results are exact: there is no tolerance anywhere.
Matrices are immutable by convention -- operations return new instances and
never mutate their arguments. Empty (0-row or 0-column) matrices are
first-class citizens; they arise routinely as absent blocks of a pencil
decomposition and must flow through every routine without special casing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import DimensionMismatch, SingularMatrix

# The scalar field: arbitrary-precision rationals, always in lowest terms
# with positive denominator (guaranteed by Fraction itself).
Rational = Fraction

RatLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(value: RatLike) -> Fraction:
    """Coerce an int, "p/q" string, or Fraction to an exact rational.

    Floats are rejected: silently converting them would smuggle binary
    rounding into an exact computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class RatMatrix:
    """Dense row-major matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_d")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence[RatLike]]):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"negative dimensions {rows}x{cols}")
        data = [[rat(x) for x in row] for row in entries]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatch(
                f"entry grid does not match declared shape {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self._d = data

    # -- construction -----------------------------------------------------

    @classmethod
    def _wrap(cls, rows: int, cols: int, data: list) -> "RatMatrix":
        # Internal: adopt a ready list-of-lists of Fractions without copying.
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._d = data
        return m

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[RatLike]], cols: Optional[int] = None) -> "RatMatrix":
        rows = len(entries)
        if rows == 0:
            return cls(0, 0 if cols is None else cols, [])
        return cls(rows, len(entries[0]), entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls._wrap(rows, cols, [[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        data = [[_ZERO] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = _ONE
        return cls._wrap(n, n, data)

    @classmethod
    def column(cls, entries: Sequence[RatLike]) -> "RatMatrix":
        return cls(len(entries), 1, [[x] for x in entries])

    @classmethod
    def diagonal(cls, entries: Sequence[RatLike]) -> "RatMatrix":
        n = len(entries)
        data = [[_ZERO] * n for _ in range(n)]
        for i, x in enumerate(entries):
            data[i][i] = rat(x)
        return cls._wrap(n, n, data)

    # -- inspection --------------------------------------------------------

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._d[i][j]

    def row_list(self, i: int) -> list:
        return list(self._d[i])

    def col_list(self, j: int) -> list:
        return [r[j] for r in self._d]

    def to_lists(self) -> list:
        return [list(r) for r in self._d]

    def column_vector(self) -> list:
        """Entries of an n x 1 matrix as a flat list."""
        if self.cols != 1:
            raise DimensionMismatch(f"not a column vector: {self.rows}x{self.cols}")
        return [r[0] for r in self._d]

    def is_zero(self) -> bool:
        return all(not x for r in self._d for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._d == other._d

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"RatMatrix({self.rows}x{self.cols} empty)"
        body = "; ".join(" ".join(str(x) for x in r) for r in self._d)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"add {self.shape} vs {other.shape}")
        data = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._d, other._d)
        ]
        return RatMatrix._wrap(self.rows, self.cols, data)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"sub {self.shape} vs {other.shape}")
        data = [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._d, other._d)
        ]
        return RatMatrix._wrap(self.rows, self.cols, data)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix._wrap(self.rows, self.cols, [[-x for x in r] for r in self._d])

    def scale(self, c: RatLike) -> "RatMatrix":
        c = rat(c)
        return RatMatrix._wrap(self.rows, self.cols, [[c * x for x in r] for r in self._d])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"matmul {self.shape} @ {other.shape}")
        out = [[_ZERO] * other.cols for _ in range(self.rows)]
        od = other._d
        for i, arow in enumerate(self._d):
            orow = out[i]
            for k, a in enumerate(arow):
                if a:
                    brow = od[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] = orow[j] + a * b
        return RatMatrix._wrap(self.rows, other.cols, out)

    def transpose(self) -> "RatMatrix":
        data = [[self._d[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return RatMatrix._wrap(self.cols, self.rows, data)

    # -- assembly ----------------------------------------------------------

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "RatMatrix":
        """Submatrix of rows [r0, r1) and columns [c0, c1)."""
        data = [row[c0:c1] for row in self._d[r0:r1]]
        return RatMatrix._wrap(r1 - r0, c1 - c0, data)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch(f"hstack {self.shape} vs {other.shape}")
        data = [ra + rb for ra, rb in zip(self._d, other._d)]
        return RatMatrix._wrap(self.rows, self.cols + other.cols, data)

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise DimensionMismatch(f"vstack {self.shape} vs {other.shape}")
        return RatMatrix._wrap(self.rows + other.rows, self.cols, self.to_lists() + other.to_lists())


def hstack_all(blocks: Sequence[RatMatrix], rows: int = 0) -> RatMatrix:
    """Concatenate columns; `rows` disambiguates an all-empty input."""
    out = None
    for b in blocks:
        out = b if out is None else out.hstack(b)
    return RatMatrix.zeros(rows, 0) if out is None else out


def block_diag(pairs_rows_cols: Sequence[RatMatrix]) -> RatMatrix:
    """Direct sum of matrices along the diagonal."""
    rows = sum(b.rows for b in pairs_rows_cols)
    cols = sum(b.cols for b in pairs_rows_cols)
    data = [[_ZERO] * cols for _ in range(rows)]
    r = c = 0
    for b in pairs_rows_cols:
        for i in range(b.rows):
            data[r + i][c : c + b.cols] = b.row_list(i)
        r += b.rows
        c += b.cols
    return RatMatrix._wrap(rows, cols, data)


class RrefResult(NamedTuple):
    R: RatMatrix
    pivot_cols: list
    T: RatMatrix


def rref(M: RatMatrix) -> RrefResult:
    """Reduced row echelon form with the invertible left transform.

    Returns (R, pivot_cols, T) with T @ M == R exactly and
    rank(M) == len(pivot_cols). Gauss-Jordan elimination over Fraction:
    entries stay canonical (lowest terms) after every operation, which is
    what keeps intermediate growth in check at the sizes this package
    targets.
    """
    n, m = M.rows, M.cols
    R = M.to_lists()
    T = RatMatrix.identity(n).to_lists()
    pivots = []
    pr = 0
    for pc in range(m):
        if pr >= n:
            break
        hit = None
        for i in range(pr, n):
            if R[i][pc]:
                hit = i
                break
        if hit is None:
            continue
        if hit != pr:
            R[pr], R[hit] = R[hit], R[pr]
            T[pr], T[hit] = T[hit], T[pr]
        piv = R[pr][pc]
        if piv != 1:
            inv = _ONE / piv
            R[pr] = [x * inv for x in R[pr]]
            T[pr] = [x * inv for x in T[pr]]
        prow, trow = R[pr], T[pr]
        for i in range(n):
            if i == pr:
                continue
            f = R[i][pc]
            if f:
                ri, ti = R[i], T[i]
                for j in range(pc, m):
                    if prow[j]:
                        ri[j] = ri[j] - f * prow[j]
                for j in range(n):
                    if trow[j]:
                        ti[j] = ti[j] - f * trow[j]
        pivots.append(pc)
        pr += 1
    return RrefResult(
        RatMatrix._wrap(n, m, R), pivots, RatMatrix._wrap(n, n, T)
    )


def rank(M: RatMatrix) -> int:
    """Exact rank over the rationals."""
    return len(rref(M).pivot_cols)


def nullspace_basis(M: RatMatrix) -> RatMatrix:
    """Columns spanning the right null space; width = cols - rank."""
    R, pivots, _ = rref(M)
    m = M.cols
    pivot_set = set(pivots)
    free = [j for j in range(m) if j not in pivot_set]
    data = [[_ZERO] * len(free) for _ in range(m)]
    for k, f in enumerate(free):
        data[f][k] = _ONE
        for i, p in enumerate(pivots):
            if R[i, f]:
                data[p][k] = -R[i, f]
    return RatMatrix._wrap(m, len(free), data)


class LinearSolution(NamedTuple):
    particular: RatMatrix
    nullspace: RatMatrix


def solve_linear(A: RatMatrix, b: RatMatrix) -> Optional[LinearSolution]:
    """Solve A @ x = b exactly; b may have several columns.

    Returns a particular solution plus a kernel basis, or None when the
    system is inconsistent. Inconsistency is a value, not an error.
    """
    if A.rows != b.rows:
        raise DimensionMismatch(f"solve {A.shape} with rhs {b.shape}")
    R, pivots, T = rref(A)
    c = T @ b
    nr = len(pivots)
    for i in range(nr, A.rows):
        if any(c[i, j] for j in range(b.cols)):
            return None
    data = [[_ZERO] * b.cols for _ in range(A.cols)]
    for i, p in enumerate(pivots):
        data[p] = c.row_list(i)
    particular = RatMatrix._wrap(A.cols, b.cols, data)
    return LinearSolution(particular, nullspace_basis(A))


def invert(M: RatMatrix) -> RatMatrix:
    """Exact inverse; raises SingularMatrix when rank deficient."""
    if not M.is_square():
        raise SingularMatrix(f"cannot invert a {M.rows}x{M.cols} matrix")
    R, pivots, T = rref(M)
    if len(pivots) != M.rows:
        raise SingularMatrix(f"matrix of rank {len(pivots)} < {M.rows}")
    return T


def mat_pow(M: RatMatrix, k: int) -> RatMatrix:
    """k-th power by binary exponentiation; M**0 is the identity."""
    if not M.is_square():
        raise DimensionMismatch(f"power of non-square {M.rows}x{M.cols}")
    if k < 0:
        raise ValueError("negative powers not supported; invert first")
    out = RatMatrix.identity(M.rows)
    base = M
    while k:
        if k & 1:
            out = out @ base
        k >>= 1
        if k:
            base = base @ base
    return out


def complete_to_basis(K: RatMatrix) -> RatMatrix:
    """Extend independent columns K to an invertible matrix [K | E].

    E consists of standard basis vectors chosen on the coordinates where K
    has no pivot, so the result is always invertible.
    """
    w, k = K.rows, K.cols
    _, piv, _ = rref(K.transpose())
    assert len(piv) == k, "columns to complete are dependent"
    pivot_coords = set(piv)
    data = [list(K.row_list(i)) for i in range(w)]
    for j in range(w):
        if j not in pivot_coords:
            for i in range(w):
                data[i].append(_ONE if i == j else _ZERO)
    return RatMatrix._wrap(w, w, data)


class SparseEliminator:
    """Incremental exact row echelon over sparse rows.

    Rows are dicts mapping column index -> nonzero Fraction; an optional
    right-hand side rides along under the index `rhs_col`. Intended for
    banded or Kronecker-structured systems (horizon unrollings, vectorized
    Sylvester solves) where the dense routines would spend most of their
    time on zeros.
    """

    def __init__(self, n_cols: int, rhs_col: Optional[int] = None):
        self.n_cols = n_cols
        self.rhs_col = rhs_col
        self.pivots: dict = {}
        self.inconsistent = False

    def add_row(self, row: dict) -> None:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            if lead == self.rhs_col:
                self.inconsistent = True
                return
            piv = self.pivots.get(lead)
            if piv is None:
                f = row.pop(lead)
                if f != 1:
                    inv = _ONE / f
                    row = {c: v * inv for c, v in row.items()}
                self.pivots[lead] = row
                return
            f = row.pop(lead)
            for c, v in piv.items():
                nv = row.get(c, _ZERO) - f * v
                if nv:
                    row[c] = nv
                elif c in row:
                    del row[c]

    def add_matrix_row(self, coeffs: Iterable, rhs: Fraction = _ZERO) -> None:
        row = {j: v for j, v in enumerate(coeffs) if v}
        if rhs:
            row[self.rhs_col] = rhs
        self.add_row(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def nullity(self) -> int:
        return self.n_cols - self.rank

    def particular_solution(self) -> Optional[list]:
        """Back-substituted solution with free variables set to zero."""
        if self.inconsistent:
            return None
        sol = [_ZERO] * self.n_cols
        for lead in sorted(self.pivots, reverse=True):
            row = self.pivots[lead]
            s = row.get(self.rhs_col, _ZERO)
            for c, v in row.items():
                if c != self.rhs_col and sol[c]:
                    s = s - v * sol[c]
            sol[lead] = s
        return sol
