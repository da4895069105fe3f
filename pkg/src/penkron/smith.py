"""Polynomial invariants of a pencil: Smith form over Q[s] and factor reports.

The Smith reduction is the classical gcd-elimination: pull a minimal-degree
entry to the pivot, clear its row and column by polynomial division,
restart whenever a remainder drops the degree, and repair divisibility
violations by folding the offending row into the pivot row. Pencil entries
have degree <= 1, so degrees stay small throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import DimensionMismatch
from .poly import RatPoly, rational_roots, squarefree_decomposition
from .ratmat import RatMatrix

_ONE = Fraction(1)

PolyMatrix = List[List[RatPoly]]


def pencil_poly_matrix(F: RatMatrix, G: RatMatrix) -> PolyMatrix:
    """Entries of s*F - G as degree-<=1 polynomials."""
    if F.shape != G.shape:
        raise DimensionMismatch(f"pencil shapes differ: {F.shape} vs {G.shape}")
    return [
        [RatPoly([-G[i, j], F[i, j]]) for j in range(F.cols)]
        for i in range(F.rows)
    ]


def poly_identity(n: int) -> PolyMatrix:
    one, zero = RatPoly.const(1), RatPoly([])
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def poly_mat_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    n, k = len(A), len(B)
    m = len(B[0]) if k else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = RatPoly([])
            for l in range(k):
                if A[i][l] and B[l][j]:
                    acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def poly_mat_det(M: PolyMatrix) -> RatPoly:
    """Fraction-free (Bareiss) determinant over Q[s]; divisions are exact."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return RatPoly.const(1)
    w = [row[:] for row in M]
    sign = 1
    prev = RatPoly.const(1)
    for k in range(n - 1):
        if w[k][k].is_zero():
            hit = next((i for i in range(k + 1, n) if not w[i][k].is_zero()), None)
            if hit is None:
                return RatPoly([])
            w[k], w[hit] = w[hit], w[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]).exact_div(prev)
            w[i][k] = RatPoly([])
        prev = w[k][k]
    det = w[n - 1][n - 1]
    return det if sign > 0 else -det


def pencil_determinant(F: RatMatrix, G: RatMatrix) -> RatPoly:
    """det(s*F - G) as an exact polynomial."""
    if F.rows != F.cols:
        raise DimensionMismatch("determinant of a non-square pencil")
    return poly_mat_det(pencil_poly_matrix(F, G))


@dataclass(frozen=True)
class SmithForm:
    """U @ (s F - G) @ V = diag(factors, 0...) with U, V unimodular."""

    factors: tuple  # monic invariant factors, each dividing the next
    U: tuple        # rows x rows polynomial matrix
    V: tuple        # cols x cols polynomial matrix
    shape: tuple

    @property
    def normal_rank(self) -> int:
        return len(self.factors)

    def diag_matrix(self) -> PolyMatrix:
        n, m = self.shape
        zero = RatPoly([])
        out = [[zero] * m for _ in range(n)]
        for i, f in enumerate(self.factors):
            out[i][i] = f
        return out


def smith_form(F: RatMatrix, G: RatMatrix) -> SmithForm:
    """Smith normal form of the pencil s*F - G over Q[s]."""
    S = pencil_poly_matrix(F, G)
    n, m = F.rows, F.cols
    U = poly_identity(n)
    V = poly_identity(m)
    limit = min(n, m)
    t = 0
    while t < limit:
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if S[i][j] and (
                    best is None or S[i][j].degree < S[best[0]][best[1]].degree
                ):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            S[t], S[bi] = S[bi], S[t]
            U[t], U[bi] = U[bi], U[t]
        if bj != t:
            for row in S:
                row[t], row[bj] = row[bj], row[t]
            for row in V:
                row[t], row[bj] = row[bj], row[t]
        piv = S[t][t]
        dirty = False
        for i in range(t + 1, n):
            if S[i][t]:
                quo, rem = S[i][t].divmod(piv)
                if quo:
                    for j in range(m):
                        S[i][j] = S[i][j] - quo * S[t][j]
                    for j in range(n):
                        U[i][j] = U[i][j] - quo * U[t][j]
                if rem:
                    dirty = True
        for j in range(t + 1, m):
            if S[t][j]:
                quo, rem = S[t][j].divmod(piv)
                if quo:
                    for i in range(n):
                        S[i][j] = S[i][j] - quo * S[i][t]
                    for i in range(m):
                        V[i][j] = V[i][j] - quo * V[i][t]
                if rem:
                    dirty = True
        if dirty:
            continue
        flaw = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if S[i][j] and not piv.divides(S[i][j]):
                    flaw = i
                    break
            if flaw is not None:
                break
        if flaw is not None:
            for j in range(m):
                S[t][j] = S[t][j] + S[flaw][j]
            for j in range(n):
                U[t][j] = U[t][j] + U[flaw][j]
            continue
        t += 1
    for i in range(limit):
        lead = S[i][i].leading
        if S[i][i] and lead != 1:
            inv = _ONE / lead
            S[i][i] = S[i][i].scale(inv)
            for j in range(n):
                U[i][j] = U[i][j].scale(inv)
    factors = tuple(S[i][i] for i in range(limit) if S[i][i])
    return SmithForm(
        factors=factors,
        U=tuple(tuple(row) for row in U),
        V=tuple(tuple(row) for row in V),
        shape=(n, m),
    )


@dataclass(frozen=True)
class DivisorReport:
    """Factor content of one invariant factor, as far as Q can see."""

    factor: RatPoly
    rational_roots: tuple  # ((root, multiplicity), ...)
    unfactored: tuple      # ((squarefree residual, multiplicity), ...)


def finite_divisor_report(factors: Sequence[RatPoly]) -> List[DivisorReport]:
    """Squarefree split plus rational roots for each invariant factor.

    Roots found over Q come with their multiplicities; irreducible-over-Q
    content is reported as unfactored squarefree residuals.
    """
    out = []
    for f in factors:
        roots: list = []
        residuals: list = []
        for part, mult in squarefree_decomposition(f):
            leftover = part
            for root in sorted(rational_roots(part)):
                roots.append((root, mult))
                leftover = leftover.exact_div(RatPoly([-root, 1]))
            if leftover.degree > 0:
                residuals.append((leftover.monic(), mult))
        out.append(
            DivisorReport(
                factor=f,
                rational_roots=tuple(roots),
                unfactored=tuple(residuals),
            )
        )
    return out
