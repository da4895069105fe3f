"""Companion-form linearization of higher-order linear matrix recurrences.

An order-n system  A_n X_{k+n} + ... + A_1 X_{k+1} + A_0 X_k = 0  with
coefficients A_i of shape m1 x r1 is rewritten as a first-order pencil
system  F Y_{k+1} = G Y_k  over the stacked state
Y_k = [X_k; X_{k+1}; ...; X_{k+n-1}].

Dimension convention: the state X_k lives in F^{r1} (the only reading
compatible with A_i @ X_k when m1 != r1), the stacking identities use
I_{r1}, and F, G are ((n-1)*r1 + m1) x (n*r1). For square coefficients
this reduces to the familiar block-companion shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import DimensionMismatch, InconsistentStacking
from .ratmat import RatMatrix

_ONE = Fraction(1)


@dataclass(frozen=True)
class HighOrderSystem:
    """Order-n recurrence with its initial window of states."""

    order: int
    m1: int
    r1: int
    coeffs: tuple  # (A_0, ..., A_n), each m1 x r1
    k0: int = 0
    initial_X: Optional[tuple] = None  # (X_{k0}, ..., X_{k0+n-1}), each r1 x 1

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise DimensionMismatch(f"order must be >= 1, got {n}")
        if len(self.coeffs) != n + 1:
            raise DimensionMismatch(
                f"expected {n + 1} coefficients A_0..A_{n}, got {len(self.coeffs)}"
            )
        for i, A in enumerate(self.coeffs):
            if A.shape != (self.m1, self.r1):
                raise DimensionMismatch(
                    f"A_{i} has shape {A.rows}x{A.cols}, "
                    f"expected {self.m1}x{self.r1}"
                )
        if self.initial_X is not None:
            if len(self.initial_X) != n:
                raise DimensionMismatch(
                    f"expected {n} initial vectors, got {len(self.initial_X)}"
                )
            for j, x in enumerate(self.initial_X):
                if x.shape != (self.r1, 1):
                    raise DimensionMismatch(
                        f"initial vector {j} has shape {x.rows}x{x.cols}, "
                        f"expected {self.r1}x1"
                    )


@dataclass(frozen=True)
class PencilSystem:
    """First-order descriptor system F Y_{k+1} = G Y_k."""

    F: RatMatrix
    G: RatMatrix
    k0: int = 0
    Y0: Optional[RatMatrix] = None

    def __post_init__(self):
        if self.F.shape != self.G.shape:
            raise DimensionMismatch(
                f"F is {self.F.rows}x{self.F.cols} but G is {self.G.rows}x{self.G.cols}"
            )
        if self.Y0 is not None and self.Y0.shape != (self.F.cols, 1):
            raise DimensionMismatch(
                f"initial vector has dimension {self.Y0.rows}, expected {self.F.cols}"
            )


def build_companion_pencil(sys: HighOrderSystem) -> PencilSystem:
    """Assemble the block-companion pencil of an order-n system.

    F carries identity blocks for the stacking identities and A_n in the
    last block row; G carries the shifted identities and
    [-A_0, ..., -A_{n-1}] in the last block row.
    """
    n, m1, r1 = sys.order, sys.m1, sys.r1
    rows = (n - 1) * r1 + m1
    cols = n * r1
    F = RatMatrix.zeros(rows, cols).to_lists()
    G = RatMatrix.zeros(rows, cols).to_lists()
    for b in range(n - 1):
        for i in range(r1):
            F[b * r1 + i][b * r1 + i] = _ONE
            G[b * r1 + i][(b + 1) * r1 + i] = _ONE
    A_n = sys.coeffs[n]
    base = (n - 1) * r1
    for i in range(m1):
        for j in range(r1):
            F[base + i][base + j] = A_n[i, j]
    for b in range(n):
        A_b = sys.coeffs[b]
        for i in range(m1):
            for j in range(r1):
                G[base + i][b * r1 + j] = -A_b[i, j]
    Y0 = stack_initial(sys) if sys.initial_X is not None else None
    return PencilSystem(
        RatMatrix(rows, cols, F), RatMatrix(rows, cols, G), sys.k0, Y0
    )


def stack_initial(sys: HighOrderSystem) -> RatMatrix:
    """Vertical concatenation of the n initial state vectors."""
    if sys.initial_X is None:
        raise DimensionMismatch("system carries no initial vectors")
    out = sys.initial_X[0]
    for x in sys.initial_X[1:]:
        out = out.vstack(x)
    return out


def unstack_trajectory(traj: Sequence[RatMatrix], r1: int) -> List[RatMatrix]:
    """Recover the X-trajectory from stacked Y-samples.

    Each Y_k splits into n blocks of height r1; X_k is the first block, and
    the trailing blocks of the final sample extend the X-trajectory to its
    full length. Overlapping blocks (block j+1 of Y_k vs block j of
    Y_{k+1}) are checked for exact equality; any mismatch means the input
    was not produced by a consistent stacking and raises
    InconsistentStacking.
    """
    if not traj:
        return []
    dim = traj[0].rows
    if r1 <= 0 or dim % r1 != 0:
        raise DimensionMismatch(
            f"stacked dimension {dim} is not a multiple of block size {r1}"
        )
    n = dim // r1
    for k, y in enumerate(traj):
        if y.shape != (dim, 1):
            raise DimensionMismatch(f"sample {k} has shape {y.rows}x{y.cols}")

    def block(y, j):
        return y.block(j * r1, (j + 1) * r1, 0, 1)

    for k in range(len(traj) - 1):
        for j in range(1, n):
            if block(traj[k], j) != block(traj[k + 1], j - 1):
                raise InconsistentStacking(
                    f"block {j} of sample {k} disagrees with block {j - 1} "
                    f"of sample {k + 1}"
                )
    xs = [block(y, 0) for y in traj]
    for j in range(1, n):
        xs.append(block(traj[-1], j))
    return xs
