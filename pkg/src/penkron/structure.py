"""Complete Kronecker structure of a matrix pencil s*F - G, exactly.

The decomposition produces invertible P, Q with P @ (s F - G) @ Q block
diagonal in the fixed order

    finite part (s I_p - M)  +  nilpotent part (s N - I_q)
    +  column-minimal part   +  row-minimal part  +  zero block (h x g),

together with the index lists that classify the pencil. The reduction is a
chain of exact rank-revealing staircase passes followed by generalized
Sylvester decoupling of the off-diagonal couplings:

  pass 1 on (F, G):   chains fed by ker F (column-minimal + nilpotent
                      structure) move to the top-left stair block; the
                      remainder keeps a full-column-rank F-part.
  pass 2, same reduction with the roles of F and G swapped, run inside the
                      stair block: splits column-minimal chains from the
                      nilpotent part.
  pass 3, same reduction on the transposed remainder: splits row-minimal
                      chains from the finite part.

Every rank decision is an exact rational RREF, so there are no tolerances
and no misclassification: strictly equivalent pencils always produce
identical index lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    CouplingUnsolvable,
    DecompositionError,
    DimensionMismatch,
    NotRegular,
    SingularMatrix,
)
from .ratmat import (
    RatLike,
    RatMatrix,
    SparseEliminator,
    block_diag,
    complete_to_basis,
    invert,
    nullspace_basis,
    rank,
    rat,
    rref,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# canonical building blocks
# ---------------------------------------------------------------------------

def jordan_cell(a: RatLike, n: int) -> RatMatrix:
    """n x n upper bidiagonal cell with eigenvalue a."""
    a = rat(a)
    data = [[_ZERO] * n for _ in range(n)]
    for i in range(n):
        data[i][i] = a
        if i + 1 < n:
            data[i][i + 1] = _ONE
    return RatMatrix(n, n, data)


def nilpotent_shift(n: int) -> RatMatrix:
    """n x n upper shift matrix (ones on the superdiagonal)."""
    data = [[_ZERO] * n for _ in range(n)]
    for i in range(n - 1):
        data[i][i + 1] = _ONE
    return RatMatrix(n, n, data)


def col_minimal_pair(eps: int) -> Tuple[RatMatrix, RatMatrix]:
    """The eps x (eps+1) singular block pair ([I | 0], [0 | I])."""
    F = RatMatrix.identity(eps).hstack(RatMatrix.zeros(eps, 1))
    G = RatMatrix.zeros(eps, 1).hstack(RatMatrix.identity(eps))
    return F, G


def row_minimal_pair(zeta: int) -> Tuple[RatMatrix, RatMatrix]:
    """The (zeta+1) x zeta singular block pair ([I; 0], [0; I])."""
    F = RatMatrix.identity(zeta).vstack(RatMatrix.zeros(1, zeta))
    G = RatMatrix.zeros(1, zeta).vstack(RatMatrix.identity(zeta))
    return F, G


def pencil_eval(F: RatMatrix, G: RatMatrix, s: RatLike) -> RatMatrix:
    """The constant matrix s*F - G."""
    return F.scale(s) - G


# ---------------------------------------------------------------------------
# structure records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KroneckerStructure:
    """Invariant index data of a pencil under strict equivalence.

    eps_indices / zeta_indices are ascending and include their zero
    entries, so g and h are just the zero counts.
    """

    p: int
    inf_degrees: tuple
    eps_indices: tuple
    zeta_indices: tuple

    @property
    def q(self) -> int:
        return sum(self.inf_degrees)

    @property
    def d(self) -> int:
        return len(self.eps_indices)

    @property
    def t(self) -> int:
        return len(self.zeta_indices)

    @property
    def g(self) -> int:
        return sum(1 for e in self.eps_indices if e == 0)

    @property
    def h(self) -> int:
        return sum(1 for z in self.zeta_indices if z == 0)

    def expected_shape(self) -> tuple:
        """Pencil shape implied by the block dimension bookkeeping."""
        rows = (
            self.p
            + self.q
            + sum(self.eps_indices)
            + sum(z + 1 for z in self.zeta_indices if z > 0)
            + self.h
        )
        cols = (
            self.p
            + self.q
            + sum(e + 1 for e in self.eps_indices if e > 0)
            + sum(self.zeta_indices)
            + self.g
        )
        return rows, cols

    def matches_shape(self, rows: int, cols: int) -> bool:
        return self.expected_shape() == (rows, cols)


class StateParts(NamedTuple):
    """A stacked state split along the five-block column partition of Q."""

    finite: RatMatrix
    infinite: RatMatrix
    eps: RatMatrix
    zeta: RatMatrix
    free: RatMatrix


@dataclass(frozen=True)
class PencilDecomposition:
    """Invertible P, Q bringing s*F - G to block-diagonal Kronecker form."""

    F: RatMatrix
    G: RatMatrix
    P: RatMatrix
    Q: RatMatrix
    Q_inv: RatMatrix
    structure: KroneckerStructure
    M_finite: RatMatrix
    q_nilpotency_index: int
    block_pencils: tuple  # five (F_block, G_block) pairs in canonical order
    col_widths: tuple  # (p, q, eps cols, zeta cols, g)
    row_heights: tuple  # (p, q, eps rows, zeta rows, h)

    def _col_slice(self, index: int) -> RatMatrix:
        start = sum(self.col_widths[:index])
        return self.Q.block(0, self.Q.rows, start, start + self.col_widths[index])

    @property
    def Q_p(self) -> RatMatrix:
        return self._col_slice(0)

    @property
    def Q_q(self) -> RatMatrix:
        return self._col_slice(1)

    @property
    def Q_eps(self) -> RatMatrix:
        return self._col_slice(2)

    @property
    def Q_zeta(self) -> RatMatrix:
        return self._col_slice(3)

    @property
    def Q_g(self) -> RatMatrix:
        return self._col_slice(4)

    def split_state(self, Y: RatMatrix) -> StateParts:
        """Coordinates of Y in the decomposed basis, cut into the 5 parts."""
        if Y.shape != (self.F.cols, 1):
            raise DimensionMismatch(
                f"state has shape {Y.rows}x{Y.cols}, expected {self.F.cols}x1"
            )
        z = self.Q_inv @ Y
        parts = []
        at = 0
        for w in self.col_widths:
            parts.append(z.block(at, at + w, 0, 1))
            at += w
        return StateParts(*parts)

    def assemble_state(self, parts: StateParts) -> RatMatrix:
        """Inverse of split_state: Y = Q @ [z_p; z_q; z_eps; z_zeta; z_g]."""
        z = parts.finite
        for blockvec in parts[1:]:
            z = z.vstack(blockvec)
        return self.Q @ z

    def canonical_F(self) -> RatMatrix:
        return block_diag([b[0] for b in self.block_pencils])

    def canonical_G(self) -> RatMatrix:
        return block_diag([b[1] for b in self.block_pencils])


class Regularity(Enum):
    REGULAR = "regular"
    SINGULAR = "singular"


# ---------------------------------------------------------------------------
# staircase pass
# ---------------------------------------------------------------------------

def _embed(T: RatMatrix, n: int, at: int) -> RatMatrix:
    """Identity of size n with square block T written at offset `at`."""
    k = T.rows
    data = RatMatrix.identity(n).to_lists()
    for i in range(k):
        data[at + i][at : at + k] = T.row_list(i)
    return RatMatrix(n, n, data)


def _staircase_pass(A: RatMatrix, B: RatMatrix):
    """One full staircase reduction with A as the kernel side.

    Repeatedly moves ker(A) of the active corner to the left boundary and
    compresses B over those columns to the top boundary. Returns
    (stages, P, Q, stair_rows, stair_cols) where stages is a list of
    (kernel growth, compressed rank) pairs and P @ A @ Q has the chain
    block in its top-left stair_rows x stair_cols corner, zeros below it,
    and a full-column-rank A-part in the remaining corner.
    """
    r, m = A.shape
    P = RatMatrix.identity(r)
    Q = RatMatrix.identity(m)
    Aw, Bw = A, B
    ri = ci = 0
    stages = []
    while m - ci > 0:
        K = nullspace_basis(Aw.block(ri, r, ci, m))
        k = K.cols
        if k == 0:
            break
        V = _embed(complete_to_basis(K), m, ci)
        Aw = Aw @ V
        Bw = Bw @ V
        Q = Q @ V
        _, piv, T = rref(Bw.block(ri, r, ci, ci + k))
        rho = len(piv)
        Tf = _embed(T, r, ri)
        Aw = Tf @ Aw
        Bw = Tf @ Bw
        P = Tf @ P
        stages.append((k, rho))
        ri += rho
        ci += k
    return stages, P, Q, ri, ci


def _minimal_indices_from_stages(stages: Sequence[tuple]) -> list:
    # A chain whose kernel direction gains no compressed rank at stage i
    # terminates with minimal index i-1.
    out = []
    for i, (k, rho) in enumerate(stages, 1):
        out.extend([i - 1] * (k - rho))
    return sorted(out)


def _nilpotent_degrees_from_stages(stages: Sequence[tuple]) -> list:
    # A chain that keeps rank at stage i but feeds no kernel direction at
    # stage i+1 belongs to the nilpotent part with degree i.
    ks = [k for k, _ in stages] + [0]
    out = []
    for i, (_, rho) in enumerate(stages, 1):
        out.extend([i] * (rho - ks[i]))
    return sorted(out)


def _nilpotent_degrees_from_matrix(N: RatMatrix) -> Tuple[list, int]:
    """Block degrees of a nilpotent matrix from the rank decay of its powers."""
    q = N.rows
    if q == 0:
        return [], 0
    ranks = [q]
    power = RatMatrix.identity(q)
    while ranks[-1] > 0:
        power = power @ N
        ranks.append(rank(power))
        if len(ranks) > q + 1:
            raise DecompositionError("infinite part is not nilpotent")
    index = len(ranks) - 1
    geq = [ranks[i - 1] - ranks[i] for i in range(1, index + 1)] + [0]
    degs = []
    for i in range(1, index + 1):
        degs.extend([i] * (geq[i - 1] - geq[i]))
    return sorted(degs), index


@dataclass(frozen=True)
class StaircaseForm:
    """Result of the public one-shot staircase reduction."""

    F_s: RatMatrix
    G_s: RatMatrix
    P: RatMatrix
    Q: RatMatrix
    col_stages: tuple
    row_stages: tuple
    stair_rows: int
    stair_cols: int
    eps_indices: tuple
    zeta_indices: tuple
    inf_degrees: tuple


def staircase_reduce(F: RatMatrix, G: RatMatrix) -> StaircaseForm:
    """Staircase form of the pencil plus the index lists its ranks imply.

    The column pass (kernel side F) yields the column-minimal indices and
    the nilpotent degrees; the same pass on the transposed pencil yields
    the row-minimal indices. The two nilpotent counts are cross-checked.
    """
    if F.shape != G.shape:
        raise DimensionMismatch(f"pencil shapes differ: {F.shape} vs {G.shape}")
    col_stages, P, Q, ri, ci = _staircase_pass(F, G)
    row_stages, _, _, _, _ = _staircase_pass(F.transpose(), G.transpose())
    inf_c = _nilpotent_degrees_from_stages(col_stages)
    inf_r = _nilpotent_degrees_from_stages(row_stages)
    if inf_c != inf_r:
        raise DecompositionError(
            f"nilpotent degree counts disagree between passes: {inf_c} vs {inf_r}"
        )
    return StaircaseForm(
        F_s=P @ F @ Q,
        G_s=P @ G @ Q,
        P=P,
        Q=Q,
        col_stages=tuple(col_stages),
        row_stages=tuple(row_stages),
        stair_rows=ri,
        stair_cols=ci,
        eps_indices=tuple(_minimal_indices_from_stages(col_stages)),
        zeta_indices=tuple(_minimal_indices_from_stages(row_stages)),
        inf_degrees=tuple(inf_c),
    )


# ---------------------------------------------------------------------------
# Sylvester decoupling
# ---------------------------------------------------------------------------

def sylvester_decouple(
    F11: RatMatrix,
    G11: RatMatrix,
    F22: RatMatrix,
    G22: RatMatrix,
    F12: RatMatrix,
    G12: RatMatrix,
) -> Tuple[RatMatrix, RatMatrix]:
    """Corner transforms zeroing an off-diagonal pencil coupling.

    Solves the coupled generalized Sylvester system

        F11 @ Y + X @ F22 = -F12,    G11 @ Y + X @ G22 = -G12

    exactly; then [[I, X], [0, I]] (rows) and [[I, Y], [0, I]] (columns)
    block-diagonalize the pencil [[P11, C], [0, P22]]. Raises
    CouplingUnsolvable when inconsistent, which cannot happen for the
    couplings produced by the staircase passes (the diagonal parts have
    disjoint Kronecker spectra there).
    """
    n1, m1 = F11.shape
    n2, m2 = F22.shape
    if F12.shape != (n1, m2) or G12.shape != (n1, m2):
        raise DimensionMismatch("coupling block has the wrong shape")
    nx = n1 * n2
    ny = m1 * m2
    elim = SparseEliminator(nx + ny, rhs_col=nx + ny)
    for coeff_diag, coupling in ((F11, F12), (G11, G12)):
        coeff_corner = F22 if coeff_diag is F11 else G22
        for a in range(n1):
            for b in range(m2):
                row = {}
                for d in range(n2):
                    v = coeff_corner[d, b]
                    if v:
                        row[a * n2 + d] = v
                for c in range(m1):
                    v = coeff_diag[a, c]
                    if v:
                        row[nx + c * m2 + b] = v
                rhs = -coupling[a, b]
                if rhs:
                    row[nx + ny] = rhs
                elim.add_row(row)
    sol = elim.particular_solution()
    if sol is None:
        raise CouplingUnsolvable(
            "generalized Sylvester system inconsistent; staircase separation "
            "produced blocks with overlapping structure"
        )
    X = RatMatrix(n1, n2, [[sol[i * n2 + j] for j in range(n2)] for i in range(n1)])
    Y = RatMatrix(m1, m2, [[sol[nx + i * m2 + j] for j in range(m2)] for i in range(m1)])
    return X, Y


# ---------------------------------------------------------------------------
# full decomposition
# ---------------------------------------------------------------------------

def _permutation_rows(order: Sequence[int]) -> RatMatrix:
    n = len(order)
    data = [[_ZERO] * n for _ in range(n)]
    for i, src in enumerate(order):
        data[i][src] = _ONE
    return RatMatrix(n, n, data)


def _permutation_cols(order: Sequence[int]) -> RatMatrix:
    n = len(order)
    data = [[_ZERO] * n for _ in range(n)]
    for j, src in enumerate(order):
        data[src][j] = _ONE
    return RatMatrix(n, n, data)


def kronecker_decompose(F: RatMatrix, G: RatMatrix) -> PencilDecomposition:
    """Full block-resolution Kronecker decomposition of s*F - G.

    The five diagonal blocks are strictly equivalent to (not literally
    equal to) the textbook canonical blocks: the finite part is returned
    as s*I - M_finite for an arbitrary similarity representative M_finite,
    which is all any downstream solution formula needs, and keeps every
    computation inside the rationals.
    """
    if F.shape != G.shape:
        raise DimensionMismatch(f"pencil shapes differ: {F.shape} vs {G.shape}")
    r, m = F.shape
    Fw, Gw = F, G
    Pw = RatMatrix.identity(r)
    Qw = RatMatrix.identity(m)

    def apply(rowT=None, at_r=0, colT=None, at_c=0):
        nonlocal Fw, Gw, Pw, Qw
        if rowT is not None:
            T = _embed(rowT, r, at_r)
            Fw = T @ Fw
            Gw = T @ Gw
            Pw = T @ Pw
        if colT is not None:
            V = _embed(colT, m, at_c)
            Fw = Fw @ V
            Gw = Gw @ V
            Qw = Qw @ V

    def decouple(rt0, rt1, rb1, ct0, ct1, cb1):
        if not (
            Fw.block(rt1, rb1, ct0, ct1).is_zero()
            and Gw.block(rt1, rb1, ct0, ct1).is_zero()
        ):
            raise DecompositionError("lower coupling block is not zero")
        F12 = Fw.block(rt0, rt1, ct1, cb1)
        G12 = Gw.block(rt0, rt1, ct1, cb1)
        if F12.is_zero() and G12.is_zero():
            return
        X, Y = sylvester_decouple(
            Fw.block(rt0, rt1, ct0, ct1),
            Gw.block(rt0, rt1, ct0, ct1),
            Fw.block(rt1, rb1, ct1, cb1),
            Gw.block(rt1, rb1, ct1, cb1),
            F12,
            G12,
        )
        n1, n2 = rt1 - rt0, rb1 - rt1
        m1, m2 = ct1 - ct0, cb1 - ct1
        Trow = RatMatrix.identity(n1 + n2).to_lists()
        for i in range(n1):
            Trow[i][n1:] = X.row_list(i)
        Vcol = RatMatrix.identity(m1 + m2).to_lists()
        for i in range(m1):
            Vcol[i][m1:] = Y.row_list(i)
        apply(rowT=RatMatrix(n1 + n2, n1 + n2, Trow), at_r=rt0)
        apply(colT=RatMatrix(m1 + m2, m1 + m2, Vcol), at_c=ct0)

    # pass 1: chains fed by ker F (column-minimal + nilpotent) to top-left
    st1, P1, Q1, r1, c1 = _staircase_pass(Fw, Gw)
    apply(P1, 0, Q1, 0)
    decouple(0, r1, r, 0, c1, m)

    # pass 2 inside the stair block, kernel side G: column-minimal chains
    # to the top-left, nilpotent remainder bottom-right
    st2, P2, Q2, r2, c2 = _staircase_pass(
        Gw.block(0, r1, 0, c1), Fw.block(0, r1, 0, c1)
    )
    apply(P2, 0, Q2, 0)
    decouple(0, r2, r1, 0, c2, c1)

    q_dim = r1 - r2
    if q_dim != c1 - c2:
        raise DecompositionError("nilpotent block is not square")

    # pass 3 on the transposed remainder: row-minimal chains split from the
    # finite part (which lands bottom-right of the remainder after the swap)
    st3, P3, Q3, r3, c3 = _staircase_pass(
        Fw.block(r1, r, c1, m).transpose(), Gw.block(r1, r, c1, m).transpose()
    )
    apply(rowT=Q3.transpose(), at_r=r1, colT=P3.transpose(), at_c=c1)

    p_dim = (r - r1) - c3
    if p_dim != (m - c1) - r3:
        raise DecompositionError("finite block is not square")

    # swap the remainder's two blocks so the finite part comes first; the
    # leftover coupling then sits above the diagonal and can be decoupled
    a, b = r - r1, m - c1
    row_order = list(range(c3, a)) + list(range(c3))
    col_order = list(range(r3, b)) + list(range(r3))
    apply(
        rowT=_permutation_rows(row_order),
        at_r=r1,
        colT=_permutation_cols(col_order),
        at_c=c1,
    )
    decouple(r1, r1 + p_dim, r, c1, c1 + p_dim, m)

    # normalize the two regular blocks: finite to (I, M), nilpotent to (N, I)
    try:
        apply(rowT=invert(Fw.block(r1, r1 + p_dim, c1, c1 + p_dim)), at_r=r1)
    except SingularMatrix as exc:
        raise DecompositionError(f"finite block has singular leading part: {exc}")
    try:
        apply(rowT=invert(Gw.block(r2, r1, c2, c1)), at_r=r2)
    except SingularMatrix as exc:
        raise DecompositionError(f"nilpotent block has singular constant part: {exc}")

    # expose the zero columns of the column-minimal block ...
    eps_F = Fw.block(0, r2, 0, c2)
    eps_G = Gw.block(0, r2, 0, c2)
    Kg = nullspace_basis(eps_F.vstack(eps_G))
    g_dim = Kg.cols
    if g_dim:
        Vg = complete_to_basis(Kg)
        order = list(range(g_dim, c2)) + list(range(g_dim))  # kernel columns last
        apply(colT=Vg @ _permutation_cols(order), at_c=0)
    # ... and the zero rows of the row-minimal block
    zrow0, zrow1 = r1 + p_dim, r
    zcol0, zcol1 = c1 + p_dim, m
    zeta_F = Fw.block(zrow0, zrow1, zcol0, zcol1)
    zeta_G = Gw.block(zrow0, zrow1, zcol0, zcol1)
    Kh = nullspace_basis(zeta_F.transpose().vstack(zeta_G.transpose()))
    h_dim = Kh.cols
    if h_dim:
        n_rows = zrow1 - zrow0
        Wh = complete_to_basis(Kh).transpose()  # kernel rows first
        order = list(range(h_dim, n_rows)) + list(range(h_dim))
        apply(rowT=_permutation_rows(order) @ Wh, at_r=zrow0)

    # global permutation into the fixed block order
    eps_rows, eps_cols = r2, c2 - g_dim
    zeta_rows, zeta_cols = c3 - h_dim, r3
    row_order = (
        list(range(r1, r1 + p_dim))             # finite
        + list(range(r2, r1))                   # nilpotent
        + list(range(r2))                       # column-minimal
        + list(range(r1 + p_dim, r - h_dim))    # row-minimal
        + list(range(r - h_dim, r))             # zero rows
    )
    col_order = (
        list(range(c1, c1 + p_dim))             # finite
        + list(range(c2, c1))                   # nilpotent
        + list(range(c2 - g_dim))               # column-minimal
        + list(range(c1 + p_dim, m))            # row-minimal
        + list(range(c2 - g_dim, c2))           # zero columns
    )
    Fw = _permutation_rows(row_order) @ Fw @ _permutation_cols(col_order)
    Gw = _permutation_rows(row_order) @ Gw @ _permutation_cols(col_order)
    Pw = _permutation_rows(row_order) @ Pw
    Qw = Qw @ _permutation_cols(col_order)

    # index lists from the stage counts, cross-checked two ways
    eps_list = _minimal_indices_from_stages(st2)
    zeta_list = _minimal_indices_from_stages(st3)
    if eps_list != _minimal_indices_from_stages(st1):
        raise DecompositionError("column-minimal counts disagree between passes")
    nilpotent = Fw.block(p_dim, p_dim + q_dim, p_dim, p_dim + q_dim)
    inf_list, nilp_index = _nilpotent_degrees_from_matrix(nilpotent)
    if inf_list != _nilpotent_degrees_from_stages(st1):
        raise DecompositionError("nilpotent degrees disagree with stage counts")
    if g_dim != sum(1 for e in eps_list if e == 0):
        raise DecompositionError("zero-column count disagrees with index list")
    if h_dim != sum(1 for z in zeta_list if z == 0):
        raise DecompositionError("zero-row count disagrees with index list")

    structure = KroneckerStructure(
        p=p_dim,
        inf_degrees=tuple(inf_list),
        eps_indices=tuple(eps_list),
        zeta_indices=tuple(zeta_list),
    )
    if not structure.matches_shape(r, m):
        raise DecompositionError(
            f"index lists {structure} do not add up to the pencil shape {r}x{m}"
        )

    row_heights = (p_dim, q_dim, eps_rows, zeta_rows, h_dim)
    col_widths = (p_dim, q_dim, eps_cols, zeta_cols, g_dim)
    blocks = []
    br = bc = 0
    for height, width in zip(row_heights, col_widths):
        blocks.append(
            (
                Fw.block(br, br + height, bc, bc + width),
                Gw.block(br, br + height, bc, bc + width),
            )
        )
        br += height
        bc += width
    block_pencils = tuple(blocks)

    dec = PencilDecomposition(
        F=F,
        G=G,
        P=Pw,
        Q=Qw,
        Q_inv=invert(Qw),
        structure=structure,
        M_finite=block_pencils[0][1],
        q_nilpotency_index=nilp_index,
        block_pencils=block_pencils,
        col_widths=col_widths,
        row_heights=row_heights,
    )
    _verify_decomposition(dec, Fw, Gw)
    return dec


def _verify_decomposition(dec: PencilDecomposition, Fw: RatMatrix, Gw: RatMatrix):
    """Exact reconstruction audit: P F Q and P G Q must equal the assembled
    block diagonals entry for entry (off-diagonal couplings all zero)."""
    if Fw != dec.canonical_F() or Gw != dec.canonical_G():
        raise DecompositionError("transformed pencil is not block diagonal")
    if dec.P @ dec.F @ dec.Q != Fw or dec.P @ dec.G @ dec.Q != Gw:
        raise DecompositionError("accumulated transforms do not reproduce the form")


# ---------------------------------------------------------------------------
# derived operations
# ---------------------------------------------------------------------------

def classify_regularity(F: RatMatrix, G: RatMatrix) -> Regularity:
    """Regular iff the pencil is square with trivial minimal structure.

    Decided structurally: a square pencil has identically vanishing
    determinant exactly when it carries minimal indices.
    """
    if F.shape != G.shape:
        raise DimensionMismatch(f"pencil shapes differ: {F.shape} vs {G.shape}")
    if F.rows != F.cols:
        return Regularity.SINGULAR
    s = kronecker_decompose(F, G).structure
    return Regularity.REGULAR if s.d == 0 and s.t == 0 else Regularity.SINGULAR


@dataclass(frozen=True)
class RegularSplit:
    """Finite / infinite splitting of a regular pencil."""

    p: int
    q: int
    M_finite: RatMatrix
    nilpotent: RatMatrix
    inf_degrees: tuple
    q_nilpotency_index: int
    P: RatMatrix
    Q: RatMatrix
    finite_block: tuple
    infinite_block: tuple


def split_regular_part(E: RatMatrix, A: RatMatrix) -> RegularSplit:
    """Deflate the eigenvalue at infinity of a regular pencil s*E - A.

    Returns the finite block (s*I_p - M_finite) and the infinite block
    (s*N - I_q) with N nilpotent; p + q equals the pencil size. Raises
    NotRegular when the input pencil is singular.
    """
    if E.shape != A.shape:
        raise DimensionMismatch(f"pencil shapes differ: {E.shape} vs {A.shape}")
    if E.rows != E.cols:
        raise NotRegular(f"non-square {E.rows}x{E.cols} pencil")
    dec = kronecker_decompose(E, A)
    s = dec.structure
    if s.d != 0 or s.t != 0:
        raise NotRegular(
            f"singular pencil: {s.d} column and {s.t} row minimal indices"
        )
    return RegularSplit(
        p=s.p,
        q=s.q,
        M_finite=dec.M_finite,
        nilpotent=dec.block_pencils[1][0],
        inf_degrees=s.inf_degrees,
        q_nilpotency_index=dec.q_nilpotency_index,
        P=dec.P,
        Q=dec.Q,
        finite_block=dec.block_pencils[0],
        infinite_block=dec.block_pencils[1],
    )


def structure_report(dec: PencilDecomposition) -> dict:
    """Serializable summary of a decomposition."""
    s = dec.structure
    return {
        "shape": [dec.F.rows, dec.F.cols],
        "regularity": (
            Regularity.REGULAR.value
            if dec.F.rows == dec.F.cols and s.d == 0 and s.t == 0
            else Regularity.SINGULAR.value
        ),
        "p": s.p,
        "q": s.q,
        "d": s.d,
        "t": s.t,
        "g": s.g,
        "h": s.h,
        "eps": list(s.eps_indices),
        "zeta": list(s.zeta_indices),
        "inf_degrees": list(s.inf_degrees),
        "q_nilpotency_index": dec.q_nilpotency_index,
        "block_dims": {
            "finite": [s.p, s.p],
            "infinite": [s.q, s.q],
            "eps": [dec.row_heights[2], dec.col_widths[2]],
            "zeta": [dec.row_heights[3], dec.col_widths[3]],
            "zero": [s.h, s.g],
        },
        "uniqueness_precondition": s.d == 0,
        "bookkeeping_ok": s.matches_shape(dec.F.rows, dec.F.cols),
    }
