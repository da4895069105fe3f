import sys
sys.path.insert(0, "src")
from fractions import Fraction

from penkron.ratmat import RatMatrix, rref, rank, nullspace_basis, solve_linear, invert, mat_pow, block_diag
from penkron.structure import (
    kronecker_decompose, jordan_cell, nilpotent_shift, col_minimal_pair,
    row_minimal_pair, staircase_reduce, classify_regularity, Regularity,
    split_regular_part, structure_report,
)

M = lambda rows: RatMatrix.from_rows(rows)

# worked example pencil
F = M([[1, 0], [0, 0]])
G = M([[0, 1], [1, -1]])
dec = kronecker_decompose(F, G)
print("worked example:", structure_report(dec))
print("Q_p:", dec.Q_p)

# L1 pencil
F1 = M([[1, 0]])
G1 = M([[0, 1]])
d1 = kronecker_decompose(F1, G1)
print("L1:", structure_report(d1))

# zero 2x3
Z = RatMatrix.zeros(2, 3)
d0 = kronecker_decompose(Z, Z)
print("zero 2x3:", structure_report(d0))

# canonical mix: L1 + (s-2) + H1
Fc = block_diag([col_minimal_pair(1)[0], M([[1]]), M([[0]])])
Gc = block_diag([col_minimal_pair(1)[1], M([[2]]), M([[1]])])
dc = kronecker_decompose(Fc, Gc)
print("L1+(s-2)+H1:", structure_report(dc))
print("M_finite:", dc.M_finite)

# regular split example
E = M([[0, 1], [0, 0]])
A = RatMatrix.identity(2)
rs = split_regular_part(E, A)
print("nilpotent regular: p", rs.p, "q", rs.q, "degs", rs.inf_degrees)

rs2 = split_regular_part(F, G)
print("worked split: p", rs2.p, "q", rs2.q, "degs", rs2.inf_degrees, "M", rs2.M_finite)

print("regularity:", classify_regularity(F, G), classify_regularity(F1, G1))

# staircase_reduce examples
sf = staircase_reduce(F1, G1)
print("stair L1 eps", sf.eps_indices, "zeta", sf.zeta_indices, "inf", sf.inf_degrees)
Fz = M([[1], [0]])
Gz = M([[0], [1]])
sfz = staircase_reduce(Fz, Gz)
print("stair Lzeta eps", sfz.eps_indices, "zeta", sfz.zeta_indices)
sf0 = staircase_reduce(M([[0]]), M([[0]]))
print("stair zero 1x1 eps", sf0.eps_indices, "zeta", sf0.zeta_indices)
