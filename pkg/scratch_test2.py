import random
import sys
import time

sys.path.insert(0, "src")
from fractions import Fraction

from penkron.ratmat import RatMatrix, block_diag
from penkron.structure import (
    kronecker_decompose, jordan_cell, nilpotent_shift, col_minimal_pair,
    row_minimal_pair, KroneckerStructure,
)


def unimodular(rng, n, n_ops=None):
    data = RatMatrix.identity(n).to_lists()
    if n_ops is None:
        n_ops = 2 * n + 2
    for _ in range(n_ops):
        op = rng.randrange(3)
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        if op == 0:
            c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
            data[i] = [a + c * b for a, b in zip(data[i], data[j])]
        elif op == 1:
            data[i], data[j] = data[j], data[i]
        else:
            data[i] = [-a for a in data[i]]
    return RatMatrix(n, n, data)


def random_case(rng):
    # draw blocks under a 12x12 budget
    fin, inf, eps, zeta = [], [], [], []
    g = rng.randrange(3)
    h = rng.randrange(3)
    rows = h
    cols = g
    for _ in range(rng.randrange(1, 6)):
        kind = rng.randrange(4)
        if kind == 0:
            size = rng.randrange(1, 4)
            if rows + size <= 12 and cols + size <= 12:
                fin.append((Fraction(rng.randrange(-3, 4)), size))
                rows += size; cols += size
        elif kind == 1:
            qd = rng.randrange(1, 4)
            if rows + qd <= 12 and cols + qd <= 12:
                inf.append(qd)
                rows += qd; cols += qd
        elif kind == 2:
            e = rng.randrange(1, 4)
            if rows + e <= 12 and cols + e + 1 <= 12:
                eps.append(e)
                rows += e; cols += e + 1
        else:
            z = rng.randrange(1, 4)
            if rows + z + 1 <= 12 and cols + z <= 12:
                zeta.append(z)
                rows += z + 1; cols += z
    Fb, Gb = [], []
    for a, size in fin:
        Fb.append(RatMatrix.identity(size)); Gb.append(jordan_cell(a, size))
    for qd in inf:
        Fb.append(nilpotent_shift(qd)); Gb.append(RatMatrix.identity(qd))
    for e in eps:
        fe, ge = col_minimal_pair(e); Fb.append(fe); Gb.append(ge)
    for z in zeta:
        fz, gz = row_minimal_pair(z); Fb.append(fz); Gb.append(gz)
    Fb.append(RatMatrix.zeros(h, g)); Gb.append(RatMatrix.zeros(h, g))
    F0, G0 = block_diag(Fb), block_diag(Gb)
    P = unimodular(rng, F0.rows)
    Q = unimodular(rng, F0.cols)
    truth = KroneckerStructure(
        p=sum(s for _, s in fin),
        inf_degrees=tuple(sorted(inf)),
        eps_indices=tuple([0] * g + sorted(eps)),
        zeta_indices=tuple([0] * h + sorted(zeta)),
    )
    return P @ F0 @ Q, P @ G0 @ Q, truth


rng = random.Random(12345)
t0 = time.time()
n_cases = 100
for i in range(n_cases):
    F, G, truth = random_case(rng)
    dec = kronecker_decompose(F, G)
    s = dec.structure
    assert s == truth, f"case {i}: got {s}, want {truth}  shape {F.shape}"
t1 = time.time()
print(f"{n_cases} scrambled cases OK in {t1-t0:.2f}s ({(t1-t0)/n_cases*1000:.1f} ms/case)")
