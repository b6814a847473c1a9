"""Independent brute-force oracles used by the tests.

These deliberately avoid the library's linear-algebra routines: ranks come
from a plain rational Gaussian elimination, invariant factors from a naive
Euclidean diagonalization with first-nonzero pivoting, and cokernel orders
from direct scanning.  They exist so that the fast paths in the package are
checked against something that cannot share their bugs.
"""

from fractions import Fraction
from math import gcd, lcm


def rational_rank_oracle(mat):
    work = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / work[rank][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def naive_invariant_factors(mat):
    """Diagonal of a Smith form by plain Euclid, first-nonzero pivoting."""
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(m, n):
        # find any nonzero entry
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            moved = False
            for i in range(t + 1, m):
                while a[i][t] != 0:
                    if abs(a[i][t]) < abs(a[t][t]):
                        a[t], a[i] = a[i], a[t]
                        moved = True
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, n):
                while a[t][j] != 0:
                    if abs(a[t][j]) < abs(a[t][t]):
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
            if not moved and all(a[i][t] == 0 for i in range(t + 1, m)) \
                    and all(a[t][j] == 0 for j in range(t + 1, n)):
                break
        diag.append(abs(a[t][t]))
        t += 1
    diag = [d for d in diag if d != 0]
    # repair the divisibility chain pairwise with gcd/lcm
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            if diag[i + 1] % diag[i]:
                g = gcd(diag[i], diag[i + 1])
                diag[i], diag[i + 1] = g, diag[i] * diag[i + 1] // g
                changed = True
    return diag


def brute_homology(counts, boundaries):
    """Betti and torsion per degree from ranks and naive diagonalization.

    ``boundaries[r]`` is B_r for 1 <= r <= top (index 0 unused).
    """
    top = len(counts) - 1
    betti = []
    torsion = []
    for k in range(top + 1):
        rank_k = rational_rank_oracle(boundaries[k]) if k >= 1 else 0
        rank_next = rational_rank_oracle(boundaries[k + 1]) if k + 1 <= top else 0
        betti.append(counts[k] - rank_k - rank_next)
        if k + 1 <= top:
            torsion.append(tuple(d for d in naive_invariant_factors(boundaries[k + 1]) if d > 1))
        else:
            torsion.append(())
    return betti, torsion


def _inverse_columns(mat):
    """Columns of the inverse of a nonsingular rational matrix."""
    n = len(mat)
    work = [[Fraction(x) for x in row] + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
            for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        work[col] = [x / work[col][col] for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return [[work[i][n + j] for i in range(n)] for j in range(n)]


def generator_order_in_cokernel(mat, index):
    """Order of the standard generator e_index in Z^n / im(mat).

    ``mat`` must be square and nonsingular, so the cokernel is finite: the
    order is the least m with m * e_index in the image, found by scanning.
    """
    col = _inverse_columns(mat)[index]
    m = 1
    while True:
        if all((m * x).denominator == 1 for x in col):
            return m
        m += 1


def cokernel_exponent_oracle(mat):
    """Exponent of the finite cokernel of a nonsingular integer matrix."""
    n = len(mat)
    if n == 0:
        return 1
    return lcm(*[generator_order_in_cokernel(mat, i) for i in range(n)])


def cokernel_order_oracle(mat):
    """Order of the finite cokernel: |det| via fraction-free elimination."""
    n = len(mat)
    work = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det *= work[col][col]
        for i in range(col + 1, n):
            f = work[i][col] / work[col][col]
            work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    assert det.denominator == 1
    return abs(int(det))
