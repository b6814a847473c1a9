"""Exact integer and rational linear algebra.

All routines operate on plain lists of Python ints or ``fractions.Fraction``
values.  Nothing here ever touches floating point.  Matrices are lists of
rows; an empty matrix must be accompanied by an explicit column count where
the shape is ambiguous.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(mat, vec):
    return [sum(row[j] * vec[j] for j in range(len(vec))) for row in mat]


def transpose(mat, ncols=None):
    if not mat:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*mat)]


def columns(mat, ncols=None):
    return transpose(mat, ncols)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(mat, ncols=None):
    """Return ``(u, s, v)`` with ``u @ mat @ v == s`` in Smith normal form.

    ``u`` and ``v`` are unimodular; the diagonal of ``s`` is nonnegative and
    forms a divisibility chain.  Pivots are chosen by minimal absolute value
    to limit coefficient growth.
    """
    m = len(mat)
    n = len(mat[0]) if mat else (ncols or 0)
    s = [[int(x) for x in row] for row in mat]
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        s[dst] = [a + q * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            piv = None
            for i in range(t, m):
                for j in range(t, n):
                    if s[i][j] != 0 and (piv is None or abs(s[i][j]) < abs(s[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return _fix_signs(s, u, v, m, n)
            if piv[0] != t:
                swap_rows(t, piv[0])
            if piv[1] != t:
                swap_cols(t, piv[1])

            # Clear row/column t; a nonzero remainder is strictly smaller in
            # absolute value than the pivot, so swapping it up terminates.
            clean = True
            for i in range(t + 1, m):
                if s[i][t] != 0:
                    add_row(i, t, -(s[i][t] // s[t][t]))
                    if s[i][t] != 0:
                        swap_rows(t, i)
                        clean = False
            if not clean:
                continue
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    add_col(j, t, -(s[t][j] // s[t][t]))
                    if s[t][j] != 0:
                        swap_cols(t, j)
                        clean = False
            if not clean:
                continue

            # Enforce divisibility of the remaining block by the pivot.
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if s[i][j] % s[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
    return _fix_signs(s, u, v, m, n)


def _fix_signs(s, u, v, m, n):
    for t in range(min(m, n)):
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return u, s, v


def snf_diagonal(mat, ncols=None):
    _, s, _ = smith_normal_form(mat, ncols)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i] != 0]


def integer_rank(mat, ncols=None):
    return len(snf_diagonal(mat, ncols))


def kernel_basis(mat, ncols=None):
    """Basis of the integer kernel lattice ``{x : mat @ x == 0}``."""
    n = len(mat[0]) if mat else (ncols or 0)
    _, s, v = smith_normal_form(mat, n)
    rank = sum(1 for i in range(min(len(s), n)) if s[i][i] != 0)
    return [[row[j] for row in v] for j in range(rank, n)]


def solve_integer(mat, rhs, ncols=None):
    """One integer solution of ``mat @ x == rhs``, or ``None``."""
    m = len(mat)
    n = len(mat[0]) if mat else (ncols or 0)
    u, s, v = smith_normal_form(mat, n)
    c = mat_vec(u, rhs)
    y = [0] * n
    for i in range(m):
        d = s[i][i] if i < n else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return mat_vec(v, y)


def solve_mod(mat, rhs, mod, ncols=None):
    """One solution of ``mat @ x == rhs (mod mod)``, or ``None``."""
    m = len(mat)
    n = len(mat[0]) if mat else (ncols or 0)
    u, s, v = smith_normal_form(mat, n)
    c = [x % mod for x in mat_vec(u, rhs)]
    y = [0] * n
    for i in range(m):
        d = s[i][i] if i < n else 0
        g = gcd(d, mod)
        if c[i] % g:
            return None
        if d:
            dg, mg = d // g, mod // g
            y[i] = (c[i] // g) * pow(dg, -1, mg) % mg if mg > 1 else 0
    return [x % mod for x in mat_vec(v, y)]


# ---------------------------------------------------------------------------
# Lattices and quotients
# ---------------------------------------------------------------------------

def row_lattice_basis(rows, n):
    """Echelon basis of the lattice spanned (over Z) by the given rows."""
    work = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(n):
        live = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            reduced = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r2 = [a - q * b for a, b in zip(r, p)]
                (reduced if r2[col] != 0 else rest).append(r2)
            live = reduced
        if live:
            basis.append(live[0])
        work = [r for r in rest if any(r)]
    return basis


def coordinates_in_basis(vec, basis):
    """Coordinates of ``vec`` in an echelon lattice basis, or ``None``."""
    r = list(vec)
    coords = []
    for b in basis:
        p = next(j for j, x in enumerate(b) if x != 0)
        if r[p] % b[p]:
            return None
        q = r[p] // b[p]
        coords.append(q)
        r = [a - q * c for a, c in zip(r, b)]
    return coords if not any(r) else None


def lattice_quotient(gens, rels, n):
    """Invariants of ``span(gens) / span(rels)`` inside Z^n.

    ``rels`` must lie in the lattice spanned by ``gens``.  Returns
    ``(free_rank, torsion)`` with torsion a divisibility chain of ints > 1.
    """
    basis = row_lattice_basis(gens, n)
    if not basis:
        return 0, []
    cols = []
    for rel in rels:
        coords = coordinates_in_basis(rel, basis)
        if coords is None:
            raise ValueError("relation outside the generated lattice")
        cols.append(coords)
    rel_mat = transpose(cols, len(basis))
    diag = snf_diagonal(rel_mat, len(cols))
    free = len(basis) - len(diag)
    torsion = [d for d in diag if d > 1]
    return free, torsion


# ---------------------------------------------------------------------------
# Rational elimination
# ---------------------------------------------------------------------------

def rational_rank(mat):
    work = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / prow[col]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        rank += 1
    return rank


def rational_kernel(mat, ncols=None):
    """Basis of the rational nullspace ``{x : mat @ x == 0}``."""
    n = len(mat[0]) if mat else (ncols or 0)
    work = [[Fraction(x) for x in row] for row in mat]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        work[rank] = [x / prow[col] for x in prow]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        pivots.append(col)
        rank += 1
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * n
        vec[fcol] = Fraction(1)
        for r, pcol in enumerate(pivots):
            vec[pcol] = -work[r][fcol]
        basis.append(vec)
    return basis


def solve_rational(mat, rhs):
    """One rational solution of ``mat @ x == rhs``, or ``None``."""
    if not mat:
        return []
    n = len(mat[0])
    work = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        work[rank] = [x / prow[col] for x in prow]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(work)):
        if work[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for r, pcol in enumerate(pivots):
        sol[pcol] = work[r][n]
    return sol
