"""Fiber intersection lattices and exact divisor-extension solvers.

A fiber of a projective family over a curve is recorded by the symmetric
matrix of pairwise intersection numbers of its irreducible components
together with their multiplicities in the scheme fiber.  The solvers adjust
a divisor by vertical components so that the result is numerically trivial
(or nef) on the fiber, working in exact rational arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import linalg


class PreconditionError(ValueError):
    """An operation was invoked on data violating its preconditions."""


def _to_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; use Fraction, int, or 'p/q'")
    return Fraction(x)


@dataclass(frozen=True)
class FiberLattice:
    """Intersection data of the components of a connected fiber.

    ``matrix[i][j]`` is the intersection number of components i and j;
    ``multiplicities`` are their coefficients in the scheme-theoretic fiber.
    """

    labels: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    multiplicities: tuple[int, ...]
    connected: bool = True

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(self.labels))
        mat = tuple(tuple(_to_fraction(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "multiplicities", tuple(int(c) for c in self.multiplicities))
        if len(mat) != n or any(len(row) != n for row in mat):
            raise ValueError("intersection matrix must be square and match the labels")
        if len(self.multiplicities) != n:
            raise ValueError("multiplicity vector length must match the matrix")
        if any(c <= 0 for c in self.multiplicities):
            raise ValueError("multiplicities must be positive integers")

    @property
    def size(self) -> int:
        return len(self.labels)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.matrix for x in row)


@dataclass(frozen=True)
class DivisorTrace:
    """Intersection numbers of a divisor with the fiber components."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_to_fraction(v) for v in self.values))

    def total(self, lattice: FiberLattice) -> Fraction:
        if len(self.values) != lattice.size:
            raise ValueError("trace length does not match the lattice")
        return sum((c * v for c, v in zip(lattice.multiplicities, self.values)), Fraction(0))


@dataclass(frozen=True)
class ExtensionResult:
    coefficients: tuple[Fraction, ...]
    denominator: int
    normalization: str
    achieved_trace: tuple[Fraction, ...]


@dataclass(frozen=True)
class Obstructed:
    reason: str
    value: Fraction | None = None


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group given by its invariant factor chain."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if any(d <= 1 for d in factors):
            raise ValueError("invariant factors must be > 1")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def order(self) -> int:
        p = 1
        for d in self.invariant_factors:
            p *= d
        return p

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def valid(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failed(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]


def _positive_semidefinite(mat) -> bool:
    """Exact PSD test by symmetric Gaussian elimination.

    All pivots must be >= 0, and a zero pivot forces the whole remaining
    row to vanish.
    """
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    for k in range(n):
        p = a[k][k]
        if p < 0:
            return False
        if p == 0:
            if any(a[k][j] != 0 for j in range(k + 1, n)):
                return False
            continue
        for i in range(k + 1, n):
            f = a[i][k] / p
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return True


def validate_lattice(lattice: FiberLattice) -> ValidationReport:
    """Check the Zariski-lemma invariants of a fiber lattice."""
    n = lattice.size
    mat = lattice.matrix
    checks = []

    symmetric = all(mat[i][j] == mat[j][i] for i in range(n) for j in range(i + 1, n))
    checks.append(("symmetric", symmetric, "" if symmetric else "matrix is not symmetric"))

    mc = linalg.mat_vec([list(r) for r in mat], list(lattice.multiplicities))
    trivial = all(x == 0 for x in mc)
    checks.append((
        "fiber_class_trivial",
        trivial,
        "" if trivial else f"matrix * multiplicities = {mc}",
    ))

    nsd = symmetric and _positive_semidefinite([[-x for x in row] for row in mat])
    checks.append((
        "negative_semidefinite",
        nsd,
        "" if nsd else "a pivot of the negated matrix is negative or a zero pivot has a nonzero row",
    ))

    if lattice.connected:
        kernel = linalg.rational_kernel([list(r) for r in mat], n)
        ok = len(kernel) == 1 and trivial
        if ok:
            vec = kernel[0]
            c = lattice.multiplicities
            i0 = next(j for j, x in enumerate(vec) if x != 0)
            ratio = Fraction(c[i0]) / vec[i0]
            ok = all(ratio * x == Fraction(ci) for x, ci in zip(vec, c))
        checks.append((
            "kernel_is_multiplicity_span",
            ok,
            "" if ok else f"rational kernel has dimension {len(kernel)} or is not spanned by the multiplicities",
        ))

    return ValidationReport(tuple(checks))


def _require_valid_connected(lattice: FiberLattice, op: str) -> None:
    if not lattice.connected:
        raise PreconditionError(f"{op} requires a connected fiber")
    report = validate_lattice(lattice)
    if not report.valid:
        raise PreconditionError(f"{op} requires a valid lattice; failed: {report.failed()}")


def _gauge_index(lattice: FiberLattice) -> int:
    return next(i for i, c in enumerate(lattice.multiplicities) if c != 0)


def _solve_gauged(lattice: FiberLattice, rhs: list[Fraction]) -> list[Fraction]:
    """Solve matrix @ x = rhs with x fixed to 0 at the gauge index.

    The reduced matrix (gauge row and column deleted) is negative definite,
    hence invertible; solvability of the full system is the caller's burden.
    """
    i0 = _gauge_index(lattice)
    idx = [i for i in range(lattice.size) if i != i0]
    reduced = [[lattice.matrix[i][j] for j in idx] for i in idx]
    sub = linalg.solve_rational(reduced, [rhs[i] for i in idx])
    assert sub is not None
    sol = [Fraction(0)] * lattice.size
    for k, i in enumerate(idx):
        sol[i] = sub[k]
    return sol


def _denominator(coeffs) -> int:
    return lcm(*[c.denominator for c in coeffs]) if coeffs else 1


def extend_trivial(lattice: FiberLattice, trace: DivisorTrace):
    """Coefficients a with (L + sum a_i C_i) numerically trivial on the fiber.

    Solvable exactly when the trace pairs to zero against the fiber class;
    the solution is normalized by a = 0 at the first component and is unique
    up to rational multiples of the multiplicity vector.
    """
    _require_valid_connected(lattice, "extend_trivial")
    total = trace.total(lattice)
    if total != 0:
        return Obstructed("trace pairs nonzero against the fiber class", total)
    rhs = [-v for v in trace.values]
    sol = _solve_gauged(lattice, rhs)
    achieved = [v + x for v, x in zip(trace.values, linalg.mat_vec([list(r) for r in lattice.matrix], sol))]
    assert all(x == 0 for x in achieved)
    i0 = _gauge_index(lattice)
    return ExtensionResult(
        coefficients=tuple(sol),
        denominator=_denominator(sol),
        normalization=f"a[{i0}] = 0",
        achieved_trace=tuple(achieved),
    )


def extend_nef(lattice: FiberLattice, trace: DivisorTrace, targets=None):
    """Coefficients b with (L + sum b_i C_i) . C_j equal to nonnegative targets.

    When targets are omitted, the whole total is placed on the first
    component with nonzero multiplicity.
    """
    _require_valid_connected(lattice, "extend_nef")
    total = trace.total(lattice)
    i0 = _gauge_index(lattice)
    if targets is None:
        if total < 0:
            return Obstructed("negative total: no nonnegative targets exist", total)
        d = [Fraction(0)] * lattice.size
        d[i0] = total / lattice.multiplicities[i0]
    else:
        d = [_to_fraction(x) for x in targets]
        if len(d) != lattice.size:
            raise ValueError("target vector length does not match the lattice")
        if any(x < 0 for x in d):
            raise PreconditionError("targets must be nonnegative")
        weighted = sum((Fraction(c) * x for c, x in zip(lattice.multiplicities, d)), Fraction(0))
        if weighted != total:
            return Obstructed("target sum mismatch: sum c_i d_i must equal the total", weighted - total)
    rhs = [t - v for t, v in zip(d, trace.values)]
    sol = _solve_gauged(lattice, rhs)
    achieved = [v + x for v, x in zip(trace.values, linalg.mat_vec([list(r) for r in lattice.matrix], sol))]
    assert achieved == d
    return ExtensionResult(
        coefficients=tuple(sol),
        denominator=_denominator(sol),
        normalization=f"b[{i0}] = 0",
        achieved_trace=tuple(achieved),
    )


def denominator_bound(lattice: FiberLattice) -> int:
    """Exponent of the cokernel torsion of the gauge-reduced lattice.

    For every integer trace orthogonal to the multiplicities, the
    denominator of the extend_trivial solution divides this bound.
    """
    _require_valid_connected(lattice, "denominator_bound")
    if not lattice.is_integral():
        raise ValueError("denominator_bound requires an integer intersection matrix")
    i0 = _gauge_index(lattice)
    idx = [i for i in range(lattice.size) if i != i0]
    reduced = [[int(lattice.matrix[i][j]) for j in idx] for i in idx]
    diag = linalg.snf_diagonal(reduced, len(idx))
    return diag[-1] if diag else 1


def component_group(lattice: FiberLattice) -> FiniteAbelianGroup:
    """Torsion of coker(matrix : Z^n -> {w : w . c = 0}).

    This is the lattice-level analogue of the group of connected components
    of the special fiber of the Neron model.
    """
    _require_valid_connected(lattice, "component_group")
    if not lattice.is_integral():
        raise ValueError("component_group requires an integer intersection matrix")
    n = lattice.size
    mat = [[int(x) for x in row] for row in lattice.matrix]
    gens = linalg.kernel_basis([list(lattice.multiplicities)], n)
    rels = linalg.columns(mat, n)
    _, torsion = linalg.lattice_quotient(gens, rels, n)
    return FiniteAbelianGroup(tuple(torsion))


def kodaira_cycle(n: int) -> FiberLattice:
    """Cycle of n rational (-2)-curves (Kodaira type I_n), n >= 2."""
    if n < 2:
        raise ValueError("a cycle needs at least two components")
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = -2
        j = (i + 1) % n
        mat[i][j] += 1
        mat[j][i] += 1
    return FiberLattice(
        labels=tuple(f"C{i + 1}" for i in range(n)),
        matrix=tuple(tuple(Fraction(x) for x in row) for row in mat),
        multiplicities=(1,) * n,
        connected=True,
    )
