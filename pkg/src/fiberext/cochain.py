"""Cochain calculus on dual complexes with finitely generated coefficients.

Line bundles that are trivial on every component of an snc variety are
classified by H^1 of the dual complex with values in the multiplicative
group of the base field.  Here the value group is replaced by a finitely
generated abelian group (written additively), which turns closedness,
exactness and class computations into decidable integer linear algebra.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd

from . import linalg
from .dual_complex import DeltaComplex, boundary_matrix, homology


class PreconditionError(ValueError):
    """An operation was invoked on data violating its preconditions."""


@dataclass(frozen=True)
class CoefficientGroup:
    """Z^rank plus cyclic factors of the given orders (a divisibility chain)."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(n <= 1 for n in self.torsion):
            raise ValueError("torsion orders must be > 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion orders must form a divisibility chain")

    @property
    def width(self) -> int:
        return self.rank + len(self.torsion)

    def reduce(self, vec):
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.width:
            raise ValueError(f"element must have {self.width} coordinates")
        free = vec[: self.rank]
        tors = tuple(x % n for x, n in zip(vec[self.rank:], self.torsion))
        return free + tors

    def zero(self):
        return (0,) * self.width

    def add(self, a, b):
        return self.reduce(tuple(x + y for x, y in zip(a, b)))

    def sub(self, a, b):
        return self.reduce(tuple(x - y for x, y in zip(a, b)))

    def neg(self, a):
        return self.reduce(tuple(-x for x in a))

    def scale(self, m, a):
        return self.reduce(tuple(m * x for x in a))

    def is_zero(self, a) -> bool:
        return self.reduce(a) == self.zero()

    def has_infinite_order(self, a) -> bool:
        return any(x != 0 for x in self.reduce(a)[: self.rank])


@dataclass(frozen=True)
class Cochain:
    """Total assignment of coefficient-group elements to the r-simplices."""

    complex: DeltaComplex
    group: CoefficientGroup
    degree: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        expected = self.complex.count(self.degree)
        vals = tuple(self.group.reduce(v) for v in self.values)
        if len(vals) != expected:
            raise ValueError(
                f"cochain of degree {self.degree} needs {expected} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)

    def __sub__(self, other: "Cochain") -> "Cochain":
        if (self.complex, self.group, self.degree) != (other.complex, other.group, other.degree):
            raise ValueError("cochains live on different complexes or groups")
        vals = tuple(self.group.sub(a, b) for a, b in zip(self.values, other.values))
        return Cochain(self.complex, self.group, self.degree, vals)

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.complex, self.group, self.degree) != (other.complex, other.group, other.degree):
            raise ValueError("cochains live on different complexes or groups")
        vals = tuple(self.group.add(a, b) for a, b in zip(self.values, other.values))
        return Cochain(self.complex, self.group, self.degree, vals)

    def is_zero(self) -> bool:
        return all(self.group.is_zero(v) for v in self.values)


@dataclass(frozen=True)
class ClosednessResult:
    closed: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.closed


@dataclass(frozen=True)
class NotExact:
    reason: str = "no 0-cochain has this coboundary"


@dataclass(frozen=True)
class NotClosed:
    witness: str


@dataclass(frozen=True)
class GroupInvariants:
    """Finitely generated abelian group: free rank plus invariant factors."""

    rank: int
    torsion: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion


@dataclass(frozen=True)
class H1Class:
    """A cohomology class: closed representative plus the full H^1 profile."""

    representative: Cochain
    group_profile: GroupInvariants

    @property
    def is_trivial(self) -> bool:
        return not isinstance(is_exact(self.representative), NotExact)

    def same_class(self, other: "H1Class") -> bool:
        return not isinstance(is_exact(self.representative - other.representative), NotExact)


@dataclass(frozen=True)
class LineBundleClass:
    """Certified gluing datum of a bundle trivial on every component."""

    h1: H1Class
    trivial: bool


# ---------------------------------------------------------------------------
# Coboundary, closedness, exactness
# ---------------------------------------------------------------------------

def _vertex_incidence(complex: DeltaComplex):
    """Edge-by-vertex matrix D with D[e][l] = +1, D[e][j] = -1 for the edge
    between components l < j (facet order: position 0 drops the smaller
    index)."""
    n_v = complex.count(0)
    n_e = complex.count(1)
    mat = [[0] * n_v for _ in range(n_e)]
    for e in range(n_e):
        larger, smaller = complex.facets[0][e]
        mat[e][smaller] += 1
        mat[e][larger] -= 1
    return mat


def coboundary(beta: Cochain) -> Cochain:
    """Degree-raising map: the edge between components l < j receives
    beta(l) - beta(j)."""
    if beta.degree != 0:
        raise PreconditionError("coboundary is implemented for 0-cochains")
    group = beta.group
    values = []
    for e in range(beta.complex.count(1)):
        larger, smaller = beta.complex.facets[0][e]
        values.append(group.sub(beta.values[smaller], beta.values[larger]))
    return Cochain(beta.complex, group, 1, tuple(values))


def is_closed(phi: Cochain) -> ClosednessResult:
    """A 1-cochain is closed iff phi(ij) + phi(jk) - phi(ik) vanishes on
    every 2-simplex Z_ijk; the first offending simplex is the witness."""
    if phi.degree != 1:
        raise PreconditionError("is_closed expects a 1-cochain")
    cx, group = phi.complex, phi.group
    if cx.dimension < 2:
        return ClosednessResult(True)
    for t in range(cx.count(2)):
        f_jk, f_ik, f_ij = cx.facets[1][t]
        total = group.sub(group.add(phi.values[f_ij], phi.values[f_jk]), phi.values[f_ik])
        if not group.is_zero(total):
            return ClosednessResult(False, cx.simplex_ids[2][t])
    return ClosednessResult(True)


def is_exact(phi: Cochain):
    """Solve coboundary(beta) = phi over the coefficient group.

    Free and torsion coordinates are handled separately: integer solves via
    Smith reduction, modular solves for each cyclic factor.  Returns the
    0-cochain beta or NotExact.
    """
    if phi.degree != 1:
        raise PreconditionError("is_exact expects a 1-cochain")
    if not is_closed(phi):
        raise PreconditionError("is_exact expects a closed 1-cochain")
    cx, group = phi.complex, phi.group
    n_v = cx.count(0)
    mat = _vertex_incidence(cx)
    per_vertex = [[0] * group.width for _ in range(n_v)]
    for p in range(group.rank):
        rhs = [phi.values[e][p] for e in range(cx.count(1))]
        sol = linalg.solve_integer(mat, rhs, n_v)
        if sol is None:
            return NotExact()
        for v in range(n_v):
            per_vertex[v][p] = sol[v]
    for k, order in enumerate(group.torsion):
        p = group.rank + k
        rhs = [phi.values[e][p] for e in range(cx.count(1))]
        sol = linalg.solve_mod(mat, rhs, order, n_v)
        if sol is None:
            return NotExact()
        for v in range(n_v):
            per_vertex[v][p] = sol[v]
    return Cochain(cx, group, 0, tuple(tuple(v) for v in per_vertex))


# ---------------------------------------------------------------------------
# H^1 with finitely generated coefficients
# ---------------------------------------------------------------------------

def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factor_chain(orders) -> tuple[int, ...]:
    """Canonical invariant factors of a direct sum of cyclic groups."""
    primary = defaultdict(list)
    for o in orders:
        for p, e in _factorize(int(o)).items():
            primary[p].append(e)
    slots = max((len(v) for v in primary.values()), default=0)
    chain = []
    for k in range(slots):
        f = 1
        for p, exps in primary.items():
            exps = sorted(exps, reverse=True)
            if k < len(exps):
                f *= p ** exps[k]
        chain.append(f)
    return tuple(sorted(chain))


def cohomology_group(complex: DeltaComplex, group: CoefficientGroup) -> GroupInvariants:
    """H^1 of the complex with the given coefficients, computed directly
    from the cochain complex (not via universal coefficients)."""
    n_e = complex.count(1)
    if n_e == 0:
        return GroupInvariants(0, ())
    d0_cols = linalg.columns(_vertex_incidence(complex), complex.count(0))
    if complex.dimension >= 2:
        d1 = []
        for t in range(complex.count(2)):
            row = [0] * n_e
            for i, f in enumerate(complex.facets[1][t]):
                row[f] += (-1) ** i
            d1.append(row)
    else:
        d1 = []

    # Integer coefficients: ker(d1) / im(d0) inside Z^edges.
    gens = linalg.kernel_basis(d1, n_e)
    free_rank, tors_int = linalg.lattice_quotient(gens, d0_cols, n_e)

    orders = list(tors_int) * group.rank if group.rank else []
    rank_total = group.rank * free_rank

    # Each cyclic factor Z/n: {x : d1 x = 0 mod n} / (im d0 + n Z^edges).
    for n in group.torsion:
        if d1:
            block = [row + [-n if col == t else 0 for col in range(len(d1))]
                     for t, row in enumerate(d1)]
            gens_mod = [vec[:n_e] for vec in linalg.kernel_basis(block, n_e + len(d1))]
        else:
            gens_mod = linalg.identity(n_e)
        rels = [list(c) for c in d0_cols]
        for i in range(n_e):
            rels.append([n if j == i else 0 for j in range(n_e)])
        free_mod, tors_mod = linalg.lattice_quotient(gens_mod, rels, n_e)
        assert free_mod == 0
        orders.extend(tors_mod)

    return GroupInvariants(rank_total, invariant_factor_chain(orders))


def hom_from_h1(complex: DeltaComplex, group: CoefficientGroup) -> GroupInvariants:
    """Hom(H_1(complex, Z), group), from the integral homology profile."""
    b1, divisors = homology(complex).degree(1)
    rank = b1 * group.rank
    orders = list(group.torsion) * b1
    for d in divisors:
        for n in group.torsion:
            g = gcd(d, n)
            if g > 1:
                orders.append(g)
    return GroupInvariants(rank, invariant_factor_chain(orders))


def h1_class(phi: Cochain) -> H1Class:
    """Class of a closed 1-cochain in H^1, with the computed group profile.

    The profile is cross-checked against Hom(H_1, A); since H_0 is free
    there is no Ext correction and the two must coincide.
    """
    if not is_closed(phi):
        raise PreconditionError("h1_class expects a closed 1-cochain")
    profile = cohomology_group(phi.complex, phi.group)
    expected = hom_from_h1(phi.complex, phi.group)
    if profile != expected:
        raise ArithmeticError(
            f"H^1 computation disagrees with Hom(H_1, A): {profile} vs {expected}"
        )
    return H1Class(phi, profile)


def glue_check(phi: Cochain):
    """Certify a 1-cochain as the gluing datum of a line bundle trivial on
    every component, or reject it with the offending triple overlap."""
    closed = is_closed(phi)
    if not closed:
        return NotClosed(closed.witness)
    cls = h1_class(phi)
    return LineBundleClass(h1=cls, trivial=cls.is_trivial)


def restrict(phi: Cochain, subcomplex: DeltaComplex, maps) -> Cochain:
    """Restriction of a cochain along a closure subcomplex inclusion."""
    if phi.degree >= len(maps):
        raise ValueError("subcomplex has no simplices in this degree")
    values = tuple(phi.values[old] for old in maps[phi.degree])
    return Cochain(subcomplex, phi.group, phi.degree, values)
