"""Dual complexes of simple normal crossing varieties.

The combinatorics of an snc variety are recorded stratum by stratum: a
level-r stratum is an irreducible component of an (r+1)-fold intersection
of components, and knows which stratum contains it when one index is
dropped.  From this we build an ordered Delta-complex and compute its
integer homology by Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg


class StrataError(ValueError):
    """The stratum description violates an snc invariant."""


@dataclass(frozen=True)
class Stratum:
    ident: str
    indices: tuple[int, ...]
    facets: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        object.__setattr__(self, "facets", tuple(self.facets))


@dataclass(frozen=True)
class SncStrata:
    """Strata of an snc variety, grouped by level (r = |J| - 1)."""

    levels: tuple[tuple[Stratum, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(tuple(level) for level in self.levels))

    @property
    def dimension(self) -> int:
        return len(self.levels) - 1


@dataclass(frozen=True)
class DeltaComplex:
    """Ordered Delta-complex: simplex ids per dimension plus facet maps.

    ``facets[r][i]`` (r >= 1) lists, for the i-th r-simplex, the indices of
    its r+1 facets in dimension r-1; position k corresponds to dropping the
    k-th vertex in the global component order.
    """

    simplex_ids: tuple[tuple[str, ...], ...]
    facets: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.simplex_ids) - 1

    def count(self, r: int) -> int:
        return len(self.simplex_ids[r]) if 0 <= r <= self.dimension else 0

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(ids) for ids in self.simplex_ids)

    @property
    def total_simplices(self) -> int:
        return sum(self.counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** r * c for r, c in enumerate(self.counts))

    def closure(self, r: int, index: int):
        """Subcomplex generated by one simplex, with index maps back.

        Returns ``(sub, maps)`` where ``maps[k]`` lists, per new k-simplex,
        its index in this complex.
        """
        keep = [set() for _ in range(r + 1)]
        keep[r].add(index)
        for k in range(r, 0, -1):
            for i in keep[k]:
                keep[k - 1].update(self.facets[k - 1][i])
        maps = [sorted(keep[k]) for k in range(r + 1)]
        new_index = [{old: new for new, old in enumerate(maps[k])} for k in range(r + 1)]
        ids = tuple(tuple(self.simplex_ids[k][i] for i in maps[k]) for k in range(r + 1))
        facets = tuple(
            tuple(tuple(new_index[k - 1][f] for f in self.facets[k - 1][i]) for i in maps[k])
            for k in range(1, r + 1)
        )
        return DeltaComplex(ids, facets), maps


def build_dual_complex(strata: SncStrata) -> DeltaComplex:
    """Assemble the ordered Delta-complex of an snc stratum description.

    One r-simplex per level-r stratum; several simplices may share a vertex
    set (a Delta-complex, not a simplicial complex).  Facet references must
    be consistent: the two ways around any codimension-2 face agree.
    """
    seen = {}
    by_level = []
    for r, level in enumerate(strata.levels):
        table = {}
        for s in level:
            if s.ident in seen:
                raise StrataError(f"duplicate stratum id {s.ident!r}")
            seen[s.ident] = (r, s)
            if len(s.indices) != r + 1:
                raise StrataError(f"stratum {s.ident!r} at level {r} must have {r + 1} indices")
            if any(a >= b for a, b in zip(s.indices, s.indices[1:])):
                raise StrataError(f"index set of {s.ident!r} must be strictly increasing")
            if len(s.facets) != (r + 1 if r > 0 else 0):
                raise StrataError(f"stratum {s.ident!r} must list {r + 1} facets")
            table[s.ident] = s
        by_level.append(table)

    if strata.levels:
        vertex_indices = [s.indices[0] for s in strata.levels[0]]
        if len(set(vertex_indices)) != len(vertex_indices):
            raise StrataError("component indices at level 0 must be distinct")

    for r in range(1, len(strata.levels)):
        for s in strata.levels[r]:
            for i, fid in enumerate(s.facets):
                if fid not in by_level[r - 1]:
                    raise StrataError(f"facet {fid!r} of {s.ident!r} is not a level-{r - 1} stratum")
                expected = s.indices[:i] + s.indices[i + 1:]
                if by_level[r - 1][fid].indices != expected:
                    raise StrataError(
                        f"facet {fid!r} of {s.ident!r} has index set "
                        f"{by_level[r - 1][fid].indices}, expected {expected}"
                    )
            if r >= 2:
                for i in range(r + 1):
                    for j in range(i + 1, r + 1):
                        fi = by_level[r - 1][s.facets[i]]
                        fj = by_level[r - 1][s.facets[j]]
                        if fi.facets[j - 1] != fj.facets[i]:
                            raise StrataError(
                                f"inconsistent facets of {s.ident!r}: dropping indices "
                                f"{s.indices[i]} and {s.indices[j]} in either order must "
                                "reach the same stratum"
                            )

    ids = tuple(tuple(s.ident for s in level) for level in strata.levels)
    position = [{s.ident: k for k, s in enumerate(level)} for level in strata.levels]
    facets = tuple(
        tuple(tuple(position[r - 1][fid] for fid in s.facets) for s in strata.levels[r])
        for r in range(1, len(strata.levels))
    )
    return DeltaComplex(ids, facets)


def boundary_matrix(complex: DeltaComplex, r: int):
    """Integer boundary matrix B_r mapping r-chains to (r-1)-chains.

    The column of an r-simplex is the alternating sum of its facets.
    """
    if not 1 <= r <= complex.dimension:
        raise ValueError(f"degree {r} out of range 1..{complex.dimension}")
    rows = complex.count(r - 1)
    cols = complex.count(r)
    mat = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        for i, f in enumerate(complex.facets[r - 1][j]):
            mat[f][j] += (-1) ** i
    return mat


@dataclass(frozen=True)
class HomologyProfile:
    """Betti rank and torsion invariant factors per degree."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def degree(self, k: int):
        if 0 <= k < len(self.betti):
            return self.betti[k], self.torsion[k]
        return 0, ()


def homology(complex: DeltaComplex) -> HomologyProfile:
    """Integral homology of the complex via Smith normal form."""
    top = complex.dimension
    diag = {r: linalg.snf_diagonal(boundary_matrix(complex, r), complex.count(r))
            for r in range(1, top + 1)}
    betti = []
    torsion = []
    for k in range(top + 1):
        rank_k = len(diag.get(k, []))
        rank_next = len(diag.get(k + 1, []))
        betti.append(complex.count(k) - rank_k - rank_next)
        torsion.append(tuple(d for d in diag.get(k + 1, []) if d > 1))
    return HomologyProfile(tuple(betti), tuple(torsion))


def torus_rank(complex: DeltaComplex) -> int:
    """First Betti number: the torus rank of Pic^0 of the snc variety."""
    return homology(complex).degree(1)[0]


# ---------------------------------------------------------------------------
# Convenience constructors
# ---------------------------------------------------------------------------

def strata_from_multigraph(n_vertices: int, edges) -> SncStrata:
    """Strata of a loop-free multigraph: one component per vertex, one
    double curve per edge.  Loops are rejected (not snc)."""
    verts = tuple(Stratum(f"W{i}", (i,)) for i in range(n_vertices))
    level1 = []
    for k, (a, b) in enumerate(edges):
        if a == b:
            raise StrataError("loop edges are not simple normal crossing")
        i, j = sorted((a, b))
        level1.append(Stratum(f"E{k}", (i, j), (f"W{j}", f"W{i}")))
    levels = [verts]
    if level1:
        levels.append(tuple(level1))
    return SncStrata(tuple(levels))


def simplex_strata(indices: tuple[int, ...], full: bool = True) -> SncStrata:
    """All strata of components in general position over the given indices.

    With ``full`` false the top stratum is omitted (boundary-of-simplex
    pattern).
    """
    from itertools import combinations

    indices = tuple(sorted(indices))
    n = len(indices)
    top = n if full else n - 1
    levels = []
    for r in range(top):
        level = []
        for sub in combinations(indices, r + 1):
            name = "Z" + "".join(str(i) for i in sub)
            facs = tuple("Z" + "".join(str(i) for i in sub[:k] + sub[k + 1:]) for k in range(r + 1)) if r else ()
            level.append(Stratum(name, sub, facs))
        levels.append(tuple(level))
    return SncStrata(tuple(levels))
