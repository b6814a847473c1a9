"""Semi-abelian classification of Pic^0 of degenerate fibers.

Curve fibers are handled through their dual multigraphs (loops record
nodal self-intersections); higher-dimensional snc fibers go through the
dual complex.  The torus rank is the first Betti number in either case;
the abelian part is the sum of component genera for curves and must be
supplied as h^1(O) for general snc fibers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochain import CoefficientGroup
from .dual_complex import SncStrata, build_dual_complex, torus_rank


class NotSemistable(ValueError):
    """The fiber has worse-than-nodal singularities; Pic^0 need not be
    semi-abelian (a cusp gives the additive group)."""


@dataclass(frozen=True)
class CurveFiber:
    """A reduced curve fiber: component genera and the dual multigraph.

    One edge per node; a loop is a node of an irreducible component."""

    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()
    nodal: bool = True

    def __post_init__(self):
        object.__setattr__(self, "genera", tuple(int(g) for g in self.genera))
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if any(g < 0 for g in self.genera):
            raise ValueError("genera must be nonnegative")
        n = len(self.genera)
        if any(not (0 <= a < n and 0 <= b < n) for a, b in self.edges):
            raise ValueError("edge endpoints must reference components")

    @property
    def components(self) -> int:
        return len(self.genera)


@dataclass(frozen=True)
class SncFiber:
    """An snc fiber: stratum description plus h^1(O) when known."""

    strata: SncStrata
    h1_structure: int | None = None


@dataclass(frozen=True)
class SemiAbelianType:
    """Torus rank and abelian dimension of Pic^0; proper iff no torus part."""

    torus_rank: int
    abelian_dim: int | None
    proper: bool
    label: str


def _semi_abelian_type(t: int, a: int | None) -> SemiAbelianType:
    if t == 0:
        label = "abelian variety"
    elif a == 0:
        label = "torus"
    else:
        label = "semi-abelian"
    return SemiAbelianType(torus_rank=t, abelian_dim=a, proper=(t == 0), label=label)


def _connected(n: int, edges) -> bool:
    if n == 0:
        return False
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def classify_curve_fiber(fiber: CurveFiber) -> SemiAbelianType:
    """Pic^0 of a connected nodal curve: torus rank is the first Betti
    number of the dual graph, abelian dimension the sum of genera."""
    if not fiber.nodal:
        raise NotSemistable("fiber has non-nodal singularities; Pic^0 may have additive parts")
    if not _connected(fiber.components, fiber.edges):
        raise ValueError("fiber graph must be connected and nonempty")
    t = len(fiber.edges) - fiber.components + 1
    a = sum(fiber.genera)
    return _semi_abelian_type(t, a)


def classify_snc_fiber(fiber: SncFiber) -> SemiAbelianType:
    """Pic^0 of a projective snc variety: the torus rank is combinatorial;
    the abelian dimension needs h^1(O) as extra geometric input."""
    complex = build_dual_complex(fiber.strata)
    t = torus_rank(complex)
    if fiber.h1_structure is None:
        return _semi_abelian_type(t, None)
    a = fiber.h1_structure - t
    if a < 0:
        raise ValueError(f"h^1(O) = {fiber.h1_structure} is smaller than the torus rank {t}")
    return _semi_abelian_type(t, a)


def numerical_triviality_on_fiber(fiber: CurveFiber, degrees) -> bool:
    """A divisor is numerically trivial on a curve fiber iff its degree on
    every irreducible component vanishes."""
    degrees = [int(d) for d in degrees]
    if len(degrees) != fiber.components:
        raise ValueError("one degree per component is required")
    return all(d == 0 for d in degrees)


# ---------------------------------------------------------------------------
# Extension obstructions over higher-dimensional bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SamplePoint:
    """A base point with its fiber classification and the value of the
    candidate divisor class in torus coordinates."""

    label: str
    fiber_type: SemiAbelianType
    value: tuple[int, ...]


@dataclass(frozen=True)
class ObstructionScenario:
    proper_base: bool
    group: CoefficientGroup
    points: tuple[SamplePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) < 2:
            raise ValueError("a scenario needs at least two sample points")
        for p in self.points:
            if p.fiber_type.torus_rank < 1 or p.fiber_type.abelian_dim != 0:
                raise ValueError(f"fiber at {p.label!r} is not a torus")
            self.group.reduce(p.value)


@dataclass(frozen=True)
class ObstructionCertificate:
    witnesses: tuple[str, str]
    values: tuple[tuple[int, ...], tuple[int, ...]]
    note: str


@dataclass(frozen=True)
class Unobstructed:
    reason: str


def extension_obstruction(scenario: ObstructionScenario):
    """Certify that no multiple of the divisor extends numerically trivially.

    A section of a torus bundle over a proper base curve is constant, so two
    sample points with values differing by an element of infinite order rule
    out the extension of every nonzero multiple.  No claim of extendability
    is made in the Unobstructed case.
    """
    if not scenario.proper_base:
        return Unobstructed("base curve is not proper; constancy argument does not apply")
    group = scenario.group
    torsion_witness = None
    for i, p in enumerate(scenario.points):
        for q in scenario.points[i + 1:]:
            diff = group.sub(p.value, q.value)
            if group.has_infinite_order(diff):
                return ObstructionCertificate(
                    witnesses=(p.label, q.label),
                    values=(p.value, q.value),
                    note=(
                        "section values differ by an element of infinite order; "
                        "scaling by any m != 0 preserves the inequality, so no "
                        "multiple extends numerically trivially"
                    ),
                )
            if not group.is_zero(diff):
                torsion_witness = (p.label, q.label)
    if torsion_witness:
        return Unobstructed(
            "inconclusive under torsion: sample values differ only by finite-order "
            f"elements (witnesses {torsion_witness[0]!r}, {torsion_witness[1]!r})"
        )
    return Unobstructed("all section values agree; constant sections exist")
