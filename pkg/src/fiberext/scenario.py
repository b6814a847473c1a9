"""Parsing of JSON scenario files.

Rationals are written as integers or strings "p/q"; floating point values
are rejected outright so no inexact number can leak into a computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .cochain import Cochain, CoefficientGroup
from .dual_complex import SncStrata, Stratum, build_dual_complex
from .lattice import DivisorTrace, FiberLattice
from .pic0 import (
    CurveFiber,
    ObstructionScenario,
    SamplePoint,
    SemiAbelianType,
    _semi_abelian_type,
)


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ValueError(f"not an exact rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ValueError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    return str(x)


def parse_lattice(data) -> FiberLattice:
    return FiberLattice(
        labels=tuple(data["labels"]),
        matrix=tuple(tuple(parse_rational(x) for x in row) for row in data["matrix"]),
        multiplicities=tuple(data["multiplicities"]),
        connected=bool(data.get("connected", True)),
    )


def parse_trace(data) -> DivisorTrace:
    return DivisorTrace(values=tuple(parse_rational(x) for x in data["values"]))


def parse_strata(data) -> SncStrata:
    levels = []
    for level in data["levels"]:
        levels.append(tuple(
            Stratum(
                ident=s["id"],
                indices=tuple(s["indices"]),
                facets=tuple(s.get("facets", ())),
            )
            for s in level
        ))
    return SncStrata(tuple(levels))


def parse_group(data) -> CoefficientGroup:
    return CoefficientGroup(rank=int(data.get("rank", 0)), torsion=tuple(data.get("torsion", ())))


def parse_curve_fiber(data) -> CurveFiber:
    return CurveFiber(
        genera=tuple(data["genera"]),
        edges=tuple(tuple(e) for e in data.get("edges", ())),
        nodal=bool(data.get("nodal", True)),
    )


def parse_obstruction(data) -> ObstructionScenario:
    group = parse_group(data["group"])
    points = tuple(
        SamplePoint(
            label=p["label"],
            fiber_type=_semi_abelian_type(int(p["torus_rank"]), int(p["abelian_dim"])),
            value=tuple(p["value"]),
        )
        for p in data["points"]
    )
    return ObstructionScenario(proper_base=bool(data["proper"]), group=group, points=points)


@dataclass(frozen=True)
class CochainData:
    group: CoefficientGroup
    edge_values: tuple[tuple[int, ...], ...]

    def bind(self, strata: SncStrata) -> Cochain:
        complex = build_dual_complex(strata)
        return Cochain(complex, self.group, 1, self.edge_values)


def parse_cochain(data) -> CochainData:
    return CochainData(
        group=parse_group(data["group"]),
        edge_values=tuple(tuple(v) for v in data["edge_values"]),
    )


@dataclass(frozen=True)
class Scenario:
    """One machine-readable worked example with its expected outputs."""

    name: str
    citation: str = ""
    lattice: FiberLattice | None = None
    trace: DivisorTrace | None = None
    strata: SncStrata | None = None
    h1_structure: int | None = None
    curve_fibers: dict = field(default_factory=dict)
    cochain: CochainData | None = None
    obstruction: ObstructionScenario | None = None
    expect: tuple = ()


def parse_scenario(data) -> Scenario:
    curve_fibers = {}
    if "curve_fiber" in data:
        curve_fibers["default"] = parse_curve_fiber(data["curve_fiber"])
    for label, fib in data.get("curve_fibers", {}).items():
        curve_fibers[label] = parse_curve_fiber(fib)
    return Scenario(
        name=data["name"],
        citation=data.get("citation", ""),
        lattice=parse_lattice(data["lattice"]) if "lattice" in data else None,
        trace=parse_trace(data["trace"]) if "trace" in data else None,
        strata=parse_strata(data["strata"]) if "strata" in data else None,
        h1_structure=data.get("h1_structure"),
        curve_fibers=curve_fibers,
        cochain=parse_cochain(data["cochain"]) if "cochain" in data else None,
        obstruction=parse_obstruction(data["obstruction"]) if "obstruction" in data else None,
        expect=tuple(data.get("expect", ())),
    )


def load_scenario_file(path) -> Scenario:
    with open(path) as fh:
        data = json.load(fh, parse_float=_reject_float)
    return parse_scenario(data)


def _reject_float(s):
    raise ValueError(f"floating point literal {s!r} is not allowed in scenario files")
