"""Bundled scenario corpus: worked examples as golden regression tests.

Every scenario file records its inputs together with expected outputs and
a provenance note (paper-reported value, trivial identity, or derived by a
stated independent oracle).  ``run_scenario`` replays the referenced
operations and compares exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import cochain as cochain_mod
from . import lattice as lattice_mod
from .dual_complex import build_dual_complex, homology, torus_rank
from .pic0 import (
    NotSemistable,
    classify_curve_fiber,
    classify_snc_fiber,
    extension_obstruction,
    numerical_triviality_on_fiber,
    ObstructionCertificate,
    SncFiber,
)
from .scenario import Scenario, load_scenario_file, parse_rational


def _scenario_dir():
    return resources.files(__package__) / "scenarios"


def scenario_names() -> list[str]:
    return sorted(p.name[: -len(".json")] for p in _scenario_dir().iterdir()
                  if p.name.endswith(".json"))


def load_scenario(name: str) -> Scenario:
    path = _scenario_dir() / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"unknown scenario {name!r}")
    return load_scenario_file(path)


def list_scenarios() -> list[tuple[str, str]]:
    """Catalog of bundled scenarios with their citation tags."""
    return [(name, load_scenario(name).citation) for name in scenario_names()]


@dataclass(frozen=True)
class CheckResult:
    op: str
    passed: bool
    expected: str
    actual: str
    provenance: str = ""


@dataclass(frozen=True)
class ScenarioReport:
    name: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def run_scenario(name: str) -> ScenarioReport:
    scenario = load_scenario(name)
    checks = tuple(_run_check(scenario, entry) for entry in scenario.expect)
    return ScenarioReport(name=name, checks=checks)


def run_all() -> list[ScenarioReport]:
    return [run_scenario(name) for name in scenario_names()]


def _run_check(sc: Scenario, entry) -> CheckResult:
    op = entry["op"]
    provenance = entry.get("provenance", "")
    handler = _HANDLERS.get(op)
    if handler is None:
        return CheckResult(op, False, "known operation", f"unknown op {op!r}", provenance)
    try:
        passed, expected, actual = handler(sc, entry)
    except Exception as exc:  # a crash is a failed check, not a failed run
        return CheckResult(op, False, "no exception", f"{type(exc).__name__}: {exc}", provenance)
    return CheckResult(op, passed, expected, actual, provenance)


def _check_validate(sc, entry):
    report = lattice_mod.validate_lattice(sc.lattice)
    want = bool(entry["valid"])
    return report.valid == want, f"valid={want}", f"valid={report.valid}, failed={report.failed()}"


def _match_extension(entry, result):
    if entry.get("obstructed"):
        ok = isinstance(result, lattice_mod.Obstructed)
        return ok, "obstructed", type(result).__name__
    if isinstance(result, lattice_mod.Obstructed):
        return False, "an extension", f"obstructed: {result.reason}"
    ok = True
    wants = []
    if "coefficients" in entry:
        want = tuple(parse_rational(x) for x in entry["coefficients"])
        ok &= result.coefficients == want
        wants.append(f"coefficients={[str(x) for x in want]}")
    if "denominator" in entry:
        ok &= result.denominator == int(entry["denominator"])
        wants.append(f"denominator={entry['denominator']}")
    if "denominator_divides" in entry:
        ok &= int(entry["denominator_divides"]) % result.denominator == 0
        wants.append(f"denominator | {entry['denominator_divides']}")
    if "achieved" in entry:
        want = tuple(parse_rational(x) for x in entry["achieved"])
        ok &= result.achieved_trace == want
        wants.append(f"achieved={[str(x) for x in want]}")
    actual = (f"coefficients={[str(x) for x in result.coefficients]}, "
              f"denominator={result.denominator}")
    return ok, "; ".join(wants), actual


def _check_extend_trivial(sc, entry):
    return _match_extension(entry, lattice_mod.extend_trivial(sc.lattice, sc.trace))


def _check_extend_nef(sc, entry):
    targets = None
    if "targets" in entry:
        targets = [parse_rational(x) for x in entry["targets"]]
    return _match_extension(entry, lattice_mod.extend_nef(sc.lattice, sc.trace, targets))


def _check_denominator_bound(sc, entry):
    got = lattice_mod.denominator_bound(sc.lattice)
    want = int(entry["value"])
    return got == want, str(want), str(got)


def _check_component_group(sc, entry):
    got = lattice_mod.component_group(sc.lattice).invariant_factors
    want = tuple(entry["invariant_factors"])
    return got == want, str(list(want)), str(list(got))


def _check_homology(sc, entry):
    profile = homology(build_dual_complex(sc.strata))
    want_betti = tuple(entry["betti"])
    want_torsion = tuple(tuple(t) for t in entry.get("torsion", [[]] * len(want_betti)))
    ok = profile.betti == want_betti and profile.torsion == want_torsion
    return ok, f"betti={list(want_betti)}", f"betti={list(profile.betti)}, torsion={profile.torsion}"


def _check_torus_rank(sc, entry):
    got = torus_rank(build_dual_complex(sc.strata))
    want = int(entry["value"])
    return got == want, str(want), str(got)


def _classification_matches(entry, kind):
    ok = True
    wants = []
    if "torus_rank" in entry:
        ok &= kind.torus_rank == int(entry["torus_rank"])
        wants.append(f"t={entry['torus_rank']}")
    if "abelian_dim" in entry:
        want = entry["abelian_dim"]
        ok &= kind.abelian_dim == (None if want is None else int(want))
        wants.append(f"a={want}")
    if "label" in entry:
        ok &= kind.label == entry["label"]
        wants.append(f"label={entry['label']}")
    actual = f"t={kind.torus_rank}, a={kind.abelian_dim}, label={kind.label}, proper={kind.proper}"
    return ok, "; ".join(wants), actual


def _check_classify_curve(sc, entry):
    fiber = sc.curve_fibers[entry.get("fiber", "default")]
    if "error" in entry:
        try:
            got = classify_curve_fiber(fiber)
        except NotSemistable:
            return entry["error"] == "NotSemistable", entry["error"], "NotSemistable"
        return False, entry["error"], f"classified {got.label}"
    return _classification_matches(entry, classify_curve_fiber(fiber))


def _check_classify_snc(sc, entry):
    fiber = SncFiber(strata=sc.strata, h1_structure=sc.h1_structure)
    return _classification_matches(entry, classify_snc_fiber(fiber))


def _check_numerical_triviality(sc, entry):
    fiber = sc.curve_fibers[entry.get("fiber", "default")]
    got = numerical_triviality_on_fiber(fiber, entry["degrees"])
    want = bool(entry["trivial"])
    return got == want, f"trivial={want}", f"trivial={got}"


def _bound_cochain(sc):
    return sc.cochain.bind(sc.strata)


def _check_is_closed(sc, entry):
    result = cochain_mod.is_closed(_bound_cochain(sc))
    ok = result.closed == bool(entry["closed"])
    if "witness" in entry:
        ok &= result.witness == entry["witness"]
    return ok, f"closed={entry['closed']}", f"closed={result.closed}, witness={result.witness}"


def _check_is_exact(sc, entry):
    result = cochain_mod.is_exact(_bound_cochain(sc))
    got = not isinstance(result, cochain_mod.NotExact)
    want = bool(entry["exact"])
    return got == want, f"exact={want}", f"exact={got}"


def _check_h1_class(sc, entry):
    cls = cochain_mod.h1_class(_bound_cochain(sc))
    want = bool(entry["trivial"])
    return cls.is_trivial == want, f"trivial={want}", (
        f"trivial={cls.is_trivial}, H1={cls.group_profile}"
    )


def _check_obstruction(sc, entry):
    result = extension_obstruction(sc.obstruction)
    got = isinstance(result, ObstructionCertificate)
    want = bool(entry["obstructed"])
    ok = got == want
    if ok and got and "witnesses" in entry:
        ok = set(result.witnesses) == set(entry["witnesses"])
    actual = (f"obstructed, witnesses={result.witnesses}" if got
              else f"unobstructed: {result.reason}")
    return ok, f"obstructed={want}", actual


_HANDLERS = {
    "validate_lattice": _check_validate,
    "extend_trivial": _check_extend_trivial,
    "extend_nef": _check_extend_nef,
    "denominator_bound": _check_denominator_bound,
    "component_group": _check_component_group,
    "homology": _check_homology,
    "torus_rank": _check_torus_rank,
    "classify_curve_fiber": _check_classify_curve,
    "classify_snc_fiber": _check_classify_snc,
    "numerical_triviality": _check_numerical_triviality,
    "is_closed": _check_is_closed,
    "is_exact": _check_is_exact,
    "h1_class": _check_h1_class,
    "extension_obstruction": _check_obstruction,
}
