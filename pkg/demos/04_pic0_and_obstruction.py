"""Semi-abelian classification of Pic^0 and an extension obstruction.

Pic^0 of a connected nodal curve is an extension of an abelian variety
(dimension: the sum of component genera) by a torus (rank: the first Betti
number of the dual graph).  It is proper exactly when the torus part is
absent.  Over a proper base curve, a section of a family of affine tori is
constant; two fibers where a candidate divisor class takes values that
differ by an element of infinite order therefore rule out a numerically
trivial extension of every nonzero multiple.
"""

from fiberext import (
    CoefficientGroup,
    CurveFiber,
    NotSemistable,
    ObstructionScenario,
    SamplePoint,
    classify_curve_fiber,
    extension_obstruction,
    numerical_triviality_on_fiber,
)

# --- a family of pointed genus-one curves: the five degenerate shapes --------

fibers = {
    "smooth elliptic":              CurveFiber(genera=(1,)),
    "nodal cubic":                  CurveFiber(genera=(0,), edges=((0, 0),)),
    "two lines meeting twice":      CurveFiber(genera=(0, 0), edges=((0, 1), (0, 1))),
    "elliptic plus a tail":         CurveFiber(genera=(1, 0), edges=((0, 1),)),
    "nodal cubic plus a tail":      CurveFiber(genera=(0, 0), edges=((0, 0), (0, 1))),
}

print("Pic^0 of the degenerate fibers:")
for name, fiber in fibers.items():
    kind = classify_curve_fiber(fiber)
    print(f"  {name:<28} (t, a) = ({kind.torus_rank}, {kind.abelian_dim})  "
          f"{kind.label}{', proper' if kind.proper else ''}")

# a cuspidal fiber falls outside the semi-abelian framework
try:
    classify_curve_fiber(CurveFiber(genera=(0,), nodal=False))
except NotSemistable as exc:
    print(f"\ncuspidal fiber rejected: {exc}")

# the difference of two sections is numerically trivial on a fiber iff its
# degree vanishes on every component
two_lines = fibers["two lines meeting twice"]
print("\ndifference of two sections on the two-line fiber:")
print(f"  degrees (1, -1): trivial = {numerical_triviality_on_fiber(two_lines, (1, -1))}")
print(f"  degrees (0, 0):  trivial = {numerical_triviality_on_fiber(two_lines, (0, 0))}")

# --- the obstruction over a proper base ---------------------------------------

torus = classify_curve_fiber(fibers["nodal cubic"])
Z = CoefficientGroup(rank=1)
scenario = ObstructionScenario(
    proper_base=True,
    group=Z,
    points=(
        SamplePoint("p", torus, (1,)),   # class evaluates to a non-torsion unit
        SamplePoint("q", torus, (0,)),   # class evaluates to the identity
    ),
)
result = extension_obstruction(scenario)
print("\nobstruction over a proper base with two torus fibers:")
print(f"  witnesses: {result.witnesses}")
print(f"  {result.note}")

scaled = ObstructionScenario(
    proper_base=True, group=Z,
    points=tuple(SamplePoint(p.label, p.fiber_type, Z.scale(5, p.value))
                 for p in scenario.points),
)
print(f"  scaling by 5 stays obstructed: "
      f"{type(extension_obstruction(scaled)).__name__ == 'ObstructionCertificate'}")
