"""Dual complexes of simple normal crossing varieties and their homology.

Each component of an snc variety gives a vertex; each connected component
of an (r+1)-fold intersection gives an r-simplex whose facets are the
strata obtained by dropping one component.  The result is an ordered
Delta-complex: two components may meet along several double curves, giving
parallel edges.  The first Betti number of this complex is the torus rank
of Pic^0 of the variety.
"""

from fiberext import boundary_matrix, build_dual_complex, homology, torus_rank
from fiberext.dual_complex import simplex_strata, strata_from_multigraph

# --- two components meeting along two disjoint double curves ---------------

strata = strata_from_multigraph(2, [(0, 1), (0, 1)])
cx = build_dual_complex(strata)
print("two components, two double curves (a combinatorial circle):")
print(f"  simplices per dimension: {list(cx.counts)}")
profile = homology(cx)
print(f"  betti numbers: {list(profile.betti)}   torsion: {list(profile.torsion)}")
print(f"  torus rank of Pic^0: {torus_rank(cx)}")
print(f"  boundary matrix B_1 = {boundary_matrix(cx, 1)}")

# --- four components in general position ------------------------------------

full = build_dual_complex(simplex_strata((0, 1, 2, 3)))
print("\nfour components in general position (solid tetrahedron):")
print(f"  simplices per dimension: {list(full.counts)}")
print(f"  betti numbers: {list(homology(full).betti)}  (contractible)")

hollow = build_dual_complex(simplex_strata((0, 1, 2, 3), full=False))
print("\nsame, with the quadruple point removed (hollow tetrahedron):")
print(f"  betti numbers: {list(homology(hollow).betti)}  (a 2-sphere)")

# --- theta graph: two vertices joined by three edges ------------------------

theta = build_dual_complex(strata_from_multigraph(2, [(0, 1)] * 3))
print("\ntwo components meeting along three double curves (theta graph):")
print(f"  betti numbers: {list(homology(theta).betti)}")
print(f"  torus rank of Pic^0: {torus_rank(theta)}")

# --- closed subcomplexes -----------------------------------------------------

sub, maps = full.closure(3, 0)
print("\nclosure of the top stratum of the solid tetrahedron:")
print(f"  simplices per dimension: {list(sub.counts)}")
print(f"  index maps back to the ambient complex: {maps}")
