"""Build named graph families and find the involutions that power the easy
symmetric strategies.

A fixed-edge-free involution pairs up the board's edges; the second player
simply answers every move across the pairing and the colors stay isomorphic
forever.
"""

from avoidance import graph6, morphisms
from avoidance.graphs import (cube_graph, cycle_graph, grid_graph,
                              complete_minus_matching, platonic_graph)

for name, g in [
    ("C8", cycle_graph(8)),
    ("Q3", cube_graph(3)),
    ("grid 2x4", grid_graph([2, 4])),
    ("K6 minus a perfect matching", complete_minus_matching(6)),
    ("dodecahedron", platonic_graph("dodecahedron")),
    ("icosahedron", platonic_graph("icosahedron")),
]:
    w = morphisms.find_fixed_edge_free_involution(g)
    rep = morphisms.classify_involution(g, w)
    print(f"{name:28s} {graph6.encode(g):24s} witness={w}")
    print(f"{'':28s} involutory={rep.involutory} fixed_vertices={rep.fixed_vertices}"
          f" fixed_edges={rep.fixed_edges}")

# connected graphs in which every vertex has a unique farthest partner carry
# a ready-made witness: the antipode map
for name, g in [("C6", cycle_graph(6)), ("Q3", cube_graph(3))]:
    print(f"antipodal map on {name}: {morphisms.antipodal_involution(g)}")
