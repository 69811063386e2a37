"""The complexity constructions.

reduce_r turns the NP-complete search for a fixed-point-free involution into
the search for a fixed-edge-free one: subdivide every edge, then hang a small
star off every original vertex so nothing can stay put.  gi_to_par embeds
graph isomorphism into the problem of reconstructing such an involution after
an adversary permuted the vertices.
"""

import random

from avoidance import graph6, morphisms, reductions
from avoidance.graphs import Graph, cycle_graph

c4 = cycle_graph(4)
r = reductions.reduce_r(c4)
print(f"R(C4): {r.order} vertices, {r.size} edges, graph6 {graph6.encode(r)}")

phi = morphisms.find_fixed_point_free_involution(c4)
psi = reductions.lift_fixed_point_free(c4, phi)
rep = morphisms.classify_involution(r, psi)
print(f"lift of {phi}: involutory={rep.involutory} fixed_edges={rep.fixed_edges}")

# a permuted-automorphism instance from two relabelings of the same graph
rng = random.Random(0)
g0 = Graph.build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)])
perm = list(range(6))
rng.shuffle(perm)
g1 = g0.relabel(perm)
res = reductions.gi_to_par(g0, g1)
print("instance:", res.to_json_obj())
alpha = reductions.par_via_iso(res.instance)
mapping = reductions.recover_isomorphism(alpha, res)
print(f"recovered isomorphism {mapping}; matches the hidden relabeling:"
      f" {g0.relabel(mapping) == g1}")
