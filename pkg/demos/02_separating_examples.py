"""Symmetric strategies exist beyond the automorphism-based ones.

The triangle-with-a-pendant-edge has only two automorphisms and neither moves
every edge, yet the exhaustive solver proves the second player can always keep
the colors isomorphic.  Same for the whole size-5 catalog, odd paths, odd
cycles and odd stars.  The solver's Member certificate is a full reply book,
replayed here against every first-player branch.
"""

from avoidance import morphisms, solver
from avoidance.graphs import fig1_graph, triangle_plus_edge

g = triangle_plus_edge()
print("triangle+edge automorphisms:", morphisms.enumerate_automorphisms(g))
print("fixed-edge-free involution:", morphisms.find_fixed_edge_free_involution(g))

result = solver.decide_symm(g)
print("decide_symm:", result.outcome)
table = result.certificate["table"]
print(f"reply book has {len(table)} positions; replaying every branch:",
      solver.replay_member_table(g, table))

print("\nthe catalog of size-4 and size-5 separating graphs:")
for i in range(8):
    g = fig1_graph(i)
    auto = morphisms.find_fixed_edge_free_involution(g) is not None
    member = solver.decide_symm(g).outcome
    print(f"  fig1:{i}  order={g.order} size={g.size}  witness={auto}  {member}")
