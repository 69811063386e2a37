"""Witnesses compose across graph products, but symmetric strategies as a
whole do not survive them.

The coordinatewise map (u,v) -> (phi1(u), phi2(v)) stays a fixed-edge-free
involution on the cartesian, lexicographic and categorical products, and the
categorical product even absorbs an arbitrary second factor.  Yet products of
plain symmetric-strategy boards can fail: the three counterexample boards are
refuted here by exact solve, plus a scripted breaker playout.
"""

import random

from avoidance import morphisms, solver
from avoidance.game import Status, apply_move, new_game, red_blue_isomorphic
from avoidance.graphs import cartesian, categorical, cycle_graph, complete_graph
from avoidance.strategies import product_board, product_breaker

c4, c6 = cycle_graph(4), cycle_graph(6)
w4 = morphisms.find_fixed_edge_free_involution(c4)
w6 = morphisms.find_fixed_edge_free_involution(c6)
prod = cartesian(c4, c6)
psi = tuple(w4[u] * 6 + w6[v] for u in range(4) for v in range(6))
rep = morphisms.classify_involution(prod, psi)
print("C4 x C6 composed witness: involutory =", rep.involutory,
      "fixed edges =", len(rep.fixed_edges))

k5 = complete_graph(5)  # not even a symmetric-strategy board
ideal = categorical(c4, k5)
psi = tuple(w4[u] * 5 + v for u in range(4) for v in range(5))
rep = morphisms.classify_involution(ideal, psi)
print("C4 . K5 one-sided witness: involutory =", rep.involutory,
      "fixed edges =", len(rep.fixed_edges))

for which in ("cartesianK3eP2", "lexiP2K3e", "categoricalK3eK3e"):
    board = product_board(which)
    line = f"{which}: {board.order} vertices / {board.size} edges"
    if board.size <= 20:
        line += f", decide_symm = {solver.decide_symm(board).outcome}"
    print(line)

# watch the cartesian breaker beat a random defender
rng = random.Random(1)
board = product_board("cartesianK3eP2")
breaker = product_breaker("cartesianK3eP2")
state = new_game(board)
while state.status == Status.IN_PROGRESS and state.uncolored():
    state = apply_move(state, breaker(state) if state.to_move() == "A"
                       else rng.choice(state.uncolored()))
    if state.to_move() == "A" and not red_blue_isomorphic(state):
        print(f"symmetry broken in round {state.round_number()}:"
              f" red={sorted(state.red)} blue={sorted(state.blue)}")
        break
