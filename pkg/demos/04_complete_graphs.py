"""Complete graphs refuse symmetric strategies, yet the (K_n, P_2) game is a
clean second-player win with a strategy that is symmetric in the weaker,
in-game sense.

The breaker forces red and blue apart by round n-1 whatever the defender
does; the matching defender keeps the union of colors a path (closing a
Hamiltonian cycle in the one exceptional round) so the first player is the
one who must eventually touch a red edge.
"""

from avoidance import solver
from avoidance.game import Status, apply_move, new_game, red_blue_isomorphic
from avoidance.graphs import complete_graph, path_graph
from avoidance.strategies import kn_p2_defender, kn_symmetry_breaker

for n in (4, 5):
    result = solver.decide_symm(complete_graph(n))
    print(f"K{n}: {result.outcome}, breaking line {result.certificate['moves']}")

report = solver.verify_strategy(
    complete_graph(6), None, kn_symmetry_breaker(6), "A",
    solver.Exhaustive(), solver.SymmetryBrokenBy(5))
print(f"K6 breaker, every defender reply explored: passed={report.passed}"
      f" over {report.branches} branches")

# a full (K6, P2) game against the matching defender
state = new_game(complete_graph(6), path_graph(2))
defender = kn_p2_defender(6)
a_moves = iter([(0, 1), (3, 4), (2, 5), (0, 3)])
while state.status == Status.IN_PROGRESS:
    if state.to_move() == "A":
        state = apply_move(state, next(a_moves))
    else:
        state = apply_move(state, defender(state))
        print(f"round {state.round_number()}: red={sorted(state.red)} "
              f"blue={sorted(state.blue)} isomorphic={red_blue_isomorphic(state)}")
print("result:", state.status, "- the first player had to create the red path")
