import random

import pytest

from avoidance import solver
from avoidance.game import Status, StrategyFault, apply_move, new_game, red_blue_isomorphic
from avoidance.graphs import complete_graph, cycle_graph, path_graph, star_graph
from avoidance.strategies import (automorphism_strategy, kn_p2_defender,
                                  kn_symmetry_breaker, product_board,
                                  product_breaker)


def test_automorphism_strategy_mirror_reply():
    c4 = cycle_graph(4)
    strat = automorphism_strategy(c4, (2, 3, 0, 1))
    state = apply_move(new_game(c4), (0, 1))
    assert strat(state) == (2, 3)


def test_automorphism_strategy_rejects_bad_permutation():
    with pytest.raises(ValueError):
        automorphism_strategy(complete_graph(2), (1, 0))  # fixes its only edge
    with pytest.raises(ValueError):
        automorphism_strategy(cycle_graph(4), (1, 2, 3, 0))  # order 4, not 2


def test_automorphism_strategy_full_playout_symmetric():
    rng = random.Random(8)
    c6 = cycle_graph(6)
    strat = automorphism_strategy(c6, (3, 4, 5, 0, 1, 2))
    for _ in range(20):
        state = new_game(c6)
        while state.uncolored():
            if state.to_move() == "A":
                state = apply_move(state, rng.choice(state.uncolored()))
            else:
                reply = strat(state)  # always available: edges pair up
                state = apply_move(state, reply)
                assert red_blue_isomorphic(state)


def test_kn_p2_defender_first_reply():
    strat = kn_p2_defender(6)
    state = apply_move(new_game(complete_graph(6), path_graph(2)), (0, 1))
    assert strat(state) == (0, 2)  # smallest edge extending to a 2-path


def test_kn_p2_defender_hamiltonian_round():
    # drive A through a matching that uses up all six vertices by round 3
    strat = kn_p2_defender(6)
    state = new_game(complete_graph(6), path_graph(2))
    for a_move in ((0, 1), (3, 4), (2, 5)):
        state = apply_move(state, a_move)
        reply = strat(state)
        state = apply_move(state, reply)
    # round 3 = n/2: the last reply closed the Hamiltonian cycle
    union = state.red | state.blue
    deg = {}
    for u, v in union:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    assert len(union) == 6 and all(d == 2 for d in deg.values())
    assert red_blue_isomorphic(state)


def test_kn_p2_defender_fault_when_opponent_already_lost():
    strat = kn_p2_defender(6)
    state = new_game(complete_graph(6), None)  # no forbidden: red 2-path stays legal
    state = apply_move(state, (0, 1))
    state = apply_move(state, (3, 4))
    state = apply_move(state, (0, 2))  # red is no longer a matching
    with pytest.raises(StrategyFault):
        strat(state)


def test_kn_breaker_triangle_line():
    # B mirrors disjointly, then closes its path across the red pair:
    # the blue chord is the red chord, so A completes the red triangle
    strat = kn_symmetry_breaker(5)
    state = new_game(complete_graph(5))
    state = apply_move(state, strat(state))          # (0,1)
    state = apply_move(state, (2, 3))                # B disjoint
    mv = strat(state)
    assert mv == (0, 2)                              # adjacent to both pairs
    state = apply_move(state, mv)
    state = apply_move(state, (1, 3))                # blue path 2-3-1, chord {1,2}... ends {1,2}
    mv = strat(state)
    state = apply_move(state, mv)
    red = state.red
    assert (0, 1) in red and (0, 2) in red and (1, 2) in red  # red triangle
    # no blue reply can produce a triangle now
    for e in state.uncolored():
        nxt = apply_move(state, e)
        assert not red_blue_isomorphic(nxt)


def test_kn_breaker_exhaustive_small():
    for n in (4, 5):
        report = solver.verify_strategy(
            complete_graph(n), None, kn_symmetry_breaker(n), "A",
            solver.Exhaustive(), solver.SymmetryBrokenBy(n - 1))
        assert report.passed, report.violations[:3]


def test_product_breaker_star_race_line():
    # cartesian board: B's first reply not incident to v -> A races to K_{1,5}
    board = product_board("cartesianK3eP2")
    strat = product_breaker("cartesianK3eP2")
    state = new_game(board)
    state = apply_move(state, strat(state))
    assert state.history[0] == (1, 7)
    state = apply_move(state, (0, 3))  # far from v = 7
    seen = set()
    while len(state.red) < 5:
        mv = strat(state)
        assert 7 in mv
        seen.add(mv)
        state = apply_move(state, mv)
        if state.uncolored():
            state = apply_move(state, state.uncolored()[-1])
    assert len(seen) == 4  # four more spokes: red K_{1,5} at v


def test_product_breaker_triangle_punish():
    # B caps v with an edge other than {v, v2}: A takes {v, v2} then the chord
    board = product_board("cartesianK3eP2")
    strat = product_breaker("cartesianK3eP2")
    state = new_game(board)
    state = apply_move(state, strat(state))   # (1,7)
    state = apply_move(state, (6, 7))         # blue at v, not {4,7}
    mv = strat(state)
    assert mv == (4, 7)
    state = apply_move(state, mv)
    state = apply_move(state, (2, 5))  # blue elsewhere
    mv = strat(state)
    assert mv == (1, 4)                       # red triangle 1,4,7
    state = apply_move(state, mv)
    for e in state.uncolored():
        assert not red_blue_isomorphic(apply_move(state, e))


def test_product_breakers_random_probes():
    for which, bound in (("cartesianK3eP2", 8), ("lexiP2K3e", 11),
                         ("categoricalK3eK3e", 7)):
        board = product_board(which)
        report = solver.verify_strategy(
            board, None, product_breaker(which), "A",
            solver.RandomAdversary(count=300, seed=13), solver.SymmetryBrokenBy(bound))
        assert report.passed, (which, report.violations[:3])


def test_strategy_wrapper_rejects_colored_edge():
    from avoidance.game import Strategy
    c4 = cycle_graph(4)
    bad = Strategy(name="always-01", choose=lambda s: (0, 1))
    state = apply_move(new_game(c4), (0, 1))
    with pytest.raises(StrategyFault):
        bad(state)
