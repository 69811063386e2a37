import itertools
import random

import pytest

from avoidance import morphisms, reductions, solver
from avoidance.graphs import (Graph, complete_graph, cycle_graph, graph_sum,
                              path_graph, star_graph, complement)


def test_reduce_r_counts():
    rc4 = reductions.reduce_r(cycle_graph(4))
    assert (rc4.order, rc4.size) == (20, 20)
    # n + m + 3 * non_isolated and 2m + 3 * non_isolated
    rk2 = reductions.reduce_r(complete_graph(2))
    assert (rk2.order, rk2.size) == (2 + 1 + 6, 2 * 1 + 6)
    edgeless = Graph.build(3)
    assert reductions.reduce_r(edgeless) == edgeless


def test_reduce_r_degrees():
    g = cycle_graph(4)
    rg = reductions.reduce_r(g)
    n, m = g.order, g.size
    for k in range(m):
        assert rg.degree(n + k) == 2  # subdivision vertices
    base = n + m
    for idx, v in enumerate(g.non_isolated()):
        c = base + 3 * idx
        assert rg.degree(c) == 3          # star centers
        assert rg.degree(c + 1) == 1 and rg.degree(c + 2) == 1
        assert rg.degree(v) == g.degree(v) + 1


def test_reduction_correctness_small():
    assert reductions.reduction_correctness_check(cycle_graph(4))
    assert morphisms.find_fixed_point_free_involution(cycle_graph(4)) is not None
    assert reductions.reduction_correctness_check(star_graph(2))
    assert morphisms.find_fixed_point_free_involution(star_graph(2)) is None


def test_lift_is_fixed_edge_free():
    for g in (cycle_graph(4), complete_graph(2), cycle_graph(6),
              graph_sum(complete_graph(2), complete_graph(2))):
        phi = morphisms.find_fixed_point_free_involution(g)
        assert phi is not None
        psi = reductions.lift_fixed_point_free(g, phi)
        rep = morphisms.classify_involution(reductions.reduce_r(g), psi)
        assert rep.involutory and not rep.fixed_edges


def test_lift_rejects_maps_with_fixed_points():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        reductions.lift_fixed_point_free(c4, (0, 3, 2, 1))  # fixes 0 and 2


def test_preprocess_examples():
    # connected odd size: untouched
    p, log = reductions.preprocess(complete_graph(3))
    assert log == [] and p == complete_graph(3)
    # 2K2 is disconnected with even size: complement to C4, then two apexes
    g = Graph.build(4, [(0, 1), (2, 3)])
    p, log = reductions.preprocess(g)
    assert log == ["complement", "apex", "apex"]
    assert p.is_connected() and p.size % 2 == 1
    comp = complement(g)
    assert morphisms.find_isomorphism(comp, cycle_graph(4)) is not None


def test_gi_to_par_beta_is_valid():
    res = reductions.gi_to_par(complete_graph(3), complete_graph(3))
    assert res.g0_log == () and res.g1_log == ()
    rep = morphisms.classify_involution(res.instance.h, res.instance.beta)
    assert rep.involutory and not rep.fixed_vertices and not rep.fixed_edges


def test_par_via_iso_and_recovery():
    res = reductions.gi_to_par(complete_graph(3), complete_graph(3))
    alpha = reductions.par_via_iso(res.instance)
    rep = morphisms.classify_involution(res.instance.g, alpha)
    assert rep.involutory and not rep.fixed_edges
    mapping = reductions.recover_isomorphism(alpha, res)
    assert sorted(mapping) == [0, 1, 2]

    res = reductions.gi_to_par(cycle_graph(5), cycle_graph(5))
    alpha = reductions.par_via_iso(res.instance)
    mapping = reductions.recover_isomorphism(alpha, res)
    assert cycle_graph(5).relabel(mapping) == cycle_graph(5)


def test_par_instance_requires_fixed_edge_free_beta():
    big = graph_sum(complete_graph(2), complete_graph(2))
    with pytest.raises(ValueError):
        reductions.ParInstance(big, big, (1, 0, 3, 2))  # swaps inside each K2


def test_recover_rejects_component_fixing_alpha():
    res = reductions.gi_to_par(complete_graph(2), complete_graph(2))
    with pytest.raises(reductions.InvalidCertificateError):
        reductions.recover_isomorphism(tuple(range(res.instance.g.order)), res)


def test_round_trip_random_relabelings():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(2, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g0 = Graph.build(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        g1 = g0.relabel(perm)
        res = reductions.gi_to_par(g0, g1)
        alpha = reductions.par_via_iso(res.instance)
        mapping = reductions.recover_isomorphism(alpha, res)
        assert g0.relabel(mapping) == g1


def test_preprocess_preserves_and_reflects_profiles():
    """Within a matching (order, size, connectivity) profile the transform
    preserves and reflects isomorphism; differing profiles are already a
    non-isomorphism proof."""
    census = list(solver.enumerate_graphs(4))
    processed = [reductions.preprocess(g)[0] for g in census]
    for (g1, p1), (g2, p2) in itertools.combinations(zip(census, processed), 2):
        profile1 = (g1.order, g1.size, g1.is_connected())
        profile2 = (g2.order, g2.size, g2.is_connected())
        if profile1 != profile2:
            continue
        iso_before = morphisms.find_isomorphism(g1, g2) is not None
        iso_after = morphisms.find_isomorphism(p1, p2) is not None
        assert iso_before == iso_after, (g1, g2)
