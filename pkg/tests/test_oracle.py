"""Depth, Betti, and localization oracles against hand-checked values."""

from __future__ import annotations

import pytest

from edgechains.chain import ChainSeed, generate_graph, normalize
from edgechains.errors import BudgetExceededError
from edgechains.graphs import Graph
from edgechains.oracle import (
    depth_ge2,
    depth_upper_witness,
    depth_via_links,
    hochster_betti,
    is_zero_depth_localization,
    localize,
    pd_via_bipartite,
)

C5 = Graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
P3 = Graph(range(1, 4), [(1, 2), (2, 3)])
P4 = Graph(range(1, 5), [(1, 2), (2, 3), (3, 4)])
K13 = Graph(range(1, 5), [(1, 2), (1, 3), (1, 4)])
FIVECYCLE = ChainSeed(10, ((2, 5), (2, 7), (3, 5), (3, 9), (7, 9)))


def test_localize_examples():
    loc = localize(P3, {2})
    assert loc.vertex_generators == {1, 3}
    assert loc.residual_edges == ()
    assert not loc.is_unit
    loc = localize(P3, set())
    assert loc.vertex_generators == frozenset()
    assert loc.residual_edges == ((1, 2), (2, 3))
    assert localize(Graph.complete(3), {1}).vertex_generators == {2, 3}
    # F containing an edge collapses the ideal to the unit ideal
    assert localize(P3, {1, 2}).is_unit
    with pytest.raises(ValueError):
        localize(P3, {9})


def test_zero_depth_localization():
    assert is_zero_depth_localization(P3, {2}) is True
    assert is_zero_depth_localization(P3, {1}) is False
    assert is_zero_depth_localization(Graph.complete(5), {3}) is True
    assert is_zero_depth_localization(P3, {1, 2}) is False


def test_depth_ge2():
    assert depth_ge2(C5) is True
    assert depth_ge2(K13) is False
    assert depth_ge2(Graph.complete(4)) is False
    with pytest.raises(ValueError):
        depth_ge2(Graph.empty(3))


def test_depth_via_links_examples():
    assert depth_via_links(P3) == 1
    assert depth_via_links(C5) == 2
    assert depth_via_links(P4) == 2
    with pytest.raises(ValueError):
        depth_via_links(Graph.empty(2))


def test_depth_via_links_prime_field_agrees():
    for g in (P3, C5, P4, K13):
        assert depth_via_links(g, field=2) == depth_via_links(g)


def test_hochster_single_edge_koszul():
    res = hochster_betti(Graph([1, 2], [(1, 2)]))
    assert (res.pd, res.depth, res.reg) == (1, 1, 1)
    assert dict(res.betti) == {(0, frozenset({1, 2})): 1}


def test_hochster_c5():
    res = hochster_betti(C5)
    assert res.reg == 2
    assert res.depth == depth_via_links(C5) == 2
    assert res.pd == 3


def test_hochster_respects_cap():
    with pytest.raises(BudgetExceededError):
        hochster_betti(Graph.complete(6), n_cap=5)


def test_hochster_betti_indexing_against_links():
    for g in (P3, P4, K13, C5):
        res = hochster_betti(g)
        assert res.depth == g.n - res.pd == depth_via_links(g)
        assert all(i >= 0 and mult > 0 for (i, _), mult in res.betti.items())


def test_pd_via_bipartite_examples():
    assert pd_via_bipartite(K13) == 3
    assert pd_via_bipartite(Graph([1, 2], [(1, 2)])) == 1
    assert pd_via_bipartite(Graph(range(1, 5), [(1, 2), (3, 4)])) == 2
    with pytest.raises(ValueError):
        pd_via_bipartite(C5)  # not weakly chordal
    with pytest.raises(ValueError):
        pd_via_bipartite(Graph.empty(2))


def test_depth_upper_witness_examples():
    seed = ChainSeed(6, ((1, 6), (2, 4), (3, 5)))
    f = depth_upper_witness(seed, 18)
    assert f == {9, 10}
    g = generate_graph(seed, 18)
    assert g.is_independent_set(f) and is_zero_depth_localization(g, f)

    k_seed = ChainSeed(2, ((1, 2),))
    assert depth_upper_witness(k_seed, 6) == {4}

    nfive, _ = normalize(FIVECYCLE)
    f = depth_upper_witness(nfive, 24)
    assert f == {9, 10}
    g = generate_graph(nfive, 24)
    assert g.is_independent_set(f) and is_zero_depth_localization(g, f)


def test_depth_upper_witness_validation():
    with pytest.raises(ValueError):
        depth_upper_witness(FIVECYCLE, 40)  # not normalized
    with pytest.raises(ValueError):
        depth_upper_witness(ChainSeed(2, ((1, 2),)), 5)  # below three widths
