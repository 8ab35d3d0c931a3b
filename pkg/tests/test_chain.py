"""Seed parsing, invariants, normalization, membership, and orbit generation."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgechains.chain import (
    ChainSeed,
    chain_invariants,
    format_chain_spec,
    generate_graph,
    is_edge,
    minimal_seed_reduction,
    normalize,
    orbit_edges_bruteforce,
    parse_chain_spec,
    sigma_image,
    verify_decomposition,
)
from edgechains.errors import ChainSpecError
from edgechains.graphs import Graph

FIVECYCLE = ChainSeed(10, ((2, 5), (2, 7), (3, 5), (3, 9), (7, 9)))


def test_parse_fivecycle_document():
    text = "r=10\n2 5\n2 7\n3 5\n3 9\n7 9\n"
    assert parse_chain_spec(text) == FIVECYCLE


def test_parse_smallest_seed_and_duplicates():
    assert parse_chain_spec("r=2\n1 2") == ChainSeed(2, ((1, 2),))
    assert parse_chain_spec("r=3\n1 3\n1 3") == ChainSeed(3, ((1, 3),))


def test_parse_comments_and_spacing():
    text = "# heading\nr = 10  # trailing\n2 5\n# mid\n2 7\n3 5\n3 9\n7 9\n"
    assert parse_chain_spec(text) == FIVECYCLE


@pytest.mark.parametrize(
    "text",
    [
        "r=3\n3 1",  # i >= j
        "r=3\n1 4",  # j > r
        "r=3",  # empty edge list
        "r=1\n1 1",  # r < 2
        "r=3\n1 2 3",  # malformed line
        "x=3\n1 2",  # missing header
        "",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ChainSpecError):
        parse_chain_spec(text)


def test_invariants_fivecycle():
    inv = chain_invariants(FIVECYCLE)
    assert (inv.i1, inv.j_q, inv.p, inv.b, inv.B, inv.r_tilde, inv.spi) == (
        2, 7, 9, 3, 7, 8, 2,
    )


def test_invariants_derived_and_trivial():
    inv = chain_invariants(ChainSeed(6, ((1, 6), (2, 4), (3, 5))))
    assert (inv.i1, inv.j_q, inv.p, inv.b, inv.B, inv.r_tilde, inv.spi) == (
        1, 6, 6, 1, 1, 6, 2,
    )
    inv = chain_invariants(ChainSeed(2, ((1, 2),)))
    assert (inv.i1, inv.j_q, inv.p, inv.b, inv.B, inv.r_tilde, inv.spi) == (
        1, 2, 2, 1, 1, 2, 1,
    )


def test_normalize_fivecycle():
    nseed, shift = normalize(FIVECYCLE)
    assert nseed == ChainSeed(8, ((1, 4), (1, 6), (2, 4), (2, 8), (6, 8)))
    assert (shift.variable_shift, shift.index_shift) == (1, 2)


def test_normalize_idempotent_and_shifted():
    seed = ChainSeed(6, ((1, 6), (2, 4), (3, 5)))
    assert normalize(seed) == (seed, normalize(seed)[1])
    assert normalize(seed)[1].variable_shift == 0
    nseed, shift = normalize(ChainSeed(5, ((2, 4),)))
    assert nseed == ChainSeed(3, ((1, 3),))
    assert (shift.variable_shift, shift.index_shift) == (1, 2)


def test_is_edge_examples():
    assert is_edge(FIVECYCLE, 12, 4, 11) is True
    assert is_edge(FIVECYCLE, 12, 4, 5) is False
    for i, j in FIVECYCLE.edges:
        assert is_edge(FIVECYCLE, FIVECYCLE.r, i, j)


def test_is_edge_validates_input():
    with pytest.raises(ValueError):
        is_edge(FIVECYCLE, 9, 1, 2)
    with pytest.raises(ValueError):
        is_edge(FIVECYCLE, 12, 5, 5)
    with pytest.raises(ValueError):
        is_edge(FIVECYCLE, 12, 0, 3)


def test_generate_graph_examples():
    assert generate_graph(ChainSeed(2, ((1, 2),)), 6) == Graph.complete(6)
    facets = generate_graph(ChainSeed(4, ((1, 2), (3, 4))), 5).maximal_independent_sets()
    assert facets == [
        frozenset({1, 4}), frozenset({1, 5}), frozenset({2, 4}),
        frozenset({2, 5}), frozenset({3}),
    ]
    assert set(generate_graph(FIVECYCLE, 10).edges()) == set(FIVECYCLE.edges)


def test_slack_test_matches_orbit_enumeration():
    for seed in (
        FIVECYCLE,
        ChainSeed(4, ((1, 2), (3, 4))),
        ChainSeed(3, ((1, 3), (2, 3))),
    ):
        for n in range(seed.r, seed.r + 3):
            assert orbit_edges_bruteforce(seed, n) == set(generate_graph(seed, n).edges())


def test_sigma_image_examples():
    assert sigma_image([(1, 2)], 1) == ((1, 3),)
    assert sigma_image([(1, 2)], 0) == ((2, 3),)
    assert sigma_image([(2, 5), (3, 9)], 5) == ((2, 5), (3, 10))


def test_verify_decomposition_examples():
    seed = ChainSeed(2, ((1, 2),))
    assert verify_decomposition(seed, 2, range(3)) is True
    assert verify_decomposition(seed, 2, {0}) is False
    assert verify_decomposition(seed, 4, {1, 3, 4}) is True
    with pytest.raises(ValueError):
        verify_decomposition(seed, 2, {3})


def test_minimal_seed_reduction_examples():
    triangle = ChainSeed(3, ((1, 2), (1, 3), (2, 3)))
    assert minimal_seed_reduction(triangle) == ChainSeed(2, ((1, 2),))
    assert minimal_seed_reduction(ChainSeed(2, ((1, 2),))) == ChainSeed(2, ((1, 2),))
    assert minimal_seed_reduction(FIVECYCLE) == FIVECYCLE


def test_minimal_seed_reduction_regenerates_members():
    # soundness on the enumerated small corpus: reduced seed presents the
    # same member graphs
    from edgechains.suites import all_seeds

    for seed in all_seeds(3):
        reduced = minimal_seed_reduction(seed)
        for n in range(seed.r, seed.r + 3):
            assert generate_graph(reduced, n) == generate_graph(seed, n)


edge_lists = st.lists(
    st.tuples(st.integers(1, 7), st.integers(1, 8)).map(lambda t: (min(t), max(t) + 1)),
    min_size=1,
    max_size=8,
)


@given(edge_lists, st.randoms())
@settings(max_examples=60, deadline=None)
def test_seed_canonicalization_is_order_insensitive(edges, rng):
    edges = [(i, j) for i, j in edges if j <= 9]
    if not edges:
        edges = [(1, 2)]
    seed = ChainSeed(9, tuple(edges))
    shuffled = list(edges) + list(edges)
    rng.shuffle(shuffled)
    assert ChainSeed(9, tuple(shuffled)) == seed


@given(edge_lists)
@settings(max_examples=60, deadline=None)
def test_chain_spec_roundtrip(edges):
    edges = [(i, j) for i, j in edges if j <= 9]
    if not edges:
        edges = [(1, 2)]
    seed = ChainSeed(9, tuple(edges))
    assert parse_chain_spec(format_chain_spec(seed, comments=["round trip"])) == seed


def test_normalize_preserves_gap_quantities():
    for seed in (FIVECYCLE, ChainSeed(5, ((2, 4),)), ChainSeed(6, ((2, 3), (3, 6)))):
        inv = chain_invariants(seed)
        ninv = chain_invariants(normalize(seed)[0])
        assert ninv.spi == inv.spi
        assert ninv.j_q - ninv.i1 == inv.j_q - inv.i1
        assert ninv.p - ninv.i1 == inv.p - inv.i1
