"""Suite registry plumbing; focused runs on single chains.

Full-corpus executions live in the acceptance module, where the criterion
budgets apply; here each suite is exercised on a narrow input to keep the
unit run fast.
"""

from __future__ import annotations

import pytest

from edgechains.chain import ChainSeed
from edgechains.suites import (
    REGISTRY,
    SuiteOptions,
    all_seeds,
    normalized_seeds,
    random_graph_corpus,
    run_suite,
)

DEPTH_BUMP = ChainSeed(6, ((1, 6), (2, 4), (3, 5)))
FIVECYCLE = ChainSeed(10, ((2, 5), (2, 7), (3, 5), (3, 9), (7, 9)))


def test_corpus_sizes():
    assert len(all_seeds(2)) == 1
    assert len(all_seeds(3)) == 7
    assert len(all_seeds(4)) == 63
    assert len(normalized_seeds(3)) == 5
    assert len(normalized_seeds(4)) == 50


def test_registry_names_are_descriptive():
    assert "depth-formula" in REGISTRY and "oracle-cross" in REGISTRY
    assert len(REGISTRY) == 20


@pytest.mark.parametrize(
    "name",
    [
        "triangle-oracle",
        "short-moves",
        "no-long-holes",
        "normalization",
        "neighborhood-deletion",
        "mis-size",
        "deletion-connectivity",
        "depth-bounds",
        "depth-formula",
        "deletion-homology",
        "deletion-chain",
        "boundary-h1",
    ],
)
def test_suites_on_single_chain(name):
    res = run_suite(name, SuiteOptions(seed=DEPTH_BUMP))
    assert res.ok, res.violations[:3]
    assert res.checks > 0


def test_suite_on_fivecycle_short_moves_large_member():
    res = run_suite("short-moves", SuiteOptions(seed=FIVECYCLE, n=30))
    assert res.ok and res.checks > 0


def test_interval_disjointness_counts_matchings():
    # dense members rarely carry induced two-matchings: the bump chain has
    # none at three widths, the two-block chain has exactly one
    res = run_suite("interval-disjointness", SuiteOptions(seed=DEPTH_BUMP))
    assert res.ok and res.checks == 0
    res = run_suite(
        "interval-disjointness", SuiteOptions(seed=ChainSeed(4, ((1, 2), (3, 4))))
    )
    assert res.ok and res.checks >= 1


def test_h_suites_on_single_chains():
    res = run_suite("h1-stable", SuiteOptions(seed=FIVECYCLE))
    assert res.ok and res.checks == 4
    res = run_suite("h2-vanishing", SuiteOptions(seed=ChainSeed(3, ((1, 3),))))
    assert res.ok and res.checks == 3
    res = run_suite("isolated-middle", SuiteOptions(seed=ChainSeed(2, ((1, 2),))))
    assert res.ok and res.checks > 0


def test_reg_suites_on_single_chain():
    res = run_suite("reg-stability", SuiteOptions(seed=ChainSeed(2, ((1, 2),))))
    assert res.ok and res.checks > 0
    res = run_suite("reg-table", SuiteOptions(seed=ChainSeed(3, ((1, 3),))))
    assert res.ok and res.checks == 1


def test_oracle_cross_on_single_chain():
    res = run_suite("oracle-cross", SuiteOptions(seed=DEPTH_BUMP, n=8))
    assert res.ok and res.checks > 0


def test_random_corpus_is_deterministic():
    a = random_graph_corpus(20)
    b = random_graph_corpus(20)
    assert [tag for tag, _ in a] == [tag for tag, _ in b]
    assert all(ga == gb for (_, ga), (_, gb) in zip(a, b))


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_suite_n_override_validated():
    with pytest.raises(ValueError):
        run_suite("short-moves", SuiteOptions(seed=DEPTH_BUMP, n=5))
