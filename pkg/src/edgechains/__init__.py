"""Exact asymptotics for shift-invariant chains of edge ideals.

A chain of edge ideals, one per polynomial ring size, closed under the
monoid of strictly increasing index maps, is determined by a finite seed.
This package models such seeds, evaluates the closed-form eventual depth,
regularity, and independence-complex homology of the chain, and checks the
formulas against brute-force commutative-algebra oracles at small scale.
"""

from .asymptotics import (
    AsymptoticReport,
    ScanResult,
    asymptotic_depth,
    asymptotic_homology,
    asymptotic_regularity,
    deletion_chain,
    gamma_graph,
    stabilization_scan,
)
from .chain import (
    ChainInvariants,
    ChainSeed,
    ShiftRecord,
    boundary_subgraph,
    chain_invariants,
    format_chain_spec,
    generate_graph,
    is_edge,
    load_chain_spec,
    minimal_seed_reduction,
    normalize,
    orbit_edges_bruteforce,
    parse_chain_spec,
    sigma_image,
    verify_decomposition,
)
from .complexes import (
    HomologyProfile,
    SimplicialComplex,
    degree_complex,
    f_vector_and_euler,
    field_discrepancies,
    independence_complex,
    link,
    reduced_homology,
)
from .errors import BudgetExceededError, ChainSpecError
from .graphs import BipartiteFamily, Graph, max_bipartite_family_score
from .oracle import (
    BettiTable,
    HochsterResult,
    LocalizedIdeal,
    depth_ge2,
    depth_upper_witness,
    depth_via_links,
    hochster_betti,
    is_zero_depth_localization,
    localize,
    pd_via_bipartite,
)
from .suites import SuiteOptions, SuiteResult, run_all, run_suite

__version__ = "0.1.0"
