"""Named property suites behind the CLI ``verify`` subcommand.

Each suite sweeps a deterministic corpus of small seeds (every seed of
width up to 4 or 5, normalized where the property needs it) at the
thresholds its statement prescribes, and reports a check count plus any
violations.  A single seed, member index, or budget can be supplied to
focus a suite; `run_all` executes the whole registry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from . import linalg
from .asymptotics import (
    _gamma_iso_step,
    asymptotic_depth,
    asymptotic_regularity,
    deletion_chain,
    gamma_graph,
)
from .chain import (
    ChainSeed,
    boundary_subgraph,
    chain_invariants,
    generate_graph,
    is_normalized,
    normalize,
    orbit_edges_bruteforce,
    verify_decomposition,
)
from .complexes import (
    DEFAULT_FACE_BUDGET,
    f_vector_and_euler,
    field_discrepancies,
    independence_complex,
    reduced_homology,
)
from .errors import BudgetExceededError
from .graphs import DEFAULT_NODE_BUDGET, Graph
from .oracle import (
    depth_ge2,
    depth_upper_witness,
    depth_via_links,
    hochster_betti,
    is_zero_depth_localization,
    pd_via_bipartite,
)

ORACLE_RNG_SEED = 0xEC2024
RANDOM_GRAPH_COUNT = 200
BRUTE_FORCE_BUDGET = 1_000_000


@dataclass
class SuiteOptions:
    seed: ChainSeed | None = None
    n: int | None = None
    subset_cap: int | None = None
    face_budget: int = DEFAULT_FACE_BUDGET
    node_budget: int = DEFAULT_NODE_BUDGET
    field: object = linalg.RATIONAL


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition:
            self.violations.append(message)


@lru_cache(maxsize=None)
def all_seeds(r: int) -> tuple[ChainSeed, ...]:
    """Every seed with the given stability index (nonempty edge subsets)."""
    pairs = list(combinations(range(1, r + 1), 2))
    out = []
    for k in range(1, len(pairs) + 1):
        for chosen in combinations(pairs, k):
            out.append(ChainSeed(r, chosen))
    return tuple(out)


@lru_cache(maxsize=None)
def normalized_seeds(r: int) -> tuple[ChainSeed, ...]:
    """Seeds of the given index whose support starts at 1 and ends at r."""
    return tuple(s for s in all_seeds(r) if is_normalized(s))


def _corpus(opt: SuiteOptions, r_values: tuple[int, ...], normalized: bool):
    if opt.seed is not None:
        seed = opt.seed
        if normalized and not is_normalized(seed):
            seed, _ = normalize(seed)
        return (seed,)
    if normalized:
        return tuple(s for r in r_values for s in normalized_seeds(r))
    return tuple(s for r in r_values for s in all_seeds(r))


def _n_values(opt: SuiteOptions, default: tuple[int, ...], minimum: int):
    if opt.n is not None:
        if opt.n < minimum:
            raise ValueError(f"member index must be at least {minimum}, got {opt.n}")
        return (opt.n,)
    return default


def _tag(seed: ChainSeed) -> str:
    return f"r={seed.r} edges={list(seed.edges)}"


# -- chain structure ---------------------------------------------------------


def suite_triangle_oracle(opt: SuiteOptions) -> SuiteResult:
    """Slack-test membership equals brute-force orbit enumeration."""
    res = SuiteResult("triangle-oracle")
    r_values = (2, 3, 4, 5)
    for seed in _corpus(opt, r_values, normalized=False):
        for n in _n_values(opt, tuple(range(seed.r, seed.r + 4)), seed.r):
            if comb(n, seed.r) * len(seed.edges) > BRUTE_FORCE_BUDGET:
                raise BudgetExceededError(
                    f"orbit enumeration too large at r={seed.r}, n={n}"
                )
            brute = orbit_edges_bruteforce(seed, n)
            fast = set(generate_graph(seed, n).edges())
            res.check(brute == fast, f"{_tag(seed)} n={n}: orbit != slack test")
    return res


def suite_decomposition(opt: SuiteOptions) -> SuiteResult:
    """Any r+1 shift maps of a member generate the next member."""
    res = SuiteResult("decomposition")
    for seed in _corpus(opt, (2, 3, 4), normalized=False):
        r = seed.r
        for n in _n_values(opt, tuple(range(r, r + 4)), r):
            if comb(n + 1, r + 1) > 100_000:
                raise BudgetExceededError(f"too many shift selections at r={r}, n={n}")
            for lam in combinations(range(n + 1), r + 1):
                res.check(
                    verify_decomposition(seed, n, lam),
                    f"{_tag(seed)} n={n} lam={lam}: decomposition failed",
                )
    return res


def suite_short_moves(opt: SuiteOptions) -> SuiteResult:
    """Edges survive short cardinal moves, and no edge beats the minimum gap."""
    res = SuiteResult("short-moves")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        r = seed.r
        spi = chain_invariants(seed).spi
        for n in _n_values(opt, (3 * r, 3 * r + 2), 3 * r):
            g = generate_graph(seed, n)
            edges = g.edges()
            res.check(
                all(l - k >= spi for k, l in edges),
                f"{_tag(seed)} n={n}: an edge gap beats spi",
            )
            for k, l in edges:
                ok = True
                if k <= r and l >= n - r:
                    # east and south moves need both ranges to be nonempty
                    for k2 in range(k, r + 1):
                        ok = ok and g.has_edge(k2, l)
                    for l2 in range(n - r, l + 1):
                        ok = ok and g.has_edge(k, l2)
                for k2 in range(r, k + 1):
                    ok = ok and g.has_edge(k2, l)
                for l2 in range(l, n - r + 1):
                    ok = ok and g.has_edge(k, l2)
                res.check(ok, f"{_tag(seed)} n={n} edge=({k},{l}): a short move left the graph")
    return res


def suite_interval_disjointness(opt: SuiteOptions) -> SuiteResult:
    """Induced matchings of two edges span disjoint intervals."""
    res = SuiteResult("interval-disjointness")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        r = seed.r
        for n in _n_values(opt, (3 * r, 3 * r + 1, 3 * r + 2), 3 * r):
            g = generate_graph(seed, n)
            edges = g.edges()
            for a in range(len(edges)):
                u1, v1 = edges[a]
                for b in range(a + 1, len(edges)):
                    u2, v2 = edges[b]
                    if {u1, v1} & {u2, v2}:
                        continue
                    if (
                        g.has_edge(u1, u2)
                        or g.has_edge(u1, v2)
                        or g.has_edge(v1, u2)
                        or g.has_edge(v1, v2)
                    ):
                        continue
                    disjoint = v1 < u2 or v2 < u1
                    res.check(
                        disjoint,
                        f"{_tag(seed)} n={n}: induced matching "
                        f"({u1},{v1}),({u2},{v2}) with overlapping intervals",
                    )
    return res


def suite_no_long_holes(opt: SuiteOptions) -> SuiteResult:
    """Large members contain no induced cycle on six or more vertices."""
    res = SuiteResult("no-long-holes")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        r = seed.r
        for n in _n_values(opt, (3 * r, 3 * r + 1), 3 * r):
            g = generate_graph(seed, n)
            hole = g.find_induced_cycle_at_least(6, opt.node_budget)
            res.check(hole is None, f"{_tag(seed)} n={n}: induced cycle {hole}")
    return res


def suite_normalization(opt: SuiteOptions) -> SuiteResult:
    """Normalization invariants, idempotence, and the depth shift identity."""
    res = SuiteResult("normalization")
    for seed in _corpus(opt, (2, 3, 4), normalized=False):
        inv = chain_invariants(seed)
        nseed, shift = normalize(seed)
        ninv = chain_invariants(nseed)
        res.check(
            ninv.i1 == 1 and ninv.p == nseed.r == inv.r_tilde,
            f"{_tag(seed)}: normalized support is not 1..r_tilde",
        )
        res.check(
            (ninv.spi, ninv.j_q - ninv.i1, ninv.p - ninv.i1)
            == (inv.spi, inv.j_q - inv.i1, inv.p - inv.i1),
            f"{_tag(seed)}: normalization changed a shift-invariant quantity",
        )
        res.check(
            shift.variable_shift == inv.i1 - 1
            and shift.index_shift == seed.r - inv.r_tilde
            and shift.variable_shift >= 0
            and shift.index_shift >= 0,
            f"{_tag(seed)}: wrong shift record",
        )
        res.check(normalize(nseed)[0] == nseed, f"{_tag(seed)}: normalize not idempotent")
        n = 3 * seed.r if opt.n is None else opt.n
        raw = depth_via_links(generate_graph(seed, n), opt.field, opt.face_budget)
        shifted = depth_via_links(
            generate_graph(nseed, n - shift.index_shift), opt.field, opt.face_budget
        )
        res.check(
            raw == shift.index_shift + shifted,
            f"{_tag(seed)} n={n}: depth shift identity failed ({raw} vs {shift.index_shift}+{shifted})",
        )
    return res


def suite_neighborhood_deletion(opt: SuiteOptions) -> SuiteResult:
    """Structure of members minus the closed neighborhood of the top vertex."""
    res = SuiteResult("neighborhood-deletion")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        r, b, bb = seed.r, inv.b, inv.B
        for n in _n_values(opt, (2 * r + 1, 2 * r + 2, 2 * r + 3), 2 * r + 1):
            g = generate_graph(seed, n)
            f_n = g.remove_closed_neighborhood({n})
            expected = tuple(
                sorted(set(range(1, b)) | set(range(n - r + bb + 1, n)))
            )
            res.check(
                f_n.vertices == expected,
                f"{_tag(seed)} n={n}: deleted-neighborhood vertex set {f_n.vertices}",
            )
            f_next = generate_graph(seed, n + 1).remove_closed_neighborhood({n + 1})
            relabel = {v: (v if v < b else v + 1) for v in f_n.vertices}
            iso = sorted(relabel.values()) == list(f_next.vertices) and all(
                f_n.has_edge(u, v) == f_next.has_edge(relabel[u], relabel[v])
                for u, v in combinations(f_n.vertices, 2)
            )
            res.check(iso, f"{_tag(seed)} n={n}: consecutive deletions not isomorphic")
            if f_n.n:
                res.check(
                    f_n.is_weakly_chordal(opt.node_budget),
                    f"{_tag(seed)} n={n}: deleted neighborhood not weakly chordal",
                )
    return res


# -- independent sets and depth bounds --------------------------------------


def suite_mis_size(opt: SuiteOptions) -> SuiteResult:
    """With j_q = p, maximal independent sets of large members have size >= spi."""
    res = SuiteResult("mis-size")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        if inv.j_q != inv.p:
            continue
        for n in _n_values(opt, (3 * seed.r,), 3 * seed.r):
            sets = generate_graph(seed, n).maximal_independent_sets()
            res.check(
                all(len(s) >= inv.spi for s in sets),
                f"{_tag(seed)} n={n}: maximal independent set smaller than spi",
            )
    return res


def suite_deletion_connectivity(opt: SuiteOptions) -> SuiteResult:
    """Deleting N[U] for small independent U keeps the complement connected."""
    res = SuiteResult("deletion-connectivity")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        if inv.j_q != inv.p or inv.spi < 2:
            continue
        for n in _n_values(opt, (3 * seed.r,), 3 * seed.r):
            g = generate_graph(seed, n)
            small = [
                u
                for u in g.iter_independent_sets()
                if len(u) <= inv.spi - 2
            ]
            for u in small:
                rest = g.remove_closed_neighborhood(u)
                res.check(
                    rest.n > 0 and rest.complement().component_count() == 1,
                    f"{_tag(seed)} n={n} U={sorted(u)}: complement disconnected",
                )
    return res


def suite_depth_bounds(opt: SuiteOptions) -> SuiteResult:
    """The explicit witness certifies the upper bound; the lower bound holds."""
    res = SuiteResult("depth-bounds")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        r = seed.r
        for n in _n_values(opt, (3 * r,), 3 * r):
            g = generate_graph(seed, n)
            witness = depth_upper_witness(seed, n)
            res.check(
                len(witness) == inv.spi
                and g.is_independent_set(witness)
                and is_zero_depth_localization(g, witness),
                f"{_tag(seed)} n={n}: witness {sorted(witness)} fails",
            )
            depth = depth_via_links(g, opt.field, opt.face_budget)
            res.check(
                depth <= inv.spi,
                f"{_tag(seed)} n={n}: depth {depth} above the spi bound",
            )
            res.check(
                depth >= min(inv.spi, 2),
                f"{_tag(seed)} n={n}: depth {depth} below the lower bound",
            )
        if opt.n is None:
            for n in (r, r + 1):
                depth = depth_via_links(generate_graph(seed, n), opt.field, opt.face_budget)
                res.check(
                    depth >= min(inv.spi, 2),
                    f"{_tag(seed)} n={n}: depth {depth} below the lower bound",
                )
    return res


def suite_depth_formula(opt: SuiteOptions) -> SuiteResult:
    """Closed-form eventual depth equals the link oracle past the onset.

    Runs on every small seed, normalized or not: the index-shift term of
    the formula is part of what is being checked.
    """
    res = SuiteResult("depth-formula")
    for seed in _corpus(opt, (2, 3, 4), normalized=False):
        value, onset = asymptotic_depth(seed)
        for n in _n_values(opt, tuple(range(onset, onset + 4)), seed.r):
            depth = depth_via_links(generate_graph(seed, n), opt.field, opt.face_budget)
            res.check(
                depth == value,
                f"{_tag(seed)} n={n}: formula {value} but oracle {depth}",
            )
    return res


# -- homology ----------------------------------------------------------------


def suite_h1_stable(opt: SuiteOptions) -> SuiteResult:
    """With spi >= 2 and j_q < p, first homology is one-dimensional."""
    res = SuiteResult("h1-stable")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        if inv.spi < 2 or inv.j_q == inv.p:
            continue
        r = seed.r
        for n in _n_values(opt, tuple(range(3 * r, 3 * r + 4)), 3 * r):
            prof = reduced_homology(
                independence_complex(generate_graph(seed, n)), opt.field, opt.face_budget
            )
            res.check(
                prof[1] == 1,
                f"{_tag(seed)} n={n}: dim H1 = {prof[1]} instead of 1",
            )
    return res


def suite_deletion_homology(opt: SuiteOptions) -> SuiteResult:
    """Homology of members minus the top vertex or its closed neighborhood."""
    res = SuiteResult("deletion-homology")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        if inv.spi < 2:
            continue
        r = seed.r
        for n in _n_values(opt, (3 * r,), 3 * r):
            g = generate_graph(seed, n)
            minus_top = g.induced_subgraph(range(1, n))
            prof_top = reduced_homology(
                independence_complex(minus_top), opt.field, opt.face_budget
            )
            res.check(prof_top[0] == 0, f"{_tag(seed)} n={n}: H0 of top-deletion nonzero")
            if inv.j_q == r - 1:
                res.check(
                    prof_top[1] == 0, f"{_tag(seed)} n={n}: H1 of top-deletion nonzero"
                )
            minus_nbhd = g.remove_closed_neighborhood({n})
            prof_nbhd = reduced_homology(
                independence_complex(minus_nbhd), opt.field, opt.face_budget
            )
            if inv.j_q < r:
                want = 1 if inv.j_q == r - 1 else 0
                res.check(
                    prof_nbhd[0] == want,
                    f"{_tag(seed)} n={n}: H0 of neighborhood-deletion is "
                    f"{prof_nbhd[0]}, expected {want}",
                )
            res.check(
                prof_nbhd[1] == 0,
                f"{_tag(seed)} n={n}: H1 of neighborhood-deletion nonzero",
            )
    return res


def suite_h2_vanishing(opt: SuiteOptions) -> SuiteResult:
    """No reduced homology above degree 1 for members past four widths."""
    res = SuiteResult("h2-vanishing")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        r = seed.r
        for n in _n_values(opt, (4 * r, 4 * r + 1, 4 * r + 2), 4 * r):
            prof = reduced_homology(
                independence_complex(generate_graph(seed, n)), opt.field, opt.face_budget
            )
            high = {d: v for d, v in prof.nonzero().items() if d >= 2}
            res.check(not high, f"{_tag(seed)} n={n}: homology above degree 1: {high}")
    return res


def suite_isolated_middle(opt: SuiteOptions) -> SuiteResult:
    """Minimum-gap-1 chains: isolated middle block and stable boundary graph."""
    res = SuiteResult("isolated-middle")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        if inv.spi != 1:
            continue
        r = seed.r
        for n in _n_values(opt, (4 * r, 4 * r + 1, 4 * r + 2), 4 * r):
            g = generate_graph(seed, n)
            comp = g.complement()
            res.check(
                all(comp.degree(v) == 0 for v in range(2 * r, n - 2 * r + 1)),
                f"{_tag(seed)} n={n}: middle block not isolated in the complement",
            )
            gamma = gamma_graph(seed, n)
            res.check(
                comp.component_count() == gamma.component_count() + n - 4 * r + 1,
                f"{_tag(seed)} n={n}: component count bookkeeping failed",
            )
            if _gamma_iso_step(seed, n):
                f_now, _ = f_vector_and_euler(independence_complex(g), opt.face_budget)
                f_next, _ = f_vector_and_euler(
                    independence_complex(generate_graph(seed, n + 1)), opt.face_budget
                )
                res.check(
                    len(f_next) == len(f_now)
                    and f_next[0] == f_now[0] + 1
                    and f_next[1:] == f_now[1:],
                    f"{_tag(seed)} n={n}: f-vector did not shift by one point",
                )
    return res


def suite_deletion_chain(opt: SuiteOptions) -> SuiteResult:
    """The derived seed presents exactly the top-vertex deletions."""
    res = SuiteResult("deletion-chain")
    for seed in _corpus(opt, (2, 3, 4), normalized=False):
        r = seed.r
        dseed = deletion_chain(seed)
        for n in _n_values(opt, tuple(range(r + 1, r + 5)), r + 1):
            left = generate_graph(dseed, n - 1)
            right = generate_graph(seed, n).induced_subgraph(range(1, n))
            res.check(left == right, f"{_tag(seed)} n={n}: deletion member mismatch")
        inv = chain_invariants(seed)
        if inv.i1 == 1 and inv.j_q < inv.p:
            res.check(
                chain_invariants(dseed).j_q == inv.j_q + 1,
                f"{_tag(seed)}: deletion seed j_q did not grow by one",
            )
    return res


def suite_boundary_h1(opt: SuiteOptions) -> SuiteResult:
    """Boundary subgraphs: induced matchings stay small, first homology dies."""
    res = SuiteResult("boundary-h1")
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        r = seed.r
        for n in _n_values(opt, (3 * r,), 3 * r):
            g = generate_graph(seed, n)
            res.check(
                g.induced_matching_number(cap=3) <= 2,
                f"{_tag(seed)} n={n}: member induced matching number above 2",
            )
            for a in range(1, inv.b + 1):
                for big_a in range(inv.B, r):
                    sub = boundary_subgraph(seed, n, a, big_a)
                    res.check(
                        sub.induced_matching_number(cap=3) <= 2,
                        f"{_tag(seed)} n={n} (a={a},A={big_a}): inm above 2",
                    )
                    if inv.spi >= 2:
                        prof = reduced_homology(
                            independence_complex(sub), opt.field, opt.face_budget
                        )
                        res.check(
                            prof[1] == 0,
                            f"{_tag(seed)} n={n} (a={a},A={big_a}): H1 nonzero",
                        )
    return res


# -- regularity and cross-oracle ---------------------------------------------


def suite_reg_stability(opt: SuiteOptions) -> SuiteResult:
    """With j_q = p the quotient regularity is 1 from three widths minus three."""
    res = SuiteResult("reg-stability")
    cap = opt.subset_cap if opt.subset_cap is not None else 12
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        inv = chain_invariants(seed)
        if inv.j_q != seed.r:
            continue
        r = seed.r
        default_range = tuple(range(3 * r - 3, min(3 * r + 2, cap) + 1))
        for n in _n_values(opt, default_range, max(r, 3 * r - 3)):
            if n > cap:
                raise BudgetExceededError(f"regularity scan needs n <= {cap}, got {n}")
            reg = hochster_betti(
                generate_graph(seed, n), opt.field, n_cap=cap, face_budget=opt.face_budget
            ).reg
            res.check(reg == 1, f"{_tag(seed)} n={n}: quotient regularity {reg} != 1")
    return res


def suite_reg_table(opt: SuiteOptions) -> SuiteResult:
    """The two-row eventual regularity table matches the subset oracle."""
    res = SuiteResult("reg-table")
    cap = opt.subset_cap if opt.subset_cap is not None else 14
    for seed in _corpus(opt, (2, 3, 4), normalized=True):
        predicted = asymptotic_regularity(seed)
        n = min(3 * seed.r, 14) if opt.n is None else opt.n
        if n > cap:
            raise BudgetExceededError(f"regularity oracle needs n <= {cap}, got {n}")
        reg = hochster_betti(
            generate_graph(seed, n), opt.field, n_cap=cap, face_budget=opt.face_budget
        ).reg
        res.check(
            reg == predicted,
            f"{_tag(seed)} n={n}: table says {predicted}, oracle says {reg}",
        )
    return res


def bundled_small_members(limit: int = 10) -> list[tuple[str, Graph]]:
    """Members of the bundled chains with at most ``limit`` vertices."""
    from .cli import bundled_seeds

    out = []
    for name, seed in bundled_seeds():
        for n in range(seed.r, limit + 1):
            out.append((f"{name}:n={n}", generate_graph(seed, n)))
    return out


def random_graph_corpus(count: int = RANDOM_GRAPH_COUNT) -> list[tuple[str, Graph]]:
    """Seeded random graphs on 4..10 vertices, each with at least one edge."""
    rng = random.Random(ORACLE_RNG_SEED)
    out = []
    while len(out) < count:
        n = rng.randint(4, 10)
        density = rng.choice((0.15, 0.3, 0.5, 0.7))
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < density
        ]
        if not edges:
            continue
        out.append((f"random-{len(out)}:n={n}", Graph(range(1, n + 1), edges)))
    return out


def suite_oracle_cross(opt: SuiteOptions) -> SuiteResult:
    """The two depth routes agree, with every side identity along the way."""
    res = SuiteResult("oracle-cross")
    if opt.seed is not None:
        graphs = [
            (f"seed:n={n}", generate_graph(opt.seed, n))
            for n in range(opt.seed.r, (opt.n if opt.n is not None else 10) + 1)
        ]
        bundled_count = len(graphs)
    else:
        bundled = bundled_small_members()
        graphs = bundled + random_graph_corpus()
        bundled_count = len(bundled)
    for idx, (tag, g) in enumerate(graphs):
        h = hochster_betti(g, opt.field, n_cap=16, face_budget=opt.face_budget)
        dl = depth_via_links(g, opt.field, opt.face_budget)
        res.check(
            dl == h.depth == g.n - h.pd,
            f"{tag}: depth routes disagree (links {dl}, subsets {h.depth})",
        )
        cx = independence_complex(g)
        prof = reduced_homology(cx, opt.field, opt.face_budget)
        res.check(
            prof[0] == g.complement().component_count() - 1,
            f"{tag}: H0 does not count complement components",
        )
        res.check(
            depth_ge2(g) == (dl >= 2),
            f"{tag}: the connectivity criterion disagrees with depth",
        )
        f_vec, chi = f_vector_and_euler(cx, opt.face_budget)
        alternating = 1 + sum((-1) ** d * v for d, v in prof.dims.items())
        res.check(chi == alternating, f"{tag}: Euler characteristic mismatch")
        if g.is_weakly_chordal(opt.node_budget):
            res.check(
                pd_via_bipartite(g) == h.pd,
                f"{tag}: bipartite-family pd disagrees with subsets",
            )
        if idx < bundled_count:
            res.check(
                not field_discrepancies(cx, 2, opt.face_budget),
                f"{tag}: rational and GF(2) homology disagree",
            )
    return res


REGISTRY = {
    "triangle-oracle": suite_triangle_oracle,
    "decomposition": suite_decomposition,
    "short-moves": suite_short_moves,
    "interval-disjointness": suite_interval_disjointness,
    "no-long-holes": suite_no_long_holes,
    "normalization": suite_normalization,
    "neighborhood-deletion": suite_neighborhood_deletion,
    "mis-size": suite_mis_size,
    "deletion-connectivity": suite_deletion_connectivity,
    "depth-bounds": suite_depth_bounds,
    "depth-formula": suite_depth_formula,
    "h1-stable": suite_h1_stable,
    "deletion-homology": suite_deletion_homology,
    "h2-vanishing": suite_h2_vanishing,
    "isolated-middle": suite_isolated_middle,
    "deletion-chain": suite_deletion_chain,
    "boundary-h1": suite_boundary_h1,
    "reg-stability": suite_reg_stability,
    "reg-table": suite_reg_table,
    "oracle-cross": suite_oracle_cross,
}


def run_suite(name: str, options: SuiteOptions | None = None) -> SuiteResult:
    if name not in REGISTRY:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(sorted(REGISTRY))}")
    return REGISTRY[name](options or SuiteOptions())


def run_all(options: SuiteOptions | None = None) -> list[SuiteResult]:
    options = options or SuiteOptions()
    return [fn(options) for fn in REGISTRY.values()]
