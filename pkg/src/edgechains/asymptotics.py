"""Closed-form asymptotics and stabilization scans for chain members.

The eventual depth and regularity of a chain's quotients are decided by two
seed quantities: whether the widest edge at the smallest support index
reaches the top of the support (j_q = p), and the minimum edge gap (spi).
Eventual homology of the independence complexes is closed-form except when
spi = 1, where the two surviving constants are pinned down by scanning for
stabilization of a fixed-size boundary graph and of the Euler
characteristic; values obtained that way carry an ``empirical`` flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .chain import ChainSeed, chain_invariants, generate_graph, is_normalized, normalize
from .complexes import (
    DEFAULT_FACE_BUDGET,
    f_vector_and_euler,
    independence_complex,
    reduced_homology,
)
from .errors import BudgetExceededError
from .graphs import Graph
from .oracle import DEFAULT_SUBSET_CAP, depth_via_links, hochster_betti

SCAN_QUANTITIES = ("depth", "h0", "h1", "reg", "euler", "f")


@dataclass(frozen=True)
class AsymptoticReport:
    """Predicted eventual behavior of a chain, in the normalized frame.

    Depth and regularity refer to the raw chain (the index shift is already
    folded into ``depth_value``); the homology fields describe the
    normalized chain, with the recorded shifts mapping back.
    """

    depth_value: int
    depth_valid_from: int
    reg_value: int
    h2plus_value: int
    h2plus_from: int
    h0_rule: str  # "zero" or "n-alpha"
    alpha: int | None
    beta: int
    empirical: frozenset[str]
    variable_shift: int
    index_shift: int


def asymptotic_depth(seed: ChainSeed) -> tuple[int, int]:
    """Eventual depth of the quotients and the proven onset index.

    The value is (r - r_tilde) + spi when the smallest support index is
    joined to the top one, else (r - r_tilde) + min(spi, 2); it holds from
    r + 2*r_tilde on.
    """
    inv = chain_invariants(seed)
    base = seed.r - inv.r_tilde
    if inv.j_q == inv.p:
        value = base + inv.spi
    else:
        value = base + min(inv.spi, 2)
    return value, seed.r + 2 * inv.r_tilde


def asymptotic_regularity(seed: ChainSeed) -> int:
    """Eventual regularity of the quotients: always 1 or 2.

    1 when the smallest support index reaches the top of the support, or
    when spi = 1 and the induced matching number of a large member is 1;
    otherwise 2.  The matching number is evaluated with an early-exit cap
    of 2 on the normalized member at three times the normalized index.
    """
    inv = chain_invariants(seed)
    if inv.j_q == inv.p:
        return 1
    if inv.spi >= 2:
        return 2
    nseed, _ = normalize(seed)
    inm = generate_graph(nseed, 3 * nseed.r).induced_matching_number(cap=2)
    return 1 if inm == 1 else 2


def gamma_graph(seed: ChainSeed, n: int) -> Graph:
    """Complement of a member graph minus its isolated middle block.

    For normalized seeds with spi = 1 and n >= 4r, the vertices 2r..n-2r
    are isolated in the complement; removing them leaves this fixed-size
    graph on 4r - 1 vertices whose component count determines the eventual
    zeroth homology.
    """
    if not is_normalized(seed):
        raise ValueError("gamma graph requires a normalized seed")
    inv = chain_invariants(seed)
    if inv.spi != 1:
        raise ValueError("gamma graph is defined for chains with minimum gap 1")
    r = seed.r
    if n < 4 * r:
        raise ValueError(f"member index must be at least {4 * r}, got {n}")
    keep = [v for v in range(1, n + 1) if not 2 * r <= v <= n - 2 * r]
    return generate_graph(seed, n).complement().induced_subgraph(keep)


def _gamma_iso_step(seed: ChainSeed, n: int) -> bool:
    """Whether the shift map fixing 1..2r matches consecutive gamma graphs."""
    r = seed.r
    g_n = gamma_graph(seed, n)
    g_next = gamma_graph(seed, n + 1)
    relabel = {v: (v if v <= 2 * r else v + 1) for v in g_n.vertices}
    if sorted(relabel.values()) != list(g_next.vertices):
        return False
    vs = g_n.vertices
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if g_n.has_edge(vs[a], vs[b]) != g_next.has_edge(relabel[vs[a]], relabel[vs[b]]):
                return False
    return True


def deletion_chain(seed: ChainSeed) -> ChainSeed:
    """Seed of the chain of member graphs with their last vertex deleted.

    Presented at the same index by the next member's edges that avoid the
    top vertex; when the support starts at 1 and j_q < p, the widest edge
    at index 1 grows by one.
    """
    edges = [(i, j) for i, j in generate_graph(seed, seed.r + 1).edges() if j <= seed.r]
    return ChainSeed(seed.r, tuple(edges))


def asymptotic_homology(
    seed: ChainSeed,
    field: object = linalg.RATIONAL,
    max_n: int | None = None,
    face_budget: int = DEFAULT_FACE_BUDGET,
) -> AsymptoticReport:
    """Eventual reduced homology of the independence complexes.

    Homology vanishes above degree 1 from 4*r_tilde on.  With spi >= 2 the
    zeroth group vanishes and the first has dimension 0 or 1 by the
    j_q = p dichotomy.  With spi = 1 the zeroth group grows like n - alpha
    with alpha = 4r - c read off the stabilized gamma graph, and the first
    is constant with beta recovered from the stabilized Euler
    characteristic; both are flagged empirical.  Raises
    BudgetExceededError if stabilization is not confirmed by ``max_n``.
    """
    nseed, shift = normalize(seed)
    inv = chain_invariants(nseed)
    rt = nseed.r
    depth_value, depth_from = asymptotic_depth(seed)
    reg_value = asymptotic_regularity(seed)
    empirical: set[str] = set()
    if inv.spi >= 2:
        h0_rule = "zero"
        alpha = None
        beta = 0 if inv.j_q == rt else 1
    else:
        h0_rule = "n-alpha"
        limit = max_n if max_n is not None else 20 * rt
        alpha = _stabilized_alpha(nseed, rt, limit)
        gamma_const = _stabilized_gamma(nseed, rt, limit, field, face_budget)
        beta = gamma_const - alpha + 1
        empirical.update(("alpha", "beta"))
    return AsymptoticReport(
        depth_value=depth_value,
        depth_valid_from=depth_from,
        reg_value=reg_value,
        h2plus_value=0,
        h2plus_from=4 * rt,
        h0_rule=h0_rule,
        alpha=alpha,
        beta=beta,
        empirical=frozenset(empirical),
        variable_shift=shift.variable_shift,
        index_shift=shift.index_shift,
    )


def _stabilized_alpha(nseed: ChainSeed, rt: int, limit: int) -> int:
    run = 0
    for n in range(4 * rt, limit + 1):
        if _gamma_iso_step(nseed, n):
            run += 1
            if run >= rt:
                components = gamma_graph(nseed, n).component_count()
                return 4 * rt - components
        else:
            run = 0
    raise BudgetExceededError(
        f"gamma graph did not stabilize for {rt} consecutive steps by n={limit}"
    )


def _stabilized_gamma(nseed, rt, limit, field, face_budget) -> int:
    run = 0
    prev: int | None = None
    for n in range(4 * rt, limit + 1):
        _, chi = f_vector_and_euler(
            independence_complex(generate_graph(nseed, n)), face_budget
        )
        if prev is not None and chi == prev + 1:
            run += 1
            if run >= rt:
                return n - chi
        elif prev is not None:
            run = 0
        prev = chi
    raise BudgetExceededError(
        f"Euler characteristic increments did not stabilize by n={limit}"
    )


@dataclass(frozen=True)
class ScanResult:
    """Per-member oracle values plus the detected onset of the final run."""

    quantity: str
    rows: tuple[tuple[int, object], ...]
    onset: int | None


def stabilization_scan(
    seed: ChainSeed,
    quantity: str,
    n_range: tuple[int, int],
    field: object = linalg.RATIONAL,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    face_budget: int = DEFAULT_FACE_BUDGET,
) -> ScanResult:
    """Oracle values of one quantity across a member range.

    The onset is the start of the final constant run; for h0 and the Euler
    characteristic on minimum-gap-1 chains the final run increments by one
    per step instead, and f-vectors combine both behaviors.  None when the
    last two values already disagree with the expected pattern.
    """
    if quantity == "f_vector":
        quantity = "f"
    if quantity not in SCAN_QUANTITIES:
        raise ValueError(f"unknown scan quantity {quantity!r}")
    lo, hi = n_range
    if lo > hi:
        raise ValueError(f"empty scan range {lo}..{hi}")
    if lo < seed.r:
        raise ValueError(f"scan range must start at the stability index {seed.r} or later")
    rows: list[tuple[int, object]] = []
    for n in range(lo, hi + 1):
        g = generate_graph(seed, n)
        if quantity == "depth":
            value: object = depth_via_links(g, field, face_budget)
        elif quantity in ("h0", "h1"):
            prof = reduced_homology(independence_complex(g), field, face_budget)
            value = prof[0 if quantity == "h0" else 1]
        elif quantity == "reg":
            value = hochster_betti(g, field, n_cap=subset_cap, face_budget=face_budget).reg
        elif quantity == "euler":
            value = f_vector_and_euler(independence_complex(g), face_budget)[1]
        else:
            value = f_vector_and_euler(independence_complex(g), face_budget)[0]
        rows.append((n, value))
    spi = chain_invariants(seed).spi
    onset = _detect_onset(rows, quantity, spi)
    return ScanResult(quantity=quantity, rows=tuple(rows), onset=onset)


def _detect_onset(rows: Sequence[tuple[int, object]], quantity: str, spi: int) -> int | None:
    if len(rows) < 2:
        return None
    increments = spi == 1 and quantity in ("h0", "euler")

    def step_ok(prev, cur) -> bool:
        if quantity == "f":
            if spi == 1:
                if len(prev) != len(cur):
                    return False
                return cur[0] == prev[0] + 1 and all(
                    c == p for p, c in zip(prev[1:], cur[1:])
                )
            return cur == prev
        if increments:
            return cur == prev + 1
        return cur == prev

    start = len(rows) - 1
    for idx in range(len(rows) - 2, -1, -1):
        if step_ok(rows[idx][1], rows[idx + 1][1]):
            start = idx
        else:
            break
    if start == len(rows) - 1:
        return None
    return rows[start][0]
