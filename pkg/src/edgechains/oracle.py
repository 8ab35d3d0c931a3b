"""Brute-force commutative-algebra oracles for edge ideals.

Everything here recomputes depth, projective dimension, and regularity of
the quotient by an edge ideal straight from the combinatorics, through two
independent routes: graded local cohomology via links of independent sets,
and the squarefree Betti-number formula over vertex subsets.  These are
the ground truth the closed-form asymptotics are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import linalg
from .chain import ChainSeed, chain_invariants, is_normalized
from .complexes import (
    DEFAULT_FACE_BUDGET,
    HomologyProfile,
    homology_dims_from_masks,
    independence_complex,
    link,
    reduced_homology,
)
from .errors import BudgetExceededError
from .graphs import Graph, _bit_positions, _independent_masks, max_bipartite_family_score

DEFAULT_SUBSET_CAP = 16

# multiplicity per (homological index, vertex subset)
BettiTable = Mapping[tuple[int, frozenset[int]], int]


@dataclass(frozen=True)
class LocalizedIdeal:
    """An edge ideal with the variables of F set to 1.

    When F touches no edge the result is generated by the variables
    adjacent to F plus the edges untouched by N[F]; when F contains an
    edge, setting its endpoints to 1 produces the unit ideal, flagged by
    ``is_unit`` since no generator description applies.
    """

    ambient: tuple[int, ...]
    vertex_generators: frozenset[int]
    residual_edges: tuple[tuple[int, int], ...]
    is_unit: bool = False


def localize(g: Graph, f: frozenset[int] | set[int]) -> LocalizedIdeal:
    """Set the variables indexed by ``f`` to 1 in the edge ideal of ``g``."""
    fs = frozenset(f)
    for v in fs:
        if not g.has_vertex(v):
            raise ValueError(f"unknown vertex {v}")
    ambient = tuple(v for v in g.vertices if v not in fs)
    if not g.is_independent_set(fs):
        return LocalizedIdeal(ambient, frozenset(), (), is_unit=True)
    gens = {u for v in fs for u in g.neighbors(v)} - fs
    touched = gens | fs
    residual = tuple(
        (u, v) for u, v in g.edges() if u not in touched and v not in touched
    )
    return LocalizedIdeal(ambient, frozenset(gens), residual)


def is_zero_depth_localization(g: Graph, f) -> bool:
    """Whether setting F to 1 turns the edge ideal into the full maximal ideal.

    Equivalent to F being independent and dominating, i.e. a maximal
    independent set; such an F certifies depth <= |F|.
    """
    loc = localize(g, f)
    return not loc.is_unit and loc.vertex_generators == set(loc.ambient)


def depth_ge2(g: Graph) -> bool:
    """Depth of the quotient is at least 2 iff the complement is connected."""
    if g.edge_count == 0:
        raise ValueError("depth criterion needs at least one edge")
    return g.complement().component_count() == 1


def depth_via_links(
    g: Graph,
    field: object = linalg.RATIONAL,
    face_budget: int = DEFAULT_FACE_BUDGET,
) -> int:
    """Depth of the quotient from reduced homology of links.

    Graded local cohomology lives in degree |F| + d + 1 whenever the link
    of an independent set F has homology in degree d, and only independent
    sets contribute.  The search runs t = 1, 2, ... and stops at the first
    realized value, which is the depth; it always terminates because the
    link of a smallest facet is the irrelevant complex.
    """
    if g.edge_count == 0:
        raise ValueError("depth oracle needs at least one edge")
    cx = independence_complex(g)
    by_dim = cx.faces_by_dim(face_budget)
    faces_by_size: dict[int, list[frozenset[int]]] = {0: [frozenset()]}
    for d, masks in sorted(by_dim.items()):
        faces_by_size[d + 1] = [
            frozenset(cx.vertices[i] for i in _bit_positions(m)) for m in masks
        ]
    t_max = min(len(f) for f in cx.facets)
    profiles: dict[frozenset[int], HomologyProfile] = {}
    for t in range(1, t_max + 1):
        for size in range(0, t + 1):
            for f in faces_by_size.get(size, ()):
                prof = profiles.get(f)
                if prof is None:
                    prof = reduced_homology(link(cx, f), field, face_budget)
                    profiles[f] = prof
                if prof[t - size - 1]:
                    return t
    raise AssertionError("unreachable: a smallest facet realizes its own size")


@dataclass(frozen=True)
class HochsterResult:
    """Graded Betti data of an edge ideal from subset-restricted homology."""

    betti: Mapping[tuple[int, frozenset[int]], int]
    pd: int
    reg: int
    depth: int


def hochster_betti(
    g: Graph,
    field: object = linalg.RATIONAL,
    n_cap: int = DEFAULT_SUBSET_CAP,
    face_budget: int = DEFAULT_FACE_BUDGET,
) -> HochsterResult:
    """Betti table of the edge ideal plus pd, reg, and depth of the quotient.

    The multiplicity at (i, W) is the reduced homology dimension of the
    independence complex restricted to W in degree |W| - i - 2; pd and reg
    of the quotient and depth = |V| - pd follow.  Runs over all 2^|V|
    subsets, so |V| is capped.
    """
    n = g.n
    if n > n_cap:
        raise BudgetExceededError(f"vertex count {n} exceeds the subset cap {n_cap}")
    field = linalg.validate_field(field)
    adj = g.adjacency_masks()
    vs = g.vertices
    betti: dict[tuple[int, frozenset[int]], int] = {}
    pd = 0
    reg = 0
    for wmask in range(1, 1 << n):
        cone = False
        rest = wmask
        while rest:
            low = rest & -rest
            if adj[low.bit_length() - 1] & wmask == 0:
                cone = True  # isolated vertex sits in every facet
                break
            rest ^= low
        if cone:
            continue
        faces = _independent_masks(adj, wmask)
        if len(faces) > face_budget:
            raise BudgetExceededError(
                f"face enumeration exceeded the budget of {face_budget}"
            )
        by_dim: dict[int, list[int]] = {}
        for m in faces:
            if m:
                by_dim.setdefault(m.bit_count() - 1, []).append(m)
        dims = homology_dims_from_masks(by_dim, field)
        w_size = wmask.bit_count()
        labels: frozenset[int] | None = None
        for d, value in dims.items():
            if value and d >= 0:
                i = w_size - d - 2
                if i < 0:
                    continue
                if labels is None:
                    labels = frozenset(vs[b] for b in _bit_positions(wmask))
                betti[(i, labels)] = value
                if i + 1 > pd:
                    pd = i + 1
                if d + 1 > reg:
                    reg = d + 1
    return HochsterResult(betti=betti, pd=pd, reg=reg, depth=n - pd)


def pd_via_bipartite(g: Graph) -> int:
    """Projective dimension of the quotient for weakly chordal graphs.

    Scored by the best strongly disjoint family of complete bipartite
    subgraphs; valid only on weakly chordal graphs with at least one edge.
    """
    if g.edge_count == 0:
        raise ValueError("projective dimension formula needs at least one edge")
    if not g.is_weakly_chordal():
        raise ValueError("bipartite-family formula requires a weakly chordal graph")
    score, _ = max_bipartite_family_score(g)
    return score


def depth_upper_witness(seed: ChainSeed, n: int) -> frozenset[int]:
    """An explicit independent dominating set of size spi in the member graph.

    Built from three seed edges: the widest edge at the smallest support
    index, the lowest edge attaining the minimum gap, and the lowest edge
    reaching the top index.  Its localization is the full maximal ideal,
    certifying depth <= spi for every large member.
    """
    if not is_normalized(seed):
        raise ValueError("witness construction requires a normalized seed")
    if n < 3 * seed.r:
        raise ValueError(f"member index must be at least {3 * seed.r}, got {n}")
    inv = chain_invariants(seed)
    m = inv.spi
    a = inv.j_q
    v = min(j for i, j in seed.edges if j - i == m)
    alpha = max(a + v, inv.b)
    return frozenset(range(alpha - m + 1, alpha + 1))
