"""Finite presentations of shift-invariant chains of edge ideals.

A chain is pinned down by a seed: a stability index ``r`` together with the
edge list of its member graph on ``r`` vertices.  Every later member is the
orbit of the seed under the monoid of strictly increasing index maps, and
membership of a pair in any member graph reduces to a constant-time slack
test per seed edge, which is what everything here is built on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ChainSpecError
from .graphs import Graph

Edge = tuple[int, int]


@dataclass(frozen=True)
class ChainSeed:
    """Stability index plus the canonical edge list of the seed member.

    Edges are stored sorted by first endpoint, then second; duplicates are
    collapsed on construction, so equal ideals compare equal.
    """

    r: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ChainSpecError(f"stability index must be at least 2, got {self.r}")
        canon = sorted({(int(i), int(j)) for i, j in self.edges})
        if not canon:
            raise ChainSpecError("seed edge list must be nonempty")
        for i, j in canon:
            if not 1 <= i < j <= self.r:
                raise ChainSpecError(f"edge ({i}, {j}) out of range for r={self.r}")
        object.__setattr__(self, "edges", tuple(canon))


@dataclass(frozen=True)
class ChainInvariants:
    """The extremal seed-edge indices that drive every asymptotic formula."""

    i1: int  # smallest support index
    j_q: int  # largest partner of i1
    p: int  # largest support index
    b: int  # smallest partner of p
    B: int  # largest partner of p
    r_tilde: int  # support width p - i1 + 1
    spi: int  # minimum gap j - i over seed edges


@dataclass(frozen=True)
class ShiftRecord:
    """How much normalization shifted variables and the member index."""

    variable_shift: int
    index_shift: int


def chain_invariants(seed: ChainSeed) -> ChainInvariants:
    """Extremal indices and the sparsity index of a seed."""
    i1 = min(i for i, _ in seed.edges)
    p = max(j for _, j in seed.edges)
    j_q = max(j for i, j in seed.edges if i == i1)
    partners_of_p = [i for i, j in seed.edges if j == p]
    return ChainInvariants(
        i1=i1,
        j_q=j_q,
        p=p,
        b=min(partners_of_p),
        B=max(partners_of_p),
        r_tilde=p - i1 + 1,
        spi=min(j - i for i, j in seed.edges),
    )


def normalize(seed: ChainSeed) -> tuple[ChainSeed, ShiftRecord]:
    """Shift indices so the support starts at 1 and ends at the new r.

    Idempotent; the record carries the variable shift (i1 - 1) and the
    index shift (r - r_tilde) needed to map results back to the raw chain.
    """
    inv = chain_invariants(seed)
    shift = inv.i1 - 1
    new = ChainSeed(inv.r_tilde, tuple((i - shift, j - shift) for i, j in seed.edges))
    return new, ShiftRecord(variable_shift=shift, index_shift=seed.r - inv.r_tilde)


def is_normalized(seed: ChainSeed) -> bool:
    inv = chain_invariants(seed)
    return inv.i1 == 1 and inv.p == seed.r


def is_edge(seed: ChainSeed, n: int, k: int, l: int) -> bool:
    """Whether (k, l) is an edge of the member graph on n vertices.

    True iff some seed edge (i, j) satisfies 0 <= k-i <= l-j <= n-r: the
    pair then lies in the right triangle swept out by the seed edge under
    strictly increasing maps into [n].
    """
    if n < seed.r:
        raise ValueError(f"member index {n} below stability index {seed.r}")
    if not 1 <= k < l <= n:
        raise ValueError(f"vertex pair ({k}, {l}) out of range for n={n}")
    slack = n - seed.r
    for i, j in seed.edges:
        if 0 <= k - i <= l - j <= slack:
            return True
    return False


def generate_graph(seed: ChainSeed, n: int) -> Graph:
    """The member graph on vertex set {1, ..., n}."""
    if n < seed.r:
        raise ValueError(f"member index {n} below stability index {seed.r}")
    slack = n - seed.r
    edges = []
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            for i, j in seed.edges:
                if 0 <= k - i <= l - j <= slack:
                    edges.append((k, l))
                    break
    return Graph(range(1, n + 1), edges)


def orbit_edges_bruteforce(seed: ChainSeed, n: int) -> set[Edge]:
    """Member edges by enumerating all strictly increasing maps [r] -> [n].

    Test oracle for the slack test; exponential in r, so keep r small.
    """
    if n < seed.r:
        raise ValueError(f"member index {n} below stability index {seed.r}")
    out: set[Edge] = set()
    for image in combinations(range(1, n + 1), seed.r):
        for i, j in seed.edges:
            out.add((image[i - 1], image[j - 1]))
    return out


def sigma_image(edges: Iterable[Edge], k: int) -> tuple[Edge, ...]:
    """Edges under the map fixing 1..k and shifting every later index by 1."""
    if k < 0:
        raise ValueError("shift point must be nonnegative")

    def shift(v: int) -> int:
        return v if v <= k else v + 1

    return tuple(sorted({(shift(i), shift(j)) for i, j in edges}))


def verify_decomposition(seed: ChainSeed, n: int, lam: Iterable[int]) -> bool:
    """Whether the chosen shift maps of the n-th member cover the next one.

    Any selection of r+1 distinct shift points from {0, ..., n} suffices;
    smaller selections may or may not.
    """
    if n < seed.r:
        raise ValueError(f"member index {n} below stability index {seed.r}")
    lam = sorted(set(lam))
    for k in lam:
        if not 0 <= k <= n:
            raise ValueError(f"shift point {k} outside 0..{n}")
    current = set(generate_graph(seed, n).edges())
    union: set[Edge] = set()
    for k in lam:
        union.update(sigma_image(current, k))
    return union == set(generate_graph(seed, n + 1).edges())


def minimal_seed_reduction(seed: ChainSeed) -> ChainSeed:
    """Smallest seed presenting the same chain.

    Repeatedly drops the last index: the edges avoiding index r regenerate
    the seed member under all shift maps iff the chain already stabilizes
    at r-1.  Returns the fixed point.
    """
    current = seed
    while current.r > 2:
        trimmed = [(i, j) for i, j in current.edges if j <= current.r - 1]
        if not trimmed:
            break
        union: set[Edge] = set()
        for k in range(current.r):
            union.update(sigma_image(trimmed, k))
        if union != set(current.edges):
            break
        current = ChainSeed(current.r - 1, tuple(trimmed))
    return current


def boundary_subgraph(seed: ChainSeed, n: int, a: int, A: int) -> Graph:
    """Induced member subgraph on {1..a-1} plus the top r-A-1 vertices below n.

    Defined for normalized seeds; with a and A at their extremes (the
    smallest and largest partners of the top support index) this is exactly
    the member graph minus the closed neighborhood of its last vertex.
    """
    if not is_normalized(seed):
        raise ValueError("boundary subgraph requires a normalized seed")
    inv = chain_invariants(seed)
    r = seed.r
    if not 1 <= a <= inv.b:
        raise ValueError(f"a must satisfy 1 <= a <= {inv.b}, got {a}")
    if not inv.B <= A <= r - 1:
        raise ValueError(f"A must satisfy {inv.B} <= A <= {r - 1}, got {A}")
    if n < 2 * r + 1:
        raise ValueError(f"member index must be at least {2 * r + 1}, got {n}")
    verts = list(range(1, a)) + list(range(n - r + A + 1, n))
    edges = [
        (k, l)
        for k, l in combinations(verts, 2)
        if is_edge(seed, n, k, l)
    ]
    return Graph(verts, edges)


# -- chain-spec documents ---------------------------------------------------


def parse_chain_spec(text: str) -> ChainSeed:
    """Parse a chain-spec document into a canonical seed.

    Format: ``#`` comments to end of line; the first payload line reads
    ``r = <integer>`` (spaces optional); every later payload line holds one
    edge as two integers.  Duplicate or unsorted edges are canonicalized.
    """
    payload: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            payload.append((lineno, line))
    if not payload:
        raise ChainSpecError("empty chain spec")
    lineno, head = payload[0]
    compact = head.replace(" ", "").replace("\t", "")
    if not compact.startswith("r="):
        raise ChainSpecError(f"line {lineno}: expected 'r = <integer>', got {head!r}")
    try:
        r = int(compact[2:])
    except ValueError:
        raise ChainSpecError(f"line {lineno}: bad stability index {head!r}") from None
    edges = []
    for lineno, line in payload[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ChainSpecError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ChainSpecError(f"line {lineno}: expected integers, got {line!r}") from None
        if not 1 <= i < j <= r:
            raise ChainSpecError(f"line {lineno}: edge ({i}, {j}) out of range for r={r}")
        edges.append((i, j))
    return ChainSeed(r, tuple(edges))


def format_chain_spec(seed: ChainSeed, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"r={seed.r}")
    lines.extend(f"{i} {j}" for i, j in seed.edges)
    return "\n".join(lines) + "\n"


def load_chain_spec(path) -> ChainSeed:
    with open(path, encoding="utf-8") as fh:
        return parse_chain_spec(fh.read())
