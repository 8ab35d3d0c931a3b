"""Finite simple graphs on arbitrary integer labels.

Adjacency is kept as per-position bitmasks over the sorted vertex tuple,
which keeps the enumeration-heavy operations (maximal independent sets,
induced matchings, hole search) cheap at the scales this package targets
(a few dozen vertices).  Deletions preserve the original labels, and the
empty vertex set is a legal graph: it shows up naturally as ``G \\ N[U]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceededError

DEFAULT_NODE_BUDGET = 2_000_000


def _bit_positions(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with explicit, order-preserving labels."""

    __slots__ = ("_vs", "_pos", "_adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        vs = tuple(sorted(vertices))
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertex labels")
        pos = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            try:
                iu, iv = pos[u], pos[v]
            except KeyError as exc:
                raise ValueError(f"unknown vertex {exc.args[0]} in edge ({u}, {v})") from None
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
        self._vs = vs
        self._pos = pos
        self._adj = tuple(adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        vs = range(1, n + 1)
        return cls(vs, [(i, j) for i in vs for j in vs if i < j])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(range(1, n + 1))

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vs

    @property
    def n(self) -> int:
        return len(self._vs)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask adjacency over positions in ``vertices`` (hot-path API)."""
        return self._adj

    def has_vertex(self, v: int) -> bool:
        return v in self._pos

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[self._pos[u]] >> self._pos[v] & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self._vs[i] for i in _bit_positions(self._adj[self._pos[v]]))

    def degree(self, v: int) -> int:
        return self._adj[self._pos[v]].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, mask in enumerate(self._adj):
            u = self._vs[i]
            for j in _bit_positions(mask >> (i + 1) << (i + 1)):
                out.append((u, self._vs[j]))
        return out

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self._adj) // 2

    def is_independent_set(self, us: Iterable[int]) -> bool:
        mask = self._label_mask(us)
        return all(self._adj[i] & mask == 0 for i in _bit_positions(mask))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._vs == other._vs and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vs, self._adj))

    def __repr__(self) -> str:
        return f"Graph(vertices={self._vs!r}, edges={self.edges()!r})"

    def _label_mask(self, us: Iterable[int]) -> int:
        mask = 0
        for u in us:
            try:
                mask |= 1 << self._pos[u]
            except KeyError:
                raise ValueError(f"unknown vertex {u}") from None
        return mask

    def _labels(self, mask: int) -> frozenset[int]:
        return frozenset(self._vs[i] for i in _bit_positions(mask))

    # -- derived graphs --------------------------------------------------

    def complement(self) -> "Graph":
        n = len(self._vs)
        full = (1 << n) - 1
        g = Graph.__new__(Graph)
        g._vs = self._vs
        g._pos = self._pos
        g._adj = tuple((full & ~a & ~(1 << i)) for i, a in enumerate(self._adj))
        return g

    def induced_subgraph(self, us: Iterable[int]) -> "Graph":
        keep = self._label_mask(us)
        vs = [self._vs[i] for i in _bit_positions(keep)]
        g = Graph(vs)
        adj = [0] * len(vs)
        for new_i, old_i in enumerate(_bit_positions(keep)):
            sub = self._adj[old_i] & keep
            acc = 0
            for new_j, old_j in enumerate(_bit_positions(keep)):
                if sub >> old_j & 1:
                    acc |= 1 << new_j
            adj[new_i] = acc
        g._adj = tuple(adj)
        return g

    def remove_closed_neighborhood(self, us: Iterable[int]) -> "Graph":
        """Induced subgraph on the vertices outside N[U]."""
        mask = self._label_mask(us)
        closed = mask
        for i in _bit_positions(mask):
            closed |= self._adj[i]
        keep = ((1 << len(self._vs)) - 1) & ~closed
        return self.induced_subgraph(self._labels(keep))

    # -- components ------------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        n = len(self._vs)
        seen = 0
        out = []
        for start in range(n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                for i in _bit_positions(frontier):
                    nxt |= self._adj[i]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(self._labels(comp))
        return out

    def component_count(self) -> int:
        if not self._vs:
            raise ValueError("component count of the empty-vertex graph is undefined")
        return len(self.components())

    # -- independent sets ------------------------------------------------

    def maximal_independent_sets(self) -> list[frozenset[int]]:
        """All inclusion-maximal independent sets, sorted lexicographically.

        These are the maximal cliques of the complement, enumerated with
        pivoting; the edgeless graph yields its full vertex set, and the
        empty-vertex graph yields the single empty set.
        """
        n = len(self._vs)
        if n == 0:
            return [frozenset()]
        full = (1 << n) - 1
        cadj = [full & ~a & ~(1 << i) for i, a in enumerate(self._adj)]
        out: list[int] = []

        def expand(r: int, p: int, x: int) -> None:
            if not p and not x:
                out.append(r)
                return
            pool = p | x
            pivot = max(_bit_positions(pool), key=lambda i: (p & cadj[i]).bit_count())
            for v in _bit_positions(p & ~cadj[pivot]):
                bit = 1 << v
                expand(r | bit, p & cadj[v], x & cadj[v])
                p &= ~bit
                x |= bit

        expand(0, full, 0)
        sets = [tuple(self._vs[i] for i in _bit_positions(m)) for m in out]
        return [frozenset(t) for t in sorted(sets)]

    def iter_independent_sets(self) -> Iterator[frozenset[int]]:
        """Every independent set (faces of the independence complex)."""
        for mask in _independent_masks(self._adj):
            yield self._labels(mask)

    # -- induced matchings -------------------------------------------------

    def induced_matching_number(self, cap: int | None = None) -> int:
        """Exact induced matching number, truncated at ``cap`` when given."""
        best, _ = self._induced_matching_search(cap, want_all=False, size=None)
        return best

    def induced_matchings_of_size(self, size: int) -> list[tuple[tuple[int, int], ...]]:
        _, found = self._induced_matching_search(None, want_all=True, size=size)
        return found

    def _induced_matching_search(self, cap, want_all, size):
        edges = self.edges()
        k = len(edges)
        conflict = [0] * k
        for a in range(k):
            u, v = edges[a]
            for b in range(a + 1, k):
                x, y = edges[b]
                if (
                    u in (x, y)
                    or v in (x, y)
                    or self.has_edge(u, x)
                    or self.has_edge(u, y)
                    or self.has_edge(v, x)
                    or self.has_edge(v, y)
                ):
                    conflict[a] |= 1 << b
                    conflict[b] |= 1 << a
        best = 0
        found: list[tuple[tuple[int, int], ...]] = []

        def walk(start: int, count: int, banned: int, chosen: tuple[int, ...]) -> None:
            nonlocal best
            if count > best:
                best = count
            if want_all and count == size:
                found.append(tuple(edges[i] for i in chosen))
                return
            if cap is not None and best >= cap:
                return
            for j in range(start, k):
                if banned >> j & 1:
                    continue
                if not want_all and count + (k - j) <= best:
                    break
                walk(j + 1, count + 1, banned | conflict[j], chosen + (j,))

        walk(0, 0, 0, ())
        if cap is not None:
            best = min(best, cap)
        return best, found

    # -- induced cycles ----------------------------------------------------

    def find_induced_cycle_at_least(
        self, m: int, node_budget: int = DEFAULT_NODE_BUDGET
    ) -> list[int] | None:
        """Some induced cycle on >= m vertices, or None.

        Exact search over induced paths anchored at their least vertex;
        raises BudgetExceededError when the node budget runs out before the
        search space is exhausted.
        """
        if m < 3:
            raise ValueError("cycle length must be at least 3")
        n = len(self._vs)
        adj = self._adj
        nodes = 0

        def grow(anchor: int, path: list[int], middle_block: int, used: int):
            nonlocal nodes
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError("induced-cycle search budget exceeded")
            last = path[-1]
            for w in _bit_positions(adj[last] & ~used):
                if w <= anchor or (middle_block >> w & 1):
                    continue
                if adj[anchor] >> w & 1:
                    if len(path) + 1 >= m:
                        return path + [w]
                    continue
                hit = grow(
                    anchor,
                    path + [w],
                    middle_block | adj[last],
                    used | (1 << w),
                )
                if hit is not None:
                    return hit
            return None

        for a in range(n):
            for b in _bit_positions(adj[a]):
                if b <= a:
                    continue
                hit = grow(a, [a, b], 0, (1 << a) | (1 << b))
                if hit is not None:
                    cycle = [self._vs[i] for i in hit]
                    assert self._is_induced_cycle(cycle)
                    return cycle
        return None

    def _is_induced_cycle(self, cycle: Sequence[int]) -> bool:
        k = len(cycle)
        if k < 3 or len(set(cycle)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j - i == 1 or (i == 0 and j == k - 1)
                if self.has_edge(cycle[i], cycle[j]) != consecutive:
                    return False
        return True

    def is_weakly_chordal(self, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
        """No induced cycle of length >= 5 in the graph or its complement."""
        return (
            self.find_induced_cycle_at_least(5, node_budget) is None
            and self.complement().find_induced_cycle_at_least(5, node_budget) is None
        )


def _independent_masks(adj: Sequence[int], within: int | None = None) -> list[int]:
    """All independent sets of the positions selected by ``within``, as masks."""
    if within is None:
        within = (1 << len(adj)) - 1
    out = [0]
    stack = [(0, within)]
    while stack:
        cur, cand = stack.pop()
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            new = cur | low
            out.append(new)
            stack.append((new, cand & ~adj[v]))
    return out


# -- strongly disjoint complete bipartite families -------------------------


@dataclass(frozen=True)
class BipartiteFamily:
    """Vertex-disjoint complete bipartite subgraphs threaded by a matching."""

    members: tuple[tuple[frozenset[int], frozenset[int]], ...]
    witness: tuple[tuple[int, int], ...]

    @property
    def score(self) -> int:
        return sum(len(a) + len(b) for a, b in self.members) - len(self.members)

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless the family invariants hold in ``g``."""
        if len(self.members) != len(self.witness):
            raise ValueError("one witness edge per member is required")
        seen: set[int] = set()
        for (side_a, side_b), (u, v) in zip(self.members, self.witness):
            if not side_a or not side_b or side_a & side_b:
                raise ValueError("member sides must be disjoint and nonempty")
            verts = side_a | side_b
            if verts & seen:
                raise ValueError("members must be pairwise vertex-disjoint")
            seen |= verts
            if not ((u in side_a and v in side_b) or (u in side_b and v in side_a)):
                raise ValueError("witness edge must cross its member's sides")
            for a in side_a:
                for b in side_b:
                    if not g.has_edge(a, b):
                        raise ValueError(f"member is not complete bipartite: missing ({a}, {b})")
        if not _is_induced_matching(g, self.witness):
            raise ValueError("witness edges must form an induced matching")


def _is_induced_matching(g: Graph, edges: Sequence[tuple[int, int]]) -> bool:
    ends = [x for e in edges for x in e]
    if len(set(ends)) != len(ends):
        return False
    for i, (u, v) in enumerate(edges):
        if not g.has_edge(u, v):
            return False
        for x, y in edges[i + 1 :]:
            if g.has_edge(u, x) or g.has_edge(u, y) or g.has_edge(v, x) or g.has_edge(v, y):
                return False
    return True


def max_bipartite_family_score(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, BipartiteFamily]:
    """Best total-vertices-minus-members score over strongly disjoint families.

    For weakly chordal graphs this equals the projective dimension of the
    quotient by the edge ideal.  Exact branch-and-bound around each induced
    matching; intended for small graphs.
    """
    if g.edge_count == 0:
        raise ValueError("a strongly disjoint family needs at least one edge")
    inm = g.induced_matching_number()
    best_score = -1
    best_family: BipartiteFamily | None = None
    nodes = 0
    for size in range(1, inm + 1):
        for matching in g.induced_matchings_of_size(size):
            score, family = _extend_family(g, matching, node_budget, _Counter())
            if score > best_score:
                best_score, best_family = score, family
    assert best_family is not None
    best_family.validate(g)
    return best_score, best_family


class _Counter:
    __slots__ = ("n",)

    def __init__(self) -> None:
        self.n = 0


def _extend_family(g: Graph, matching, node_budget, counter):
    taken = {x for e in matching for x in e}
    cands = [v for v in g.vertices if v not in taken]
    sides: list[list[set[int]]] = [[{u}, {v}] for u, v in matching]
    best_total = 2 * len(matching)
    best_sides = [tuple(frozenset(s) for s in pair) for pair in sides]

    def place(idx: int, total: int) -> None:
        nonlocal best_total, best_sides
        counter.n += 1
        if counter.n > node_budget:
            raise BudgetExceededError("bipartite-family search budget exceeded")
        if total > best_total:
            best_total = total
            best_sides = [tuple(frozenset(s) for s in pair) for pair in sides]
        if idx == len(cands) or total + (len(cands) - idx) <= best_total:
            return
        w = cands[idx]
        for pair in sides:
            for s in range(2):
                other = pair[1 - s]
                if all(g.has_edge(w, o) for o in other):
                    pair[s].add(w)
                    place(idx + 1, total + 1)
                    pair[s].remove(w)
        place(idx + 1, total)

    place(0, 2 * len(matching))
    members = tuple((a, b) for a, b in best_sides)
    family = BipartiteFamily(members=members, witness=tuple(matching))
    return best_total - len(matching), family
