"""Facet-presented simplicial complexes and exact reduced homology.

Three degenerate states are kept distinct throughout: the void complex (no
facets at all), the irrelevant complex {0} whose only face is the empty
set, and everything else.  Homology is always reduced, i.e. computed from
the augmented chain complex including the empty face, so the irrelevant
complex has a one-dimensional group in degree -1; that is exactly the case
the local-cohomology bookkeeping downstream needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import BudgetExceededError
from .graphs import Graph, _bit_positions

DEFAULT_FACE_BUDGET = 2_000_000


class SimplicialComplex:
    """A complex presented by its facets (inclusion-maximal faces)."""

    __slots__ = ("_vs", "_pos", "_facets")

    def __init__(self, facets: Iterable[Iterable[int]], vertices: Iterable[int] | None = None):
        fsets = [frozenset(f) for f in facets]
        # reduce to the inclusion-maximal antichain
        fsets.sort(key=len, reverse=True)
        maximal: list[frozenset[int]] = []
        for f in fsets:
            if not any(f < g or f == g for g in maximal):
                maximal.append(f)
        if vertices is None:
            vs = sorted(set().union(*maximal)) if maximal else []
        else:
            vs = sorted(set(vertices))
            support = set().union(*maximal) if maximal else set()
            if not support <= set(vs):
                raise ValueError("facets use labels outside the vertex set")
        self._vs = tuple(vs)
        self._pos = {v: i for i, v in enumerate(vs)}
        self._facets = tuple(sorted(maximal, key=lambda f: tuple(sorted(f))))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vs

    @property
    def facets(self) -> tuple[frozenset[int], ...]:
        return self._facets

    @property
    def is_void(self) -> bool:
        return not self._facets

    @property
    def is_irrelevant(self) -> bool:
        """Whether the complex is {0}: the empty face is its only face."""
        return self._facets == (frozenset(),)

    @property
    def dim(self) -> int:
        """Dimension; -1 for {0}.  Undefined (error) for the void complex."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self._facets) - 1

    def is_face(self, f: Iterable[int]) -> bool:
        fs = frozenset(f)
        return any(fs <= g for g in self._facets)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        shown = [tuple(sorted(f)) for f in self._facets]
        return f"SimplicialComplex(facets={shown!r})"

    def _facet_masks(self) -> list[int]:
        out = []
        for f in self._facets:
            m = 0
            for v in f:
                m |= 1 << self._pos[v]
            out.append(m)
        return out

    def faces_by_dim(self, face_budget: int = DEFAULT_FACE_BUDGET) -> dict[int, list[int]]:
        """All faces as position masks, keyed by dimension (>= 0 only)."""
        if self.is_void:
            return {}
        return _downward_closure(self._facet_masks(), face_budget)

    def face_count(self, face_budget: int = DEFAULT_FACE_BUDGET) -> int:
        if self.is_void:
            return 0
        by_dim = self.faces_by_dim(face_budget)
        return 1 + sum(len(v) for v in by_dim.values())


def _downward_closure(facet_masks: Sequence[int], face_budget: int) -> dict[int, list[int]]:
    seen = set(facet_masks)
    if len(seen) > face_budget:
        raise BudgetExceededError(
            f"face enumeration exceeded the budget of {face_budget}"
        )
    stack = list(seen)
    while stack:
        m = stack.pop()
        for b in _bit_positions(m):
            child = m ^ (1 << b)
            if child not in seen:
                if len(seen) >= face_budget:
                    raise BudgetExceededError(
                        f"face enumeration exceeded the budget of {face_budget}"
                    )
                seen.add(child)
                stack.append(child)
    seen.discard(0)
    by_dim: dict[int, list[int]] = {}
    for m in seen:
        by_dim.setdefault(m.bit_count() - 1, []).append(m)
    for d, masks in by_dim.items():
        masks.sort(key=_mask_key)
    return by_dim


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(_bit_positions(mask))


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions per degree over a fixed field."""

    field: object
    dims: Mapping[int, int] = field(default_factory=dict)

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)

    def nonzero(self) -> dict[int, int]:
        return {d: v for d, v in sorted(self.dims.items()) if v}

    @property
    def total(self) -> int:
        return sum(self.dims.values())


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent sets of the graph (a flag complex)."""
    return SimplicialComplex(g.maximal_independent_sets(), vertices=g.vertices)


def f_vector_and_euler(cx: SimplicialComplex, face_budget: int = DEFAULT_FACE_BUDGET):
    """Face counts per dimension and their alternating sum."""
    if cx.is_void:
        raise ValueError("the void complex has no f-vector")
    by_dim = cx.faces_by_dim(face_budget)
    if not by_dim:
        return (), 0
    top = max(by_dim)
    f = tuple(len(by_dim.get(d, ())) for d in range(top + 1))
    chi = sum((-1) ** d * fd for d, fd in enumerate(f))
    return f, chi


def link(cx: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    """Complex of faces disjoint from ``f`` whose union with it is a face.

    Generated by the facets through ``f`` with ``f`` removed, so the result
    is {0} exactly when ``f`` is itself a facet.
    """
    fs = frozenset(f)
    if not cx.is_face(fs):
        raise ValueError(f"{sorted(fs)} is not a face")
    return SimplicialComplex([g - fs for g in cx.facets if fs <= g])


def degree_complex(g: Graph, sign: Sequence[int]) -> SimplicialComplex:
    """The complex a sign pattern selects from the independence complex.

    The pattern assigns -1, 0 or +1 to each vertex in label order.  If the
    nonzero support is not independent the result is void; otherwise the
    facets are the independence-complex facets through the support, with
    the negative part removed.  Only the sign pattern matters, which is why
    the argument is restricted to {-1, 0, +1}.
    """
    if len(sign) != g.n:
        raise ValueError(f"sign vector has length {len(sign)}, graph has {g.n} vertices")
    supp = set()
    negatives = set()
    for v, s in zip(g.vertices, sign):
        if s not in (-1, 0, 1):
            raise ValueError(f"sign entries must be -1, 0 or +1, got {s}")
        if s:
            supp.add(v)
        if s < 0:
            negatives.add(v)
    if not g.is_independent_set(supp):
        return SimplicialComplex([])
    facets = [f - negatives for f in g.maximal_independent_sets() if supp <= f]
    return SimplicialComplex(facets)


def reduced_homology(
    cx: SimplicialComplex,
    field: object = linalg.RATIONAL,
    face_budget: int = DEFAULT_FACE_BUDGET,
) -> HomologyProfile:
    """Reduced homology dimensions over the rationals or GF(p).

    Ranks of the boundary matrices are computed exactly; the profile maps
    every degree from -1 up to the complex dimension (void: empty map).
    """
    field = linalg.validate_field(field)
    if cx.is_void:
        return HomologyProfile(field, {})
    by_dim = cx.faces_by_dim(face_budget)
    return HomologyProfile(field, homology_dims_from_masks(by_dim, field))


def homology_dims_from_masks(by_dim: Mapping[int, list[int]], field: object) -> dict[int, int]:
    """Reduced homology from per-dimension face masks of a nonvoid complex.

    ``by_dim`` holds dimensions >= 0; the empty face is implicit.  The
    boundary of a simplex alternates signs starting positive at its
    smallest vertex.
    """
    if not by_dim:
        return {-1: 1}
    top = max(by_dim)
    ranks: dict[int, int] = {}
    for d in range(top + 1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, []) if d > 0 else [0]
        ranks[d] = _boundary_rank(lower, upper, field)
    dims: dict[int, int] = {-1: 1 - ranks.get(0, 0)}
    for d in range(top + 1):
        f_d = len(by_dim.get(d, ()))
        dims[d] = f_d - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return dims


def _boundary_rank(lower: Sequence[int], upper: Sequence[int], field: object) -> int:
    if not lower or not upper:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, m in enumerate(upper):
        for i, b in enumerate(_bit_positions(m)):
            rows[index[m ^ (1 << b)]][c] = 1 if i % 2 == 0 else -1
    return linalg.rank(rows, field)


def field_discrepancies(
    cx: SimplicialComplex,
    p: int = 2,
    face_budget: int = DEFAULT_FACE_BUDGET,
) -> list[tuple[int, int, int]]:
    """Degrees where rational and GF(p) homology dimensions differ.

    A nonempty result flags possible torsion; it is reported to the caller
    and never reconciled silently.
    """
    over_q = reduced_homology(cx, linalg.RATIONAL, face_budget)
    over_p = reduced_homology(cx, p, face_budget)
    degrees = set(over_q.dims) | set(over_p.dims)
    return [(d, over_q[d], over_p[d]) for d in sorted(degrees) if over_q[d] != over_p[d]]
