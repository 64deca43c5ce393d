"""Spanning hypercubes of AQ_n built from matching selections.

A selection of n canonical matchings whose generators form a GF(2)
basis induces an n-regular spanning subgraph isomorphic to Q_n.  Pairs
of such subcubes obtained by swapping hypercube matchings against
augmented ones intersect in exactly one perfect matching and cover all
of AQ_n; this is the reciprocity construction everything downstream
relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import rank_gf2, unit_vector
from .topology import (
    AUGMENTED,
    HYPERCUBE,
    CubeGraph,
    Edge,
    EdgeClass,
    MatchingId,
    build_augmented_cube,
    build_cayley,
    canonical_matching,
    isomorphism_witness,
)


class NotASubcubeError(ValueError):
    pass


class InvalidSplitError(ValueError):
    pass


@dataclass(frozen=True)
class SubcubeSelection:
    """A choice of n matchings with full-rank generators."""

    n: int
    chosen: tuple[MatchingId, ...]

    def __post_init__(self):
        if len(set(self.chosen)) != len(self.chosen):
            raise NotASubcubeError("repeated matching in selection")
        if len(self.chosen) != self.n:
            raise NotASubcubeError(f"need exactly {self.n} matchings")

    def generators(self) -> list[int]:
        return [m.generator() for m in self.chosen]

    def is_valid(self) -> bool:
        return rank_gf2(self.generators()) == self.n


@dataclass(frozen=True)
class SpanningSubcube:
    """A Q_n-isomorphic spanning subgraph of AQ_n plus its validated
    linear witness onto the standard hypercube."""

    selection: SubcubeSelection
    graph: CubeGraph
    witness: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.selection.n

    def edge_set(self) -> frozenset[Edge]:
        return self.graph.edge_set()


def subcube_from_selection(sel: SubcubeSelection) -> SpanningSubcube:
    """Build the edge-induced subgraph of the selection's matchings and
    validate its isomorphism onto Q_n on every edge."""
    gens = sel.generators()
    if rank_gf2(gens) != sel.n:
        raise NotASubcubeError("selection generators are rank-deficient")
    graph = build_cayley(sel.n, gens)
    units = [unit_vector(i) for i in range(1, sel.n + 1)]
    witness = isomorphism_witness(sel.n, gens, units)
    return SpanningSubcube(selection=sel, graph=graph, witness=tuple(witness))


def canonical_subcube_one(n: int) -> SpanningSubcube:
    """The spanning hypercube made of all hypercube matchings."""
    sel = SubcubeSelection(n, tuple(EdgeClass(HYPERCUBE, i) for i in range(1, n + 1)))
    return subcube_from_selection(sel)


def canonical_subcube_two(n: int) -> SpanningSubcube:
    """The spanning hypercube made of E_1 plus all augmented matchings."""
    chosen = (EdgeClass(HYPERCUBE, 1),) + tuple(EdgeClass(AUGMENTED, j) for j in range(2, n + 1))
    return subcube_from_selection(SubcubeSelection(n, chosen))


def reciprocal_pair(n: int, J: set[int]) -> tuple[SpanningSubcube, SpanningSubcube]:
    """Swap the matchings of the dimensions in J between the two
    canonical subcubes.  The members intersect in exactly the dimension-1
    hypercube matching and together cover E(AQ_n)."""
    if any(j < 2 or j > n for j in J):
        raise ValueError(f"J must be within [2, {n}]")
    first = [EdgeClass(HYPERCUBE, 1)]
    second = [EdgeClass(HYPERCUBE, 1)]
    for j in range(2, n + 1):
        if j in J:
            first.append(EdgeClass(AUGMENTED, j))
            second.append(EdgeClass(HYPERCUBE, j))
        else:
            first.append(EdgeClass(HYPERCUBE, j))
            second.append(EdgeClass(AUGMENTED, j))
    return (
        subcube_from_selection(SubcubeSelection(n, tuple(first))),
        subcube_from_selection(SubcubeSelection(n, tuple(second))),
    )


def reciprocal_pair_fixed_intersection(
    n: int, j: int, kind: str
) -> tuple[SpanningSubcube, SpanningSubcube]:
    """A pair of spanning subcubes whose edge sets intersect in exactly
    the requested matching: E_j for kind=hypercube, the dimension-j
    augmented matching otherwise."""
    if not 2 <= j <= n:
        raise ValueError(f"need 2 <= j <= n, got j={j}")
    # drop E_1 for the augmented matching of dimension j
    g1_chosen = tuple(EdgeClass(HYPERCUBE, i) for i in range(2, n + 1)) + (
        EdgeClass(AUGMENTED, j),
    )
    g1 = subcube_from_selection(SubcubeSelection(n, g1_chosen))
    if kind == HYPERCUBE:
        # partner: E_1 + augmented matchings, with dimension j swapped back
        g2_chosen = [EdgeClass(HYPERCUBE, 1)]
        for i in range(2, n + 1):
            g2_chosen.append(EdgeClass(HYPERCUBE, i) if i == j else EdgeClass(AUGMENTED, i))
        g2 = subcube_from_selection(SubcubeSelection(n, tuple(g2_chosen)))
        pair = (g1, g2)
        expected = canonical_matching(n, EdgeClass(HYPERCUBE, j))
    elif kind == AUGMENTED:
        pair = (canonical_subcube_two(n), g1)
        expected = canonical_matching(n, EdgeClass(AUGMENTED, j))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    inter = pair[0].edge_set() & pair[1].edge_set()
    if inter != expected:
        raise AssertionError("pair intersection is not the requested matching")
    return pair


@dataclass(frozen=True)
class SplitComponent:
    """One half of a subcube split along a chosen matching."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj


def split_along_matching(
    sub: SpanningSubcube, m: MatchingId
) -> tuple[SplitComponent, SplitComponent, dict[int, int]]:
    """Remove one chosen matching: the subcube falls apart into the two
    cosets of the index-2 subgroup spanned by the remaining generators,
    each Q_(n-1)-isomorphic.  The returned map pairs each vertex of the
    zero-side component with its matching partner and is an isomorphism
    between the halves.  Component 0 contains the all-zero vertex.
    """
    if m not in sub.selection.chosen:
        raise InvalidSplitError(f"{m} is not part of the selection")
    s = m.generator()
    rest = [g for g in sub.selection.generators() if g != s]
    # subgroup spanned by the remaining generators
    sub_elems = {0}
    for g in rest:
        sub_elems |= {x ^ g for x in sub_elems}
    n = sub.n
    if len(sub_elems) != 1 << (n - 1):
        raise InvalidSplitError("remaining generators do not span an index-2 subgroup")
    side0 = frozenset(sub_elems)
    side1 = frozenset(x ^ s for x in side0)
    edges0 = frozenset(e for g in rest for e in _generator_edges(side0, g))
    edges1 = frozenset(e for g in rest for e in _generator_edges(side1, g))
    cross = {v: v ^ s for v in side0}
    return SplitComponent(side0, edges0), SplitComponent(side1, edges1), cross


def _generator_edges(vertices: frozenset[int], g: int):
    for v in vertices:
        if v < v ^ g:
            yield (v, v ^ g)


def pair_union_is_whole(n: int, a: SpanningSubcube, b: SpanningSubcube) -> bool:
    return (a.edge_set() | b.edge_set()) == build_augmented_cube(n).edge_set()
