"""Concrete cube graphs: hypercube, augmented cube, and Cayley subgraphs.

Vertices are ints 0..2^n-1.  Edges are stored canonically as (u, v)
with u < v.  A graph's neighbor lists follow the generator order, which
keeps every traversal deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import (
    InvalidDimensionError,
    apply_linear,
    element_to_str,
    invert_basis,
    low_prefix,
    rank_gf2,
    standard_generators,
    unit_vector,
)

HYPERCUBE = "hypercube"
AUGMENTED = "augmented"

Edge = tuple[int, int]


class InvalidInputError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class EdgeClass:
    """Kind and dimension of an augmented-cube edge.

    Hypercube edges of dimension i flip bit i; augmented edges of
    dimension j flip all of bits 1..j (j >= 2).  The same pair also
    identifies one of the 2n-1 canonical perfect matchings, so it
    doubles as a matching id.
    """

    kind: str
    dimension: int

    def generator(self) -> int:
        if self.kind == HYPERCUBE:
            return unit_vector(self.dimension)
        return low_prefix(self.dimension)

    def label(self) -> str:
        if self.kind == HYPERCUBE:
            return f"E{self.dimension}"
        return f"E<={self.dimension}"


MatchingId = EdgeClass


def all_matchings(n: int) -> list[MatchingId]:
    """The 2n-1 canonical matching ids in canonical generator order."""
    return [EdgeClass(HYPERCUBE, i) for i in range(1, n + 1)] + [
        EdgeClass(AUGMENTED, j) for j in range(2, n + 1)
    ]


def matching_for_generator(n: int, g: int) -> MatchingId:
    for m in all_matchings(n):
        if m.generator() == g:
            return m
    raise InvalidInputError(f"{g} is not a canonical generator for n={n}")


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidInputError("self-loop")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CubeGraph:
    """A Cayley graph over GF(2)^n: (u, v) adjacent iff u ^ v is a generator."""

    n: int
    generators: tuple[int, ...]
    kind: str = "Cayley"

    @property
    def num_vertices(self) -> int:
        return 1 << self.n

    def vertices(self) -> range:
        return range(1 << self.n)

    def neighbors(self, v: int) -> list[int]:
        return [v ^ g for g in self.generators]

    def has_edge(self, u: int, v: int) -> bool:
        return (u ^ v) in self.generators and u != v

    def edges(self) -> list[Edge]:
        out = []
        for g in self.generators:
            for v in self.vertices():
                if v < v ^ g:
                    out.append((v, v ^ g))
        out.sort()
        return out

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def degree(self) -> int:
        return len(self.generators)

    def label(self, v: int) -> str:
        return element_to_str(v, self.n)


def build_hypercube(n: int) -> CubeGraph:
    """Q_n: the n-regular cube on 2^n vertices."""
    if n < 1:
        raise InvalidDimensionError(f"need n >= 1, got {n}")
    gens = tuple(unit_vector(i) for i in range(1, n + 1))
    return CubeGraph(n=n, generators=gens, kind="Q")


def build_augmented_cube(n: int) -> CubeGraph:
    """AQ_n: Q_n plus the augmented matchings; (2n-1)-regular."""
    if n < 1:
        raise InvalidDimensionError(f"need n >= 1, got {n}")
    if n == 1:
        return CubeGraph(n=1, generators=(1,), kind="AQ")
    return CubeGraph(n=n, generators=tuple(standard_generators(n)), kind="AQ")


def build_cayley(n: int, T: list[int]) -> CubeGraph:
    """Cay(GF(2)^n, T); connected iff T has full rank, otherwise it falls
    apart into 2^(n - rank) isomorphic components."""
    if any(not 0 < t < (1 << n) for t in T):
        raise InvalidInputError("generators must be nonzero n-bit vectors")
    if len(set(T)) != len(T):
        raise InvalidInputError("duplicate generators")
    return CubeGraph(n=n, generators=tuple(T), kind="Cayley")


def components(g: CubeGraph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest member."""
    seen = [False] * g.num_vertices
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def classify_edge(n: int, e: Edge) -> EdgeClass | None:
    """Classify an AQ_n edge by its XOR pattern; None for non-edges."""
    u, v = e
    if not (0 <= u < (1 << n) and 0 <= v < (1 << n)):
        raise InvalidInputError("labels wider than n bits")
    d = u ^ v
    if d == 0:
        return None
    if d & (d - 1) == 0:
        return EdgeClass(HYPERCUBE, d.bit_length())
    if d == low_prefix(d.bit_length()) and d.bit_length() >= 2:
        return EdgeClass(AUGMENTED, d.bit_length())
    return None


def canonical_matching(n: int, mid: MatchingId) -> frozenset[Edge]:
    """All 2^(n-1) edges (g, s*g) for the matching's generator s."""
    if mid not in all_matchings(n):
        raise InvalidInputError(f"{mid} is not valid for n={n}")
    s = mid.generator()
    return frozenset((v, v ^ s) for v in range(1 << n) if v < v ^ s)


def isomorphism_witness(n: int, T_from: list[int], T_to: list[int]) -> list[int]:
    """The unique linear map taking T_from[k] to T_to[k] for each k,
    returned as unit-vector images and validated edge-for-edge as an
    isomorphism from Cay(GF(2)^n, T_from) onto Cay(GF(2)^n, T_to)."""
    if len(T_from) != len(T_to) or len(T_from) != n:
        raise InvalidInputError("generator lists must both have size n")
    if rank_gf2(T_from) != n or rank_gf2(T_to) != n:
        raise InvalidInputError("not a basis of GF(2)^n")
    inv = invert_basis(T_from, n)  # sends T_from[k] to e_{k+1}
    # compose with the map sending e_{k+1} to T_to[k]
    M = [0] * n
    for i in range(n):
        coords = inv[i]
        img = 0
        k = 0
        while coords:
            if coords & 1:
                img ^= T_to[k]
            coords >>= 1
            k += 1
        M[i] = img
    g_from = build_cayley(n, T_from)
    g_to = build_cayley(n, T_to)
    for u, v in g_from.edges():
        if not g_to.has_edge(apply_linear(M, u), apply_linear(M, v)):
            raise AssertionError("witness failed edge validation")
    return M
