"""Independent brute-force checks at desk scale.

Everything here is deliberately naive: exhaustive enumeration, direct
counting, and plain backtracking, so results can be trusted against the
constructive modules they cross-check.
"""

from __future__ import annotations

from itertools import combinations

from .search import SearchResult, find_hamiltonian_cycle, find_path_of_length
from .topology import CubeGraph, Edge, build_augmented_cube, build_hypercube, edge


class OutOfDeskScaleError(ValueError):
    pass


def augmented_cube_recursive(n: int) -> frozenset[Edge]:
    """Edge set of AQ_n built from the doubling recursion: two copies of
    AQ_(n-1), plus the dimension-n hypercube matching (equal low bits)
    and the dimension-n augmented matching (all low bits flipped)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return frozenset({(0, 1)})
    prev = augmented_cube_recursive(n - 1)
    top = 1 << (n - 1)
    edges = set(prev) | {(u | top, v | top) for u, v in prev}
    mask = top - 1
    for u in range(top):
        edges.add(edge(u, u | top))
        if n >= 2:
            edges.add(edge(u, (u ^ mask) | top))
    return frozenset(edges)


def load_golden_rows() -> list[frozenset[Edge]]:
    """The shipped table of claimed Q_3-isomorphic spanning subgraphs of
    AQ_3, one canonical edge set per row (duplicates preserved)."""
    import json
    from importlib import resources

    rows = json.loads(
        resources.files("augcube.data").joinpath("aq3_subcubes.json").read_text()
    )
    return [frozenset(edge(u, v) for u, v in r) for r in rows]


def _degree_table(n: int, edges: tuple[Edge, ...]) -> list[int]:
    deg = [0] * (1 << n)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def enumerate_qn_spanning_subgraphs(n: int) -> list[frozenset[Edge]]:
    """All spanning n-regular subgraphs of AQ_n isomorphic to Q_n, by
    filtering every n*2^(n-1)-edge subset for regularity and then for
    isomorphism.  Deterministic order; n in {2, 3} only."""
    if n not in (2, 3):
        raise OutOfDeskScaleError("exhaustive subgraph census only runs at n = 2 or 3")
    host_edges = build_augmented_cube(n).edges()
    want = n << (n - 1)
    reference = build_hypercube(n)
    ref_adj = {v: sorted(reference.neighbors(v)) for v in reference.vertices()}
    out = []
    for subset in combinations(host_edges, want):
        if any(d != n for d in _degree_table(n, subset)):
            continue
        adj: dict[int, list[int]] = {v: [] for v in range(1 << n)}
        for u, v in subset:
            adj[u].append(v)
            adj[v].append(u)
        if graph_isomorphic_small(adj, ref_adj)[0]:
            out.append(frozenset(subset))
    return out


def graph_isomorphic_small(
    g: dict[int, list[int]], h: dict[int, list[int]]
) -> tuple[bool, dict[int, int] | None]:
    """Backtracking isomorphism test with degree pruning; on success the
    witness bijection is returned, already checked edge-for-edge."""
    if len(g) != len(h):
        return False, None
    gdeg = {v: len(ws) for v, ws in g.items()}
    hdeg = {v: len(ws) for v, ws in h.items()}
    if sorted(gdeg.values()) != sorted(hdeg.values()):
        return False, None
    gv = sorted(g, key=lambda v: (-gdeg[v], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(gv):
            return True
        v = gv[i]
        for w in sorted(h):
            if w in used or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for x in g[v]:
                if x in mapping and mapping[x] not in h[w]:
                    ok = False
                    break
            if ok:
                # mapped non-neighbors must stay non-neighbors
                for x, y in mapping.items():
                    if (x in g[v]) != (y in h[w]):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    if not extend(0):
        return False, None
    for v, ws in g.items():
        for x in ws:
            if mapping[x] not in h[mapping[v]]:
                raise AssertionError("isomorphism witness failed validation")
    return True, dict(mapping)


def count_4cycles(g: CubeGraph) -> int:
    """Exact number of 4-cycles, each counted once: ordered as
    (a, b, c, d) with a the minimum and b < d."""
    total = 0
    for a in g.vertices():
        na = [x for x in g.neighbors(a) if x > a]
        for i, b in enumerate(na):
            for d in na[i + 1 :]:
                for c in g.neighbors(b):
                    if c > a and c != d and c != a and g.has_edge(c, d):
                        total += 1
    return total


def per_edge_4cycles(g: CubeGraph, e: Edge) -> int:
    """Number of 4-cycles through a given edge."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{e} is not an edge")
    count = 0
    for x in g.neighbors(u):
        if x == v:
            continue
        for y in g.neighbors(v):
            if y != u and y != x and g.has_edge(x, y):
                count += 1
    return count


def ham_cycle_search(
    g: CubeGraph, F: frozenset[Edge] = frozenset(), budget: int | None = None
) -> SearchResult:
    """Hamiltonian cycle of g avoiding the faulty edges F."""
    fault = {edge(*e) for e in F}
    adj = {
        v: [w for w in g.neighbors(v) if edge(v, w) not in fault]
        for v in g.vertices()
    }
    return find_hamiltonian_cycle(adj, budget=budget)


def path_spectrum_search(
    g: CubeGraph,
    A: frozenset,
    u: int,
    v: int,
    budget: int | None = None,
) -> set[int]:
    """All lengths of simple u-v paths avoiding the vertices and edges
    of A, by one bounded backtracking search per candidate length."""
    blocked_vertices = {a for a in A if isinstance(a, int)}
    blocked_edges = {edge(*a) for a in A if not isinstance(a, int)}
    adj = {
        x: [
            w
            for w in g.neighbors(x)
            if w not in blocked_vertices and edge(x, w) not in blocked_edges
        ]
        for x in g.vertices()
        if x not in blocked_vertices
    }
    top = g.num_vertices - len(blocked_vertices) - 1
    achievable = set()
    for length in range(1, top + 1):
        res = find_path_of_length(adj, u, v, length, budget=budget)
        if res.found is not None:
            achievable.add(length)
    return achievable
