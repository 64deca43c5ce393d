"""Edge-disjoint Hamiltonian cycles of hypercubes and augmented cubes.

The hypercube is decomposed into floor(n/2) edge-disjoint Hamiltonian
cycles: even dimensions by seeded backtracking over candidate cycles
(verified afterwards), odd dimensions by doubling the even decomposition
across one extra dimension.  The augmented cube then gets n-1 (odd n)
or n-2 (even n) cycles by decomposing the zero-side halves of its two
canonical spanning subcubes and stitching mirrored cycle pairs together
through dimension-1 edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .gf2 import InvalidDimensionError, low_prefix
from .search import find_hamiltonian_cycle
from .topology import CubeGraph, Edge, build_augmented_cube, build_hypercube, edge


class SelectionFailedError(RuntimeError):
    """Merge-edge selection impossible; violates the counting guarantee."""


class InvalidEdgeError(ValueError):
    pass


CycleSequence = list[int]


@dataclass
class EdhcBundle:
    host: CubeGraph
    cycles: list[CycleSequence]


@dataclass
class VerificationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)


def cycle_edges(c: CycleSequence) -> list[Edge]:
    return [edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def _adjacency(g: CubeGraph) -> dict[int, list[int]]:
    return {v: g.neighbors(v) for v in g.vertices()}


def _remove_cycle(adj: dict[int, list[int]], c: CycleSequence) -> dict[int, list[int]]:
    drop = {edge(*e) for e in cycle_edges(c)}
    return {
        v: [w for w in ws if edge(v, w) not in drop]
        for v, ws in adj.items()
    }


def _is_single_cycle(adj: dict[int, list[int]]) -> CycleSequence | None:
    """If adj is one simple cycle through every vertex, return it."""
    if any(len(ws) != 2 for ws in adj.values()):
        return None
    start = min(adj)
    cyc = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
    return cyc if len(cyc) == len(adj) else None


def hypercube_ham_decomposition(n: int) -> EdhcBundle:
    """floor(n/2) pairwise edge-disjoint Hamiltonian cycles of Q_n;
    for even n they cover E(Q_n) exactly.  Deterministic for fixed n."""
    if n < 2:
        raise InvalidDimensionError(f"need n >= 2, got {n}")
    host = build_hypercube(n)
    if n == 2:
        return EdhcBundle(host, [[0, 1, 3, 2]])
    if n % 2 == 1:
        return _double_decomposition(n, hypercube_ham_decomposition(n - 1))
    bundle = _search_even_decomposition(n, host)
    report = verify_edhc_bundle(host, bundle)
    if not report.ok:
        raise AssertionError(f"decomposition failed verification: {report.problems}")
    return bundle


def _search_even_decomposition(n: int, host: CubeGraph) -> EdhcBundle:
    """Seeded backtracking: peel Hamiltonian cycles until the leftover
    2-regular graph is itself one Hamiltonian cycle.  Each level keeps
    its cycle and retries only the deeper levels, so a bad final split
    does not throw earlier work away."""
    want = n // 2
    adj0 = _adjacency(host)

    def extend(adj: dict[int, list[int]], depth: int, seed_base: tuple) -> list[CycleSequence] | None:
        if depth == want - 1:
            last = _is_single_cycle(adj)
            return [last] if last is not None else None
        for seed in range(40):
            rng = Random(f"{seed_base}:{seed}")
            res = find_hamiltonian_cycle(adj, budget=200_000, rng=rng)
            if res.found is None:
                continue
            rest = extend(_remove_cycle(adj, res.found), depth + 1, (*seed_base, seed))
            if rest is not None:
                return [res.found] + rest
        return None

    cycles = extend(adj0, 0, (n,))
    if cycles is None:
        raise SelectionFailedError(f"no Hamiltonian decomposition found for Q_{n}")
    return EdhcBundle(host, cycles)


def _double_decomposition(n: int, lower: EdhcBundle) -> EdhcBundle:
    """Lift the decomposition of Q_(n-1) into Q_n by mirroring each
    cycle into the top copy and stitching the pair through two
    dimension-n edges."""
    top = 1 << (n - 1)
    cross = lambda v: v ^ top  # noqa: E731
    merge_edges = select_merge_edges(lower.cycles, forbidden=set())
    cycles = [
        merge_across(c, cross, e) for c, e in zip(lower.cycles, merge_edges)
    ]
    return EdhcBundle(build_hypercube(n), cycles)


def select_merge_edges(
    cycles: list[CycleSequence], forbidden: set[int]
) -> list[Edge]:
    """One edge per cycle, scanned greedily in traversal order, such
    that the chosen edges are pairwise endpoint-disjoint and avoid the
    forbidden vertices."""
    used: set[int] = set(forbidden)
    picked: list[Edge] = []
    for c in cycles:
        for u, v in cycle_edges(c):
            if u not in used and v not in used:
                picked.append((u, v))
                used.update((u, v))
                break
        else:
            raise SelectionFailedError("no endpoint-disjoint merge edge available")
    return picked


def merge_across(c: CycleSequence, cross, e: Edge) -> CycleSequence:
    """Join a cycle with its image under a vertex bijection onto a
    disjoint copy: drop edge (u, v) from the cycle and the mirrored edge
    from the copy, and reconnect through (u, cross(u)) and (v, cross(v)).
    The result visits both vertex sets and has twice the length."""
    u, v = e
    k = len(c)
    pos = {x: i for i, x in enumerate(c)}
    if u not in pos or v not in pos:
        raise InvalidEdgeError(f"edge {e} is not on the cycle")
    i, j = pos[u], pos[v]
    if (j - i) % k == 1:
        path = c[j:] + c[: j]  # v ... u
    elif (i - j) % k == 1:
        path = (c[i:] + c[: i])[::-1]  # reverse of u ... v
    else:
        raise InvalidEdgeError(f"{e} is not an edge of the cycle")
    # path runs v .. u; mirrored reverse runs cross(u) .. cross(v)
    return path + [cross(x) for x in reversed(path)]


def augcube_edhcs(n: int) -> EdhcBundle:
    """m edge-disjoint Hamiltonian cycles of AQ_n: m = n-1 for odd n,
    n-2 for even n.  Small cases by bounded search; n >= 5 by splitting
    the two canonical spanning subcubes along dimension 1, decomposing
    their zero-side halves, and stitching mirrored pairs with pairwise
    disjoint dimension-1 edges."""
    if n < 3:
        raise InvalidDimensionError(f"need n >= 3, got {n}")
    host = build_augmented_cube(n)
    if n in (3, 4):
        return _small_augcube_edhcs(n, host)

    half = hypercube_ham_decomposition(n - 1)
    flip = lambda v: v ^ 1  # noqa: E731

    # zero-side half of the all-hypercube subcube: shift labels up one bit
    c_cycles = [[v << 1 for v in c] for c in half.cycles]
    c_edges = select_merge_edges(c_cycles, forbidden=set())
    merged_c = [merge_across(c, flip, e) for c, e in zip(c_cycles, c_edges)]

    # zero-side half of the augmented subcube: image of the prefix basis
    prefixes = [low_prefix(j) for j in range(2, n + 1)]

    def embed(w: int) -> int:
        out = 0
        for k in range(n - 1):
            if (w >> k) & 1:
                out ^= prefixes[k]
        return out

    d_cycles = [[embed(v) for v in c] for c in half.cycles]
    # both endpoints of every dimension-1 edge already consumed
    forbidden = {y for e in c_edges for x in e for y in (x, flip(x))}
    d_edges = select_merge_edges(d_cycles, forbidden=forbidden)
    merged_d = [merge_across(c, flip, e) for c, e in zip(d_cycles, d_edges)]

    return EdhcBundle(host, merged_c + merged_d)


def _small_augcube_edhcs(n: int, host: CubeGraph) -> EdhcBundle:
    """Two EDHCs in AQ_3 / AQ_4 by seeded backtracking search."""
    adj0 = _adjacency(host)
    for seed in range(100):
        rng = Random(f"{n}:{seed}")
        first = find_hamiltonian_cycle(adj0, budget=2_000_000, rng=rng)
        if first.found is None:
            continue
        adj1 = _remove_cycle(adj0, first.found)
        second = find_hamiltonian_cycle(adj1, budget=2_000_000, rng=rng)
        if second.found is not None:
            return EdhcBundle(host, [first.found, second.found])
    raise SelectionFailedError(f"no EDHC pair found in AQ_{n}")


def verify_edhc_bundle(host: CubeGraph, b: EdhcBundle) -> VerificationReport:
    """Check every cycle is Hamiltonian in host and all cycles are
    pairwise edge-disjoint; report the first few violations."""
    problems: list[str] = []
    nv = host.num_vertices
    seen_edges: dict[Edge, int] = {}
    for idx, c in enumerate(b.cycles):
        if len(c) != nv or len(set(c)) != nv:
            problems.append(f"cycle {idx} is not spanning ({len(c)} of {nv} vertices)")
            continue
        for u, v in cycle_edges(c):
            if not host.has_edge(u, v):
                problems.append(f"cycle {idx} uses non-edge ({u}, {v})")
            e = edge(u, v)
            if e in seen_edges:
                problems.append(f"edge {e} shared by cycles {seen_edges[e]} and {idx}")
            else:
                seen_edges[e] = idx
    return VerificationReport(ok=not problems, problems=problems[:10])
