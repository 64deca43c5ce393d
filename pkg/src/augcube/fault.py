"""Conditional edge-fault model for AQ_n.

Faulty edges are censused per canonical matching; a fault-light
spanning hypercube is then selected by choosing, per dimension, the
lighter of the hypercube and augmented matchings (with an exhaustive
scan over every full-rank selection as fallback), and even cycles of
every length are searched inside it.  Vertices left with only two
fault-free edges are handled separately by closing paths through them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .reciprocity import SpanningSubcube, SubcubeSelection, subcube_from_selection
from .search import find_cycle_of_length, find_path_of_length, search_budget
from .topology import (
    AUGMENTED,
    HYPERCUBE,
    Edge,
    EdgeClass,
    MatchingId,
    all_matchings,
    build_augmented_cube,
    classify_edge,
    edge,
)

ADMISSIBLE = "admissible"
DEG2_TRIPLE = "three-degree-two-vertices"
INADMISSIBLE = "inadmissible"


class RejectedInputError(ValueError):
    pass


class InvariantViolationError(RuntimeError):
    """A search exhausted a space the theory says is nonempty."""


class SearchBudgetExceededError(RuntimeError):
    pass


class IncompleteSpectrumError(RuntimeError):
    def __init__(self, missing: list[int], found: dict[int, list[int]]):
        super().__init__(f"no cycle found for even lengths {missing}")
        self.missing = missing
        self.found = found


@dataclass(frozen=True)
class FaultSet:
    n: int
    faulty: frozenset[Edge]

    def __post_init__(self):
        for e in self.faulty:
            u, v = e
            if u > v:
                raise RejectedInputError(f"edge {e} not in canonical order")
            if classify_edge(self.n, e) is None:
                raise RejectedInputError(f"{e} is not an edge of AQ_{self.n}")

    def __len__(self) -> int:
        return len(self.faulty)


def fault_set(n: int, edges) -> FaultSet:
    return FaultSet(n, frozenset(edge(u, v) for u, v in edges))


@dataclass
class FaultCensus:
    counts: dict[MatchingId, int]
    argmin: MatchingId
    min_count: int
    pigeonhole_forced: bool  # |F| <= 4n-8 forces some matching count <= 1


def free_degrees(n: int, F: FaultSet) -> list[int]:
    g = build_augmented_cube(n)
    deg = [g.degree()] * g.num_vertices
    for u, v in F.faulty:
        deg[u] -= 1
        deg[v] -= 1
    return deg


def conditional_model_ok(n: int, F: FaultSet) -> bool:
    """Every vertex keeps at least two fault-free incident edges."""
    return min(free_degrees(n, F)) >= 2


def matching_fault_census(F: FaultSet) -> FaultCensus:
    n = F.n
    counts = {m: 0 for m in all_matchings(n)}
    for e in F.faulty:
        counts[classify_edge(n, e)] += 1
    argmin = min(counts, key=lambda m: (counts[m], all_matchings(n).index(m)))
    min_count = counts[argmin]
    forced = len(F) <= 4 * n - 8 and min_count <= 1
    return FaultCensus(counts, argmin, min_count, forced)


@dataclass
class AdmissibilityVerdict:
    status: str  # ADMISSIBLE, DEG2_TRIPLE or INADMISSIBLE
    internal_faults: int
    reason: str = ""

    @property
    def usable(self) -> bool:
        return self.status != INADMISSIBLE


def _subcube_free_adjacency(sub: SpanningSubcube, F: FaultSet) -> dict[int, list[int]]:
    fault = F.faulty
    return {
        v: [w for w in sub.graph.neighbors(v) if edge(v, w) not in fault]
        for v in sub.graph.vertices()
    }


def subcube_fault_count(sub: SpanningSubcube, F: FaultSet) -> int:
    return sum(1 for e in F.faulty if sub.graph.has_edge(*e))


def subcube_admissibility(sub: SpanningSubcube, F: FaultSet) -> AdmissibilityVerdict:
    """Degree conditions for guaranteed even-cycle spectra inside a
    faulty spanning hypercube: minimum degree 2 and no nonadjacent
    degree-2 pair on a surviving 4-cycle.  Exactly three degree-2
    vertices is flagged as the (still usable) exception case."""
    internal = subcube_fault_count(sub, F)
    adj = _subcube_free_adjacency(sub, F)
    deg2 = [v for v, ws in adj.items() if len(ws) == 2]
    if any(len(ws) < 2 for ws in adj.values()):
        return AdmissibilityVerdict(INADMISSIBLE, internal, "vertex of degree below 2")
    if len(deg2) == 3:
        return AdmissibilityVerdict(DEG2_TRIPLE, internal)
    for i, u in enumerate(deg2):
        for v in deg2[i + 1 :]:
            if v in adj[u]:
                continue
            common = set(adj[u]) & set(adj[v])
            if len(common) >= 2:
                return AdmissibilityVerdict(
                    INADMISSIBLE,
                    internal,
                    f"nonadjacent degree-2 pair ({u}, {v}) on a 4-cycle",
                )
    return AdmissibilityVerdict(ADMISSIBLE, internal)


def _guided_selections(n: int, F: FaultSet) -> list[SubcubeSelection]:
    """Selection candidates: per dimension take the lighter of the two
    matchings, anchored on E_1; then single-dimension flips as repairs;
    then variants trading E_1 for a light augmented matching."""
    counts = matching_fault_census(F).counts
    base = [EdgeClass(HYPERCUBE, 1)]
    for j in range(2, n + 1):
        hyp, aug = EdgeClass(HYPERCUBE, j), EdgeClass(AUGMENTED, j)
        base.append(hyp if counts[hyp] <= counts[aug] else aug)
    cands = [SubcubeSelection(n, tuple(base))]
    for k in range(1, n):
        flipped = list(base)
        m = flipped[k]
        flipped[k] = EdgeClass(
            AUGMENTED if m.kind == HYPERCUBE else HYPERCUBE, m.dimension
        )
        cands.append(SubcubeSelection(n, tuple(flipped)))
    for j in range(2, n + 1):
        # swap the anchor: all hypercube dims 2..n plus one augmented matching
        chosen = tuple(EdgeClass(HYPERCUBE, i) for i in range(2, n + 1)) + (
            EdgeClass(AUGMENTED, j),
        )
        cands.append(SubcubeSelection(n, chosen))
    return cands


def select_fault_light_subcube(n: int, F: FaultSet) -> SpanningSubcube:
    sub, _ = select_fault_light_subcube_with_info(n, F)
    return sub


def select_fault_light_subcube_with_info(
    n: int, F: FaultSet
) -> tuple[SpanningSubcube, str]:
    """Returns a spanning hypercube with at most 3n-8 internal faults
    and a usable admissibility verdict, plus how it was found
    ("guided" or "scan")."""
    if n < 5:
        raise RejectedInputError(f"need n >= 5, got {n}")
    if len(F) > 4 * n - 8:
        raise RejectedInputError(f"|F| = {len(F)} exceeds 4n-8 = {4 * n - 8}")
    if min(free_degrees(n, F)) < 3:
        raise RejectedInputError("some vertex has fewer than 3 fault-free edges")
    cap = 3 * n - 8
    for sel in _guided_selections(n, F):
        if not sel.is_valid():
            continue
        sub = subcube_from_selection(sel)
        if subcube_fault_count(sub, F) > cap:
            continue
        if subcube_admissibility(sub, F).usable:
            return sub, "guided"
    # exhaustive fallback over every full-rank selection, lightest first
    from .gf2 import enumerate_cayley_generator_subsets
    from .topology import matching_for_generator

    scored = []
    for T in enumerate_cayley_generator_subsets(n):
        sel = SubcubeSelection(n, tuple(matching_for_generator(n, g) for g in T))
        sub = subcube_from_selection(sel)
        scored.append((subcube_fault_count(sub, F), sub))
    scored.sort(key=lambda t: t[0])
    for faults, sub in scored:
        if faults > cap:
            break
        if subcube_admissibility(sub, F).usable:
            return sub, "scan"
    raise InvariantViolationError(
        "no admissible fault-light subcube exists; contradicts the selection theory"
    )


def _augcube_free_adjacency(n: int, F: FaultSet) -> dict[int, list[int]]:
    g = build_augmented_cube(n)
    fault = F.faulty
    return {
        v: [w for w in g.neighbors(v) if edge(v, w) not in fault]
        for v in g.vertices()
    }


def _find_fault_free_4cycle(n: int, F: FaultSet) -> list[int]:
    adj = _augcube_free_adjacency(n, F)
    for a in sorted(adj):
        na = [x for x in adj[a] if x > a]
        for i, b in enumerate(na):
            for d in na[i + 1 :]:
                for c in adj[b]:
                    if c > a and c != d and c in adj[d]:
                        return [a, b, c, d]
    raise InvariantViolationError("no fault-free 4-cycle; contradicts the counting bound")


def _cycle_with_restarts(adj, length: int, budget: int):
    """Deterministic probe, then seeded randomized restarts, then one
    full-budget deterministic run.  Any exhausted result is a proof."""
    spanning = length == len(adj)
    probe = max(budget // (20 if spanning else 50), 10_000)
    res = find_cycle_of_length(adj, length, budget=probe)
    if res.found is not None or res.exhausted:
        return res
    for seed in range(60 if spanning else 20):
        res = find_cycle_of_length(adj, length, budget=probe, rng=Random(f"{length}:{seed}"))
        if res.found is not None:
            return res
    return find_cycle_of_length(adj, length, budget=budget)


def _find_even_cycle(length: int, narrow_adj, full_adj, budget: int):
    """Cheap probes on the narrowed graph, then on the whole fault-free
    graph, escalating budgets only when both keep missing."""
    for adj in (narrow_adj, full_adj):
        res = find_cycle_of_length(adj, length, budget=30_000)
        if res.found is not None:
            return res
        if res.exhausted:
            if adj is full_adj:
                return res  # proven absent everywhere
            continue
        for seed in range(6):
            res = find_cycle_of_length(
                adj, length, budget=60_000, rng=Random(f"{length}:{seed}"),
                degree_order=seed % 2 == 0,
            )
            if res.found is not None:
                return res
    for seed in range(6, 60):
        res = find_cycle_of_length(
            full_adj, length, budget=250_000, rng=Random(f"{length}:{seed}"),
            degree_order=seed % 2 == 0,
        )
        if res.found is not None:
            return res
    return find_cycle_of_length(full_adj, length, budget=budget)


def _path_with_restarts(adj, x: int, y: int, length: int, budget: int):
    probe = max(budget // 50, 10_000)
    res = find_path_of_length(adj, x, y, length, budget=probe)
    if res.found is not None or res.exhausted:
        return res
    for seed in range(20):
        res = find_path_of_length(adj, x, y, length, budget=probe, rng=Random(f"{length}:{seed}"))
        if res.found is not None:
            return res
    return find_path_of_length(adj, x, y, length, budget=budget)


def even_cycle_spectrum(
    n: int, F: FaultSet, budget: int | None = None
) -> dict[int, list[int]]:
    """A fault-free cycle of every even length 4..2^n in AQ_n - F.

    A vertex left with exactly two fault-free edges is routed around by
    deleting it and closing fault-free paths of every length through
    it; otherwise cycles are searched inside a fault-light spanning
    hypercube.  Raises IncompleteSpectrumError when a per-length search
    budget runs out."""
    if n < 5:
        raise RejectedInputError(f"need n >= 5, got {n}")
    if len(F) > 4 * n - 8:
        raise RejectedInputError(f"|F| = {len(F)} exceeds 4n-8 = {4 * n - 8}")
    if not conditional_model_ok(n, F):
        raise RejectedInputError("conditional fault model violated")
    if budget is None:
        budget = search_budget()

    degs = free_degrees(n, F)
    found: dict[int, list[int]] = {}
    missing: list[int] = []
    if min(degs) == 2:
        u = degs.index(2)
        found[4] = _find_fault_free_4cycle(n, F)
        adj = _augcube_free_adjacency(n, F)
        x, y = adj[u]
        # drop u and every remaining faulty edge, then close paths through u
        sub_adj = {
            v: [w for w in ws if w != u] for v, ws in adj.items() if v != u
        }
        for length in range(6, (1 << n) + 1, 2):
            res = _path_with_restarts(sub_adj, x, y, length - 2, budget)
            if res.found is None:
                missing.append(length)
            else:
                found[length] = [u] + res.found
    else:
        sub, _ = select_fault_light_subcube_with_info(n, F)
        adj = _subcube_free_adjacency(sub, F)
        full = _augcube_free_adjacency(n, F)
        for length in range(4, (1 << n) + 1, 2):
            res = _find_even_cycle(length, adj, full, budget)
            if res.found is None:
                missing.append(length)
            else:
                found[length] = res.found
    if missing:
        # the narrowed searches missed; any fault-free cycle in the
        # whole graph is just as good
        full = _augcube_free_adjacency(n, F)
        still = []
        for length in missing:
            res = _cycle_with_restarts(full, length, budget)
            if res.found is None:
                still.append(length)
            else:
                found[length] = res.found
        missing = still
    if missing:
        raise IncompleteSpectrumError(missing, found)
    return found


def nonhamiltonian_fixture(n: int) -> FaultSet:
    """A hypercube fault pattern with 2n-4 faults and no fault-free
    Hamiltonian cycle: two opposite vertices of a 4-cycle keep only
    their cycle edges."""
    if n < 3:
        raise RejectedInputError(f"need n >= 3, got {n}")
    u, v = 0, 3  # opposite corners of the 4-cycle 0-1-3-2
    edges = []
    for i in range(3, n + 1):
        g = 1 << (i - 1)
        edges.append(edge(u, u ^ g))
        edges.append(edge(v, v ^ g))
    return fault_set(n, edges)


def fault_free_path_of_length(n: int, A: frozenset, u: int, v: int, length: int) -> list[int]:
    """A u-v path of exactly the given length in AQ_n minus the vertices
    and edges of A, by bounded backtracking.  The admissible range is
    max(d(u,v)+2, 4) up to 2^n - f - 1 where f counts vertices in A."""
    blocked_vertices = {a for a in A if isinstance(a, int)}
    blocked_edges = {edge(*a) for a in A if not isinstance(a, int)}
    if len(A) > 2 * n - 4:
        raise RejectedInputError(f"|A| = {len(A)} exceeds 2n-4 = {2 * n - 4}")
    if u == v or u in blocked_vertices or v in blocked_vertices:
        raise RejectedInputError("endpoints must be distinct and outside A")
    g = build_augmented_cube(n)
    adj = {
        x: [
            w
            for w in g.neighbors(x)
            if w not in blocked_vertices and edge(x, w) not in blocked_edges
        ]
        for x in g.vertices()
        if x not in blocked_vertices
    }
    from .search import bfs_distances

    d = bfs_distances({x: [w for w in g.neighbors(x)] for x in g.vertices()}, u).get(v)
    f = len(blocked_vertices)
    lo, hi = max(d + 2, 4), (1 << n) - f - 1
    if not lo <= length <= hi:
        raise RejectedInputError(f"length {length} outside [{lo}, {hi}]")
    res = find_path_of_length(adj, u, v, length)
    if res.found is not None:
        return res.found
    if res.exhausted:
        raise InvariantViolationError(
            f"no ({u},{v})-path of length {length}; contradicts the path-range result"
        )
    raise SearchBudgetExceededError(f"budget exhausted for length {length}")


# ---------------------------------------------------------------------------
# adversarial fault generators

PATTERNS = ("random", "vertex", "matching", "path2", "square")


def generate_faults(
    n: int, count: int, pattern: str, rng: Random, min_free: int = 3
) -> FaultSet:
    """A fault set of the given size where every vertex keeps at least
    min_free fault-free edges.  Patterns seed characteristic shapes
    (vertex-concentrated, matching-concentrated, faulty 2-path,
    opposite-corner) and fill the remainder randomly."""
    if pattern not in PATTERNS:
        raise RejectedInputError(f"unknown pattern {pattern!r}")
    g = build_augmented_cube(n)
    deg = [g.degree()] * g.num_vertices
    chosen: set[Edge] = set()

    def try_add(e: Edge) -> bool:
        u, v = e
        if e in chosen or deg[u] <= min_free or deg[v] <= min_free:
            return False
        chosen.add(e)
        deg[u] -= 1
        deg[v] -= 1
        return True

    seeds: list[Edge] = []
    if pattern == "vertex":
        u = rng.randrange(g.num_vertices)
        v = u ^ ((1 << n) - 1)  # far corner
        for x in (u, v):
            seeds.extend(edge(x, w) for w in g.neighbors(x))
    elif pattern == "matching":
        mids = all_matchings(n)
        m = rng.choice([m for m in mids if m.kind == AUGMENTED])
        from .topology import canonical_matching

        seeds.extend(sorted(canonical_matching(n, m)))
    elif pattern == "path2":
        u = rng.randrange(g.num_vertices)
        v = rng.choice(g.neighbors(u))
        w = rng.choice([x for x in g.neighbors(v) if x != u])
        keep = {edge(u, v), edge(v, w)}
        for x in (u, v, w):
            seeds.extend(e for e in (edge(x, y) for y in g.neighbors(x)) if e not in keep)
    elif pattern == "square":
        u = rng.randrange(g.num_vertices)
        a, b = u ^ 1, u ^ 2
        v = u ^ 3
        keep = {edge(u, a), edge(u, b), edge(v, a), edge(v, b)}
        for x in (u, v):
            seeds.extend(e for e in (edge(x, y) for y in g.neighbors(x)) if e not in keep)
    rng.shuffle(seeds)
    for e in seeds:
        if len(chosen) >= count:
            break
        try_add(e)

    all_edges = g.edges()
    guard = 0
    while len(chosen) < count:
        try_add(rng.choice(all_edges))
        guard += 1
        if guard > 100_000:
            raise RuntimeError("fault generation stalled")
    return FaultSet(n, frozenset(chosen))


@dataclass
class TrialReport:
    seed: int
    pattern: str
    n: int
    fault_count: int
    conditional_ok: bool
    selection: list[str] = field(default_factory=list)
    selection_via: str = ""
    internal_faults: int = -1
    verdict: str = ""
    spectrum_complete: bool = False
    missing_lengths: list[int] = field(default_factory=list)


def run_fault_trial(
    n: int, faults: int, pattern: str, seed: int, budget: int | None = None
) -> TrialReport:
    """One seeded adversarial trial: generate faults, select a
    fault-light subcube, and extract the full even-cycle spectrum."""
    rng = Random(f"{n}:{pattern}:{seed}")
    F = generate_faults(n, faults, pattern, rng)
    report = TrialReport(
        seed=seed,
        pattern=pattern,
        n=n,
        fault_count=len(F),
        conditional_ok=conditional_model_ok(n, F),
    )
    sub, via = select_fault_light_subcube_with_info(n, F)
    verdict = subcube_admissibility(sub, F)
    from .gf2 import element_to_str

    report.selection = [element_to_str(g, n) for g in sub.selection.generators()]
    report.selection_via = via
    report.internal_faults = verdict.internal_faults
    report.verdict = verdict.status
    try:
        spectrum = even_cycle_spectrum(n, F, budget=budget)
        report.spectrum_complete = set(spectrum) == set(range(4, (1 << n) + 1, 2))
    except IncompleteSpectrumError as exc:
        report.spectrum_complete = False
        report.missing_lengths = exc.missing
    return report
