"""Bounded backtracking searches for cycles and paths.

All searches work on adjacency dicts (vertex -> neighbor list), count
node expansions against an explicit budget, and distinguish "proven
absent" from "budget ran out".  Neighbor order is taken from the
adjacency lists, so callers control determinism; an optional rng only
shuffles neighbor order for randomized restarts.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from random import Random

DEFAULT_BUDGET = 10_000_000


def search_budget(default: int = DEFAULT_BUDGET) -> int:
    env = os.environ.get("AUGCUBE_BUDGET")
    return int(env) if env else default


class BudgetExceeded(Exception):
    pass


@dataclass
class SearchResult:
    found: list[int] | None
    exhausted: bool  # True: the whole space was covered, absence is proven


def is_bipartite(adj: dict[int, list[int]]) -> bool:
    color: dict[int, int] = {}
    for s in adj:
        if s in color:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = color[v] ^ 1
                    q.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def bfs_distances(adj: dict[int, list[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    q = deque([source])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def find_hamiltonian_cycle(
    adj: dict[int, list[int]],
    budget: int | None = None,
    rng: Random | None = None,
) -> SearchResult:
    """Hamiltonian cycle through every vertex of adj, or proof of absence.

    DFS anchored at the smallest vertex with fewest-options-first
    neighbor ordering; rng shuffles ties for randomized restarts.
    """
    return find_cycle_of_length(adj, len(adj), budget=budget, rng=rng)


def find_cycle_of_length(
    adj: dict[int, list[int]],
    length: int,
    budget: int | None = None,
    rng: Random | None = None,
    degree_order: bool | None = None,
) -> SearchResult:
    """A simple cycle of exactly the given length, or proof of absence.

    Enumerates by anchor: every cycle is found from its smallest vertex,
    with all other cycle vertices above the anchor.
    """
    if budget is None:
        budget = search_budget()
    if length < 3 or length > len(adj):
        return SearchResult(None, True)
    if length % 2 == 1 and is_bipartite(adj):
        return SearchResult(None, True)
    remaining = [budget]
    spanning = length == len(adj)
    if spanning:
        # one anchor suffices; a minimum-degree vertex constrains best
        anchors = [min(adj, key=lambda v: (len(adj[v]), v))]
    else:
        anchors = sorted(adj)
    for anchor in anchors:
        try:
            cyc = _anchored_cycle_dfs(
                adj, anchor, length, remaining, rng, spanning, degree_order
            )
        except BudgetExceeded:
            return SearchResult(None, False)
        if cyc is not None:
            return SearchResult(cyc, True)
    return SearchResult(None, True)


def _anchored_cycle_dfs(
    adj: dict[int, list[int]],
    anchor: int,
    length: int,
    remaining: list[int],
    rng: Random | None,
    spanning: bool,
    degree_order: bool | None = None,
) -> list[int] | None:
    # default: fewest-options ordering for deterministic runs, pure
    # shuffle for randomized restarts
    if degree_order is None:
        degree_order = rng is None
    # non-spanning cycles are enumerated from their smallest vertex, so
    # only vertices above the anchor may appear; spanning cycles use all
    if spanning:
        allowed = set(adj)
    else:
        allowed = {v for v in adj if v > anchor}
        allowed.add(anchor)
    sub = {v: [w for w in adj[v] if w in allowed] for v in allowed}
    dist = bfs_distances(sub, anchor)
    parity = is_bipartite(sub)  # then walk length back to anchor fixes parity
    path = [anchor]
    on_path = {anchor}

    def degree_key(w: int) -> int:
        return sum(1 for x in sub[w] if x not in on_path)

    def dfs() -> list[int] | None:
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceeded
        v = path[-1]
        steps_left = length - len(path)
        if steps_left == 0:
            return list(path) if anchor in adj[v] else None
        # from the next vertex, the rest of the cycle (remaining path
        # edges plus the closing edge) walks back to the anchor in
        # exactly steps_left edges
        back = steps_left
        cands = [
            w
            for w in sub[v]
            if w not in on_path
            and dist.get(w, 1 << 30) <= back
            and not (parity and dist[w] % 2 != back % 2)
        ]
        if rng is not None:
            rng.shuffle(cands)
        if degree_order:
            cands.sort(key=degree_key)  # stable: shuffle only breaks ties
        for w in cands:
            path.append(w)
            on_path.add(w)
            got = dfs()
            if got is not None:
                return got
            path.pop()
            on_path.remove(w)
        return None

    return dfs()


def find_path_of_length(
    adj: dict[int, list[int]],
    u: int,
    v: int,
    length: int,
    budget: int | None = None,
    rng: Random | None = None,
    degree_order: bool = False,
) -> SearchResult:
    """A simple u-v path with exactly `length` edges, or proof of absence."""
    if budget is None:
        budget = search_budget()
    if u == v or u not in adj or v not in adj:
        return SearchResult(None, True)
    dist = bfs_distances(adj, v)
    parity = is_bipartite(adj)
    if parity and u in dist and dist[u] % 2 != length % 2:
        return SearchResult(None, True)
    remaining = [budget]
    path = [u]
    on_path = {u}

    def dfs() -> list[int] | None:
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceeded
        x = path[-1]
        steps_left = length - (len(path) - 1)
        if steps_left == 0:
            return list(path) if x == v else None
        cands = []
        for w in adj[x]:
            if w in on_path:
                continue
            if w == v and steps_left != 1:
                continue
            # from w there are steps_left - 1 edges left to reach v
            dw = dist.get(w, 1 << 30)
            if dw > steps_left - 1 or (parity and dw % 2 != (steps_left - 1) % 2):
                continue
            cands.append(w)
        if rng is not None:
            rng.shuffle(cands)
        if degree_order:
            cands.sort(key=lambda w: sum(1 for y in adj[w] if y not in on_path))
        for w in cands:
            path.append(w)
            on_path.add(w)
            got = dfs()
            if got is not None:
                return got
            path.pop()
            on_path.remove(w)
        return None

    try:
        got = dfs()
    except BudgetExceeded:
        return SearchResult(None, False)
    return SearchResult(got, True)
