from random import Random

from augcube.search import (
    bfs_distances,
    find_cycle_of_length,
    find_hamiltonian_cycle,
    find_path_of_length,
    is_bipartite,
)
from augcube.topology import build_augmented_cube, build_hypercube


def _adj(g):
    return {v: g.neighbors(v) for v in g.vertices()}


def _cycle_adj(k):
    return {i: [(i - 1) % k, (i + 1) % k] for i in range(k)}


def test_bfs_distances():
    adj = _cycle_adj(6)
    d = bfs_distances(adj, 0)
    assert d == {0: 0, 1: 1, 5: 1, 2: 2, 4: 2, 3: 3}


def test_is_bipartite():
    assert is_bipartite(_adj(build_hypercube(3)))
    assert not is_bipartite(_adj(build_augmented_cube(3)))


def test_cycle_search_exact_length():
    adj = _cycle_adj(6)
    assert find_cycle_of_length(adj, 6).found is not None
    for bad in (3, 4, 5):
        res = find_cycle_of_length(adj, bad)
        assert res.found is None and res.exhausted


def test_no_odd_cycles_in_bipartite():
    adj = _adj(build_hypercube(4))
    for odd in (3, 5, 7):
        res = find_cycle_of_length(adj, odd)
        assert res.found is None and res.exhausted


def test_hamiltonian_cycle_of_hypercube():
    for n in (2, 3, 4):
        adj = _adj(build_hypercube(n))
        res = find_hamiltonian_cycle(adj)
        c = res.found
        assert c is not None and len(c) == 1 << n and len(set(c)) == len(c)
        for i in range(len(c)):
            assert bin(c[i] ^ c[(i + 1) % len(c)]).count("1") == 1


def test_budget_exhaustion_is_flagged():
    adj = _adj(build_hypercube(5))
    res = find_hamiltonian_cycle(adj, budget=5)
    assert res.found is None and not res.exhausted


def test_randomized_restart_is_deterministic_per_seed():
    adj = _adj(build_augmented_cube(3))
    a = find_cycle_of_length(adj, 6, rng=Random(7)).found
    b = find_cycle_of_length(adj, 6, rng=Random(7)).found
    assert a == b


def test_path_of_exact_length():
    adj = _adj(build_hypercube(3))
    for target, length in ((1, 1), (7, 3), (7, 5), (7, 7)):
        res = find_path_of_length(adj, 0, target, length)
        p = res.found
        assert p is not None and len(p) == length + 1
        assert p[0] == 0 and len(set(p)) == len(p)
    # parity: no even-length path between opposite corners of a cube
    res = find_path_of_length(adj, 0, 7, 4)
    assert res.found is None and res.exhausted
