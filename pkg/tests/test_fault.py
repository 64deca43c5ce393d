from random import Random

import pytest

from augcube.fault import (
    ADMISSIBLE,
    DEG2_TRIPLE,
    INADMISSIBLE,
    PATTERNS,
    FaultSet,
    RejectedInputError,
    conditional_model_ok,
    even_cycle_spectrum,
    fault_free_path_of_length,
    fault_set,
    free_degrees,
    generate_faults,
    matching_fault_census,
    nonhamiltonian_fixture,
    run_fault_trial,
    select_fault_light_subcube,
    select_fault_light_subcube_with_info,
    subcube_admissibility,
    subcube_fault_count,
)
from augcube.oracle import ham_cycle_search
from augcube.reciprocity import canonical_subcube_one
from augcube.topology import build_augmented_cube, edge


def test_fault_set_rejects_non_edges():
    with pytest.raises(RejectedInputError):
        fault_set(3, [(0, 5)])  # 0 and 5 are not adjacent
    with pytest.raises(RejectedInputError):
        FaultSet(3, frozenset({(1, 0)}))  # wrong endpoint order


def test_conditional_model():
    assert conditional_model_ok(4, fault_set(4, []))
    g = build_augmented_cube(4)
    heavy = fault_set(4, [edge(0, w) for w in g.neighbors(0)][:6])
    assert not conditional_model_ok(4, heavy)
    light = fault_set(4, [edge(0, w) for w in g.neighbors(0)][:5])
    assert conditional_model_ok(4, light)
    assert free_degrees(4, light)[0] == 2


def test_census_conserves_counts_and_pigeonholes():
    for n in (3, 4, 5, 6):
        rng = Random(n)
        for _ in range(20):
            F = generate_faults(n, 4 * n - 8, "random", rng)
            census = matching_fault_census(F)
            assert sum(census.counts.values()) == len(F)
            assert census.min_count == census.counts[census.argmin]
            # 4n-8 faults over 2n-1 matchings leave one nearly empty
            assert census.pigeonhole_forced and census.min_count <= 1


def test_admissibility_no_faults():
    sub = canonical_subcube_one(5)
    verdict = subcube_admissibility(sub, fault_set(5, []))
    assert verdict.status == ADMISSIBLE
    assert verdict.internal_faults == 0 and verdict.usable


def test_admissibility_rejects_blocked_square():
    # two opposite corners of a 4-cycle each kept at degree 2: any
    # Hamiltonian cycle would need all four square edges, a contradiction
    F = nonhamiltonian_fixture(5)
    sub = canonical_subcube_one(5)
    verdict = subcube_admissibility(sub, F)
    assert verdict.status == INADMISSIBLE and not verdict.usable
    assert verdict.internal_faults == len(F) == 2 * 5 - 4


def test_admissibility_flags_three_degree_two_vertices():
    faults = []
    for x in (0, 7, 28):  # pairwise nonadjacent in Q_5
        for i in (3, 4, 5):
            faults.append(edge(x, x ^ (1 << (i - 1))))
    F = fault_set(5, faults)
    sub = canonical_subcube_one(5)
    verdict = subcube_admissibility(sub, F)
    assert verdict.status == DEG2_TRIPLE and verdict.usable


def test_selection_no_faults_is_all_hypercube():
    sub = select_fault_light_subcube(5, fault_set(5, []))
    assert sub.selection.generators() == [1, 2, 4, 8, 16]


def test_selection_avoids_concentrated_faults():
    # all faults on augmented edges: the all-hypercube subcube is clean
    g = build_augmented_cube(5)
    aug = [e for e in g.edges() if bin(e[0] ^ e[1]).count("1") > 1]
    F = fault_set(5, aug[: 4 * 5 - 8])
    sub, via = select_fault_light_subcube_with_info(5, F)
    assert subcube_fault_count(sub, F) == 0
    assert via == "guided"


def test_selection_preconditions():
    with pytest.raises(RejectedInputError):
        select_fault_light_subcube(4, fault_set(4, []))
    g = build_augmented_cube(5)
    too_many = fault_set(5, g.edges()[: 4 * 5 - 7])
    with pytest.raises(RejectedInputError):
        select_fault_light_subcube(5, too_many)


def test_selection_respects_internal_cap():
    rng = Random(99)
    for _ in range(10):
        F = generate_faults(5, 12, "vertex", rng)
        sub = select_fault_light_subcube(5, F)
        assert subcube_fault_count(sub, F) <= 3 * 5 - 8
        assert subcube_admissibility(sub, F).usable


def test_spectrum_complete_no_faults():
    spectrum = even_cycle_spectrum(5, fault_set(5, []))
    assert set(spectrum) == set(range(4, 33, 2))
    g = build_augmented_cube(5)
    for length, c in spectrum.items():
        assert len(c) == length and len(set(c)) == length
        for i in range(length):
            assert g.has_edge(c[i], c[(i + 1) % length])


def test_spectrum_degree_two_dispatch():
    # strip vertex 0 of AQ_5 down to exactly two fault-free edges; the
    # spectrum must route every cycle longer than 4 through those two
    g = build_augmented_cube(5)
    F = fault_set(5, [edge(0, w) for w in g.neighbors(0)][:7])
    assert free_degrees(5, F)[0] == 2
    spectrum = even_cycle_spectrum(5, F)
    assert set(spectrum) == set(range(4, 33, 2))
    for length, c in spectrum.items():
        assert len(c) == length
        for i in range(length):
            u, v = c[i], c[(i + 1) % length]
            assert g.has_edge(u, v) and edge(u, v) not in F.faulty


def test_spectrum_cycles_avoid_faults():
    rng = Random(5)
    F = generate_faults(5, 12, "random", rng)
    spectrum = even_cycle_spectrum(5, F)
    g = build_augmented_cube(5)
    assert set(spectrum) == set(range(4, 33, 2))
    for length, c in spectrum.items():
        for i in range(length):
            u, v = c[i], c[(i + 1) % length]
            assert g.has_edge(u, v) and edge(u, v) not in F.faulty


def test_nonhamiltonian_fixture_is_proven():
    for n in (3, 4):
        F = nonhamiltonian_fixture(n)
        assert len(F) == 2 * n - 4
        from augcube.topology import build_hypercube

        res = ham_cycle_search(build_hypercube(n), F.faulty)
        assert res.found is None and res.exhausted


def test_fault_free_path_examples():
    p = fault_free_path_of_length(3, frozenset(), 0, 1, 5)
    assert p[0] == 0 and p[-1] == 1 and len(p) == 6 and len(set(p)) == 6
    # blocked vertex shrinks the admissible range
    p = fault_free_path_of_length(3, frozenset({5}), 0, 1, 6)
    assert 5 not in p and len(p) == 7


def test_fault_free_path_range_rejections():
    with pytest.raises(RejectedInputError):
        fault_free_path_of_length(3, frozenset(), 0, 1, 3)  # below max(d+2, 4)
    with pytest.raises(RejectedInputError):
        fault_free_path_of_length(3, frozenset(), 0, 1, 8)  # above 2^n - 1
    with pytest.raises(RejectedInputError):
        fault_free_path_of_length(3, frozenset({1}), 0, 1, 4)  # endpoint in A
    with pytest.raises(RejectedInputError):
        fault_free_path_of_length(3, frozenset(range(5)), 0, 7, 4)  # |A| too big


def test_generate_faults_patterns():
    for pattern in PATTERNS:
        F = generate_faults(5, 12, pattern, Random(f"t:{pattern}"))
        assert len(F) == 12
        assert min(free_degrees(5, F)) >= 3
    with pytest.raises(RejectedInputError):
        generate_faults(5, 12, "bogus", Random(0))


def test_generate_faults_deterministic():
    a = generate_faults(6, 16, "vertex", Random("x"))
    b = generate_faults(6, 16, "vertex", Random("x"))
    assert a.faulty == b.faulty


def test_run_fault_trial_smoke():
    for pattern in ("random", "matching"):
        rep = run_fault_trial(5, 12, pattern, seed=0)
        assert rep.conditional_ok and rep.spectrum_complete
        assert rep.fault_count == 12 and not rep.missing_lengths
        assert rep.internal_faults <= 3 * 5 - 8
        assert rep.verdict in (ADMISSIBLE, DEG2_TRIPLE)
        assert len(rep.selection) == 5 and all(len(s) == 5 for s in rep.selection)
