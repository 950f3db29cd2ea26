from itertools import combinations

import numpy as np
import pytest

from lowdense.division import Division, build_division, psi_for_epsilon, validate_division
from lowdense.generators import gen_random_disks
from lowdense.geometry import Ball
from lowdense.igraph import IntersectionGraph, build_intersection_graph

from conftest import disk_chain, random_disks


def pairwise_separated(g, clusters):
    """Direct check of the definition: no edge between C - C' and C' - C, for all pairs."""
    for A, B in combinations(clusters, 2):
        a, b = A - B, B - A
        if any(g.has_edge(u, v) for u in a for v in b):
            return False
    return True


def test_isolated_disks_psi_one():
    objs = [Ball([5.0 * i, 0], 1) for i in range(6)]
    g = build_intersection_graph(objs)
    div = build_division(g, 1, seed=0)
    assert sorted(map(sorted, div.clusters)) == [[i] for i in range(6)]
    assert div.excess == 0


def test_p5_psi_three():
    g = build_intersection_graph(disk_chain(5))
    for seed in range(30):
        div = build_division(g, 3, seed=seed)
        assert validate_division(g, div).ok
        assert div.psi <= 3
        assert div.excess <= 2


def test_psi_at_least_n_gives_one_cluster():
    g = build_intersection_graph(disk_chain(7))
    div = build_division(g, 7, seed=1)
    assert div.clusters == [frozenset(range(7))] and div.excess == 0


def test_validator_finds_violations():
    g = IntersectionGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])  # C4
    bad = Division.from_clusters([{0, 1}, {2, 3}, {1, 2}, {0, 3}])
    rep = validate_division(g, bad)
    assert not rep.ok and any(label == "separated" for label, _ in rep.failures)
    missing = Division.from_clusters([{0, 1}, {1, 2}], psi=2)
    rep = validate_division(g, missing)
    assert any(label == "cover" for label, _ in rep.failures)
    good = Division.from_clusters([{0, 1, 2, 3}])
    assert validate_division(g, good).ok


def test_validator_matches_pairwise_definition():
    rng = np.random.default_rng(5)
    for _ in range(300):
        n = int(rng.integers(2, 8))
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.4]
        g = IntersectionGraph.from_edges(n, edges)
        clusters = [set(np.flatnonzero(rng.random(n) < 0.5).tolist()) for _ in range(int(rng.integers(1, 4)))]
        clusters = [c for c in clusters if c] or [set(range(n))]
        div = Division.from_clusters(clusters, psi=n)
        rep = validate_division(g, div)
        sep_ok = not any(label == "separated" for label, _ in rep.failures)
        assert sep_ok == pairwise_separated(g, div.clusters)


def test_build_is_valid_and_pairwise_separated():
    rng = np.random.default_rng(6)
    for _ in range(40):
        n = int(rng.integers(5, 60))
        g = build_intersection_graph(random_disks(rng, n, side=1.2 * np.sqrt(n)))
        psi = int(rng.integers(1, n + 1))
        div = build_division(g, psi, seed=int(rng.integers(1 << 30)))
        assert validate_division(g, div).ok
        assert pairwise_separated(g, div.clusters)


def test_psi_for_epsilon():
    assert psi_for_epsilon(1, 1, 2, K=1) == 1
    assert psi_for_epsilon(2, 0.5, 2, K=1) == 8
    with pytest.raises(ValueError):
        psi_for_epsilon(0.5, 0.5, 2)
    with pytest.raises(ValueError):
        psi_for_epsilon(2, 0, 2)


def test_excess_shrinks_with_psi():
    g = build_intersection_graph(gen_random_disks(1500, 2, seed=3))
    med = [np.median([build_division(g, psi, seed=s).excess for s in range(20)])
           for psi in (16, 64, 256)]
    assert med[0] >= med[1] >= med[2]


def test_division_determinism():
    g = build_intersection_graph(gen_random_disks(400, 2, seed=3))
    a, b = build_division(g, 30, seed=4), build_division(g, 30, seed=4)
    assert a.clusters == b.clusters


def test_needs_embedding():
    with pytest.raises(ValueError):
        build_division(IntersectionGraph(2, [[], []]), 1)
