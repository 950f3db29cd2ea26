from itertools import combinations

import numpy as np
import pytest

from lowdense.generators import cycle_graph, gen_hitting_hardness, path_graph, star_graph, gen_cover_hardness
from lowdense.geometry import Ball, Triangle2
from lowdense.igraph import IntersectionGraph, build_intersection_graph
from lowdense.oracles import exact_max_feasible, exact_min_feasible, max_independent_set_bb
from lowdense.problems import (DominationInstance, SetSystemInstance, abstract_set_cover, cover_set_system,
                               domination_feasible_bruteforce, hitting_set_system, hitting_set_to_domination,
                               make_density_packing_problem, make_domination_problem,
                               make_independent_set_problem, make_shallow_coverage_problem,
                               set_cover_to_domination, vertex_cover_via_subdivision)

from conftest import random_disks, random_graph, random_triangles_and_points


def test_independent_set_examples():
    g = IntersectionGraph(4, [[]] * 4)
    assert make_independent_set_problem(g).feasible(frozenset(range(4)))
    k3 = IntersectionGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert len(exact_max_feasible(make_independent_set_problem(k3))) == 1
    rng = np.random.default_rng(0)
    for _ in range(30):
        g = build_intersection_graph(random_disks(rng, int(rng.integers(2, 19))))
        assert len(exact_max_feasible(make_independent_set_problem(g))) == len(max_independent_set_bb(g))


def test_density_packing():
    disjoint = [Ball([3.0 * i, 0], 1) for i in range(4)]
    assert make_density_packing_problem(disjoint, 1).feasible(frozenset(range(4)))
    concentric = [Ball([0, 0], r) for r in (1, 2, 3)]
    assert len(exact_max_feasible(make_density_packing_problem(concentric, 1))) == 1
    assert len(exact_max_feasible(make_density_packing_problem(concentric, 2))) == 2
    rng = np.random.default_rng(1)
    for _ in range(20):
        objs = random_disks(rng, int(rng.integers(2, 12)), rmax=2.0)
        p = make_density_packing_problem(objs, 2)
        best = exact_max_feasible(p)
        # brute force: the proxy of the chosen subset is at most 2
        from lowdense.igraph import pairwise_density_proxy
        assert pairwise_density_proxy([objs[i] for i in sorted(best)]) <= 2


def test_shallow_coverage():
    objs = [Ball([0, 0], 1), Ball([1, 0], 1), Ball([10, 0], 1)]
    pts = np.array([[0.5, 0.0]])
    p0 = make_shallow_coverage_problem(objs, pts, 0)
    assert exact_max_feasible(p0) == frozenset({2})
    assert exact_max_feasible(make_shallow_coverage_problem(objs, pts, 3)) == frozenset(range(3))
    assert len(exact_max_feasible(make_shallow_coverage_problem(objs, pts, 1))) == 2


def test_domination_examples():
    p = make_domination_problem(DominationInstance(star_graph(4), range(5), range(5)))
    assert exact_min_feasible(p) == frozenset({4})
    p5 = make_domination_problem(DominationInstance(path_graph(5), range(5), range(5)))
    assert len(exact_min_feasible(p5)) == 2


def test_c6_demand_two():
    inst = DominationInstance(cycle_graph(6), range(6), range(6), demand={v: 2 for v in range(6)})
    for r in range(7):
        for S in combinations(range(6), r):
            assert inst.dominates(S) == domination_feasible_bruteforce(inst, S)
    assert len(exact_min_feasible(make_domination_problem(inst))) == 4


def test_domination_checker_matches_recount():
    rng = np.random.default_rng(2)
    for _ in range(1000):
        n = int(rng.integers(2, 9))
        g = random_graph(rng, n, p=0.35)
        D = [v for v in range(n) if rng.random() < 0.8] or [0]
        reach = {v: int(rng.integers(1, 3)) for v in range(n)}
        demand = {v: 1 for v in range(n)}
        try:
            inst = DominationInstance(g, D, range(n), demand, reach)
        except ValueError:
            continue
        S = [v for v in D if rng.random() < 0.5]
        assert inst.dominates(S) == domination_feasible_bruteforce(inst, S)


def test_infeasible_initial_raises():
    g = IntersectionGraph(2, [[], []])
    with pytest.raises(ValueError, match="vertex 1"):
        DominationInstance(g, [0], [0, 1])


def test_connected_filter():
    inst = DominationInstance(path_graph(5), range(5), range(5), connected=True)
    p = make_domination_problem(inst)
    best = exact_min_feasible(p)
    assert len(best) == 3 and inst.induces_connected(best)
    assert inst.shortest_paths_within_D().ok


def test_hitting_reduction_examples():
    tris = [Triangle2([0, 0], [2, 0], [0, 2]), Triangle2([0, 0], [-2, 0], [0, -2])]
    inst = hitting_set_to_domination(tris, [[0.0, 0.0], [0.5, 0.5]])
    assert len(exact_min_feasible(make_domination_problem(inst))) == 1
    with pytest.raises(ValueError):
        hitting_set_to_domination(tris, [[5.0, 5.0]])
    cert = gen_hitting_hardness(cycle_graph(4))
    inst = hitting_set_to_domination(cert.objects, cert.points)
    assert len(exact_min_feasible(make_domination_problem(inst))) == 2


def test_cover_reduction_examples():
    big = Triangle2([-5, -5], [5, -5], [0, 5])
    pts = [[0.0, 0.0], [1.0, -1.0]]
    inst = set_cover_to_domination([big, Triangle2([0, 0], [0.1, 0], [0, 0.1])], pts)
    assert len(exact_min_feasible(make_domination_problem(inst))) == 1
    with pytest.raises(ValueError):
        set_cover_to_domination([Triangle2([0, 0], [0.1, 0], [0, 0.1])], [[3.0, 3.0]])
    cert = gen_cover_hardness(path_graph(3))
    assert cert.system.sets == [(0,), (0, 1), (1,)]
    inst = set_cover_to_domination(cert.objects, cert.points)
    assert len(exact_min_feasible(make_domination_problem(inst))) == 1


def test_vertex_cover_subdivision_examples():
    def opt(g):
        return len(exact_min_feasible(make_domination_problem(vertex_cover_via_subdivision(g))))
    assert opt(path_graph(2)) == 1
    assert opt(cycle_graph(4)) == 2
    assert opt(IntersectionGraph(3, [[], [], []])) == 0


def test_abstract_set_cover():
    with pytest.raises(ValueError):
        abstract_set_cover(SetSystemInstance(3, [[0], [1]]))
    assert len(exact_min_feasible(abstract_set_cover(SetSystemInstance(3, [[0, 1, 2]])))) == 1
    M = SetSystemInstance(3, [[0, 2], [1]]).incidence_matrix()
    assert M.tolist() == [[True, False, True], [False, True, False]]


def test_set_systems_from_geometry():
    rng = np.random.default_rng(3)
    tris, pts = random_triangles_and_points(rng, 5, 6)
    hs = hitting_set_system(tris, pts)
    cs = cover_set_system(tris, pts)
    assert hs.universe == 5 and cs.universe == 6
    assert (hs.incidence_matrix() == cs.incidence_matrix().T).all()


def test_hereditary_and_mergeable_contracts():
    rng = np.random.default_rng(4)
    for _ in range(100):
        objs = random_disks(rng, 12)
        g = build_intersection_graph(objs)
        pts = rng.uniform(0, 6, size=(5, 2))
        for p in (make_independent_set_problem(g), make_density_packing_problem(objs, 2, g=g),
                  make_shallow_coverage_problem(objs, pts, 1)):
            S = frozenset()
            for v in rng.permutation(12).tolist():
                if p.feasible(S | {v}):
                    S = S | {v}
            sub = frozenset(v for v in S if rng.random() < 0.5)
            assert p.feasible(sub)
        # mergeable: feasible sets with no edge between them unite to a feasible set
        p = make_independent_set_problem(g)
        A, B = set(), set()
        for v in range(g.n):
            if not g.neighbor_set(v) & A and p.feasible(frozenset(A | {v})):
                A.add(v)
        for v in range(g.n):
            if v not in A and not g.neighbor_set(v) & (A | B):
                B.add(v)
        assert p.feasible(frozenset(A)) and p.feasible(frozenset(B))
        assert p.feasible(frozenset(A | B))
