from itertools import combinations

import numpy as np
import pytest

from lowdense.generators import path_graph, star_graph
from lowdense.igraph import IntersectionGraph, build_intersection_graph
from lowdense.localsearch import (MAXIMIZE, MINIMIZE, SearchProblem, division_approx_packing, local_search,
                                  verify_local_optimality)
from lowdense.oracles import CapExceeded, exact_max_feasible
from lowdense.problems import DominationInstance, make_domination_problem, make_independent_set_problem

from conftest import disk_chain, random_disks


def brute_local_opt(p, S, t):
    """Independent check: compare against every feasible set within distance t."""
    S = frozenset(S)
    for T in (frozenset(c) for r in range(len(p.ground) + 1) for c in combinations(p.ground, r)):
        if len(S ^ T) <= t and p.better(len(T), len(S)) and p.accepts(T):
            return False
    return True


def test_p3_independent_set_t1():
    g = build_intersection_graph(disk_chain(3))
    tr = local_search(make_independent_set_problem(g), 1)
    assert tr.solution == frozenset({0, 2})
    assert [s[1] for s in tr.steps] == [(0,), (2,)]


def test_star_domination_t1():
    p = make_domination_problem(DominationInstance(star_graph(5), range(6), range(6)))
    tr = local_search(p, 1)
    assert tr.solution == frozenset({5})


def test_empty_ground_set():
    p = SearchProblem(0, MAXIMIZE, lambda S: True)
    tr = local_search(p, 2)
    assert tr.solution == frozenset() and tr.rounds == 0


def test_trace_is_monotone_and_bounded():
    rng = np.random.default_rng(1)
    for _ in range(30):
        g = build_intersection_graph(random_disks(rng, int(rng.integers(2, 12))))
        for p in (make_independent_set_problem(g),
                  make_domination_problem(DominationInstance(g, range(g.n), range(g.n)))):
            tr = local_search(p, 2)
            sizes = [len(p.initial)] + [s[2] for s in tr.steps]
            assert all(p.better(b, a) for a, b in zip(sizes, sizes[1:]))
            assert tr.rounds <= g.n
            assert p.accepts(tr.solution)
            assert verify_local_optimality(p, tr.solution, 2)[0]
            assert brute_local_opt(p, tr.solution, 2)


def test_verify_finds_witness():
    g = IntersectionGraph(3, [[], [], []])
    p = make_independent_set_problem(g)
    ok, wit = verify_local_optimality(p, frozenset(), 1)
    assert not ok and wit == ((), (0,))


def test_verify_agrees_with_brute_force_on_random_sets():
    rng = np.random.default_rng(2)
    for _ in range(100):
        g = build_intersection_graph(random_disks(rng, int(rng.integers(2, 9))))
        p = make_independent_set_problem(g)
        S = frozenset()
        for v in rng.permutation(g.n).tolist():
            if p.accepts(S | {v}) and rng.random() < 0.6:
                S = S | {v}
        t = int(rng.integers(1, 4))
        assert verify_local_optimality(p, S, t)[0] == brute_local_opt(p, S, t)


def test_budget_flags_incomplete():
    g = IntersectionGraph(10, [[]] * 10)
    tr = local_search(make_independent_set_problem(g), 1, budget=3)
    assert not tr.complete and len(tr.solution) == 3


def test_determinism():
    g = build_intersection_graph(disk_chain(8))
    a = local_search(make_independent_set_problem(g), 3)
    b = local_search(make_independent_set_problem(g), 3)
    assert a.steps == b.steps


def test_initial_must_be_feasible():
    with pytest.raises(ValueError):
        SearchProblem(2, MINIMIZE, lambda S: len(S) == 2, initial=frozenset({0}))


def test_division_packing_examples():
    far = [Ball for Ball in disk_chain(6, gap=3.0)]
    g = build_intersection_graph(far)
    assert division_approx_packing(g, make_independent_set_problem(g).feasible, 2, seed=0) == frozenset(range(6))
    p5 = build_intersection_graph(disk_chain(5))
    assert division_approx_packing(p5, make_independent_set_problem(p5).feasible, 5, seed=0) == \
        frozenset({0, 2, 4})


def test_division_packing_loss_bounded_by_excess():
    g = build_intersection_graph(disk_chain(5))
    feas = make_independent_set_problem(g).feasible
    for seed in range(20):
        sol, div = division_approx_packing(g, feas, 2, seed=seed, with_division=True)
        assert feas(sol)
        assert len(sol) >= 3 - 2 * div.excess


def test_mergeable_union_over_interiors_is_feasible():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = build_intersection_graph(random_disks(rng, 40))
        p = make_independent_set_problem(g)
        sol = division_approx_packing(g, p.feasible, 8, seed=int(rng.integers(100)))
        assert p.feasible(sol)


def test_division_packing_cap():
    g = build_intersection_graph(disk_chain(30))
    with pytest.raises(CapExceeded):
        division_approx_packing(g, make_independent_set_problem(g).feasible, 30, cap=24)
