"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""
import time

import numpy as np
import pytest

from lowdense.cli import fit_exponent
from lowdense.division import build_division, psi_for_epsilon, validate_division
from lowdense.generators import (all_graphs, connected_subcubic_graphs, cycle_graph, gen_cover_hardness,
                                 gen_hitting_hardness, gen_random_disks, is_complete, is_odd_cycle, path_graph,
                                 star_graph, verify_certificate)
from lowdense.geometry import PackedObjects, Triangle2
from lowdense.igraph import build_intersection_graph
from lowdense.localsearch import division_approx_packing, local_search, verify_local_optimality
from lowdense.oracles import exact_max_feasible, exact_min_feasible, exact_vertex_cover
from lowdense.packing import ShallowPacking, flower_decomposition, scoop_packing, verify_packing
from lowdense.problems import (DominationInstance, abstract_set_cover, hitting_set_system, hitting_set_to_domination,
                               make_domination_problem, make_independent_set_problem,
                               vertex_cover_via_subdivision)
from lowdense.separator import separate_packed

from conftest import random_disks, random_graph


@pytest.fixture
def verdict(capsys):
    def emit(name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def separator_runs():
    objs = gen_random_disks(8192, 2, seed=1)
    packed = PackedObjects(objs)
    idx = np.arange(len(objs))
    runs = []
    for k in (64, 256, 1024, 4096):
        for s in range(30):
            t0 = time.perf_counter()
            res = separate_packed(packed, idx, k, np.random.default_rng(s))
            runs.append((k, len(res.crossing), len(res.inside), time.perf_counter() - t0))
    return runs


def test_1_separator_scaling(separator_runs, verdict):
    ks = sorted({r[0] for r in separator_runs})
    med = [float(np.median([r[1] for r in separator_runs if r[0] == k])) for k in ks]
    e = fit_exponent(ks, med)
    slowest = max(r[3] for r in separator_runs)
    ok = 0.35 <= e <= 0.65 and slowest < 2.0
    verdict("1 separator scaling", ok,
            f"exponent {e:.3f} (want [0.35, 0.65]); medians {dict(zip(ks, med))}; slowest run {slowest:.2f}s")


def test_2_separator_balance(separator_runs, verdict):
    bad = [(k, c, i) for k, c, i, _ in separator_runs if not k - c <= i <= 64 * k]
    verdict("2 separator balance", not bad,
            f"{len(separator_runs) - len(bad)}/{len(separator_runs)} runs with k-|crossing| <= |inside| <= 64k"
            + (f"; first bad (k, crossing, inside) = {bad[0]}" if bad else ""))


def test_3_division_validity(verdict):
    rng = np.random.default_rng(3)
    failures = []
    for trial in range(1000):
        n = int(rng.integers(2, 120))
        if trial % 2:
            objs = random_disks(rng, n, side=float(rng.uniform(0.8, 2.0)) * np.sqrt(n))
        else:
            objs = gen_random_disks(n, float(rng.integers(1, 5)), seed=int(rng.integers(1 << 30)))
        g = build_intersection_graph(objs)
        psi, seed = int(rng.integers(1, n + 1)), int(rng.integers(1 << 30))
        rep = validate_division(g, build_division(g, psi, seed=seed))
        if not rep.ok:
            failures.append((trial, rep.failures[0]))
    excess = {}
    for eps in (0.5, 0.25, 0.1):
        psi = psi_for_epsilon(2, eps, 2)
        for corpus in range(3):
            g = build_intersection_graph(gen_random_disks(4096, 2, seed=100 + corpus))
            div = build_division(g, psi, seed=corpus)
            if not validate_division(g, div).ok:
                failures.append((f"eps={eps} corpus={corpus}", "invalid"))
            excess[eps] = max(excess.get(eps, 0.0), div.excess / g.n)
    over = {eps: x for eps, x in excess.items() if x > eps}
    verdict("3 division validity", not failures and not over,
            f"{1000 - sum(isinstance(f[0], int) for f in failures)}/1000 fuzzed divisions valid; "
            f"worst excess/n {({e: round(x, 4) for e, x in excess.items()})}"
            + (f"; first failure {failures[0]}" if failures else ""))


def test_4_local_search_domination(verdict):
    bad, worst, count = [], 1.0, 0
    for g in connected_subcubic_graphs(8, 1):
        count += 1
        p = make_domination_problem(DominationInstance(g, range(g.n), range(g.n)))
        sol = local_search(p, 3).solution
        if not p.accepts(sol) or not verify_local_optimality(p, sol, 3)[0]:
            bad.append(sorted(g.edges()))
            continue
        worst = max(worst, len(sol) / len(exact_min_feasible(p)))
    families = [star_graph(k) for k in range(1, 8)] + [path_graph(n) for n in range(1, 9)] + \
               [cycle_graph(n) for n in range(3, 9)]
    not_opt = []
    for g in families:
        p = make_domination_problem(DominationInstance(g, range(g.n), range(g.n)))
        if len(local_search(p, 3).solution) != len(exact_min_feasible(p)):
            not_opt.append((g.n, sorted(g.edges())))
    verdict("4 local search correctness", not bad and not not_opt,
            f"{count} graphs feasible and 3-locally optimal: {not bad}; worst ratio {worst:.3f}; "
            f"star/path/cycle ratio 1.0: {not not_opt}" + (f"; first miss {not_opt[0]}" if not_opt else ""))


def test_5_independent_set_oracle(verdict):
    rng = np.random.default_rng(5)
    mismatch, below = [], []
    for trial in range(500):
        n = int(rng.integers(1, 17))
        g = build_intersection_graph(random_disks(rng, n))
        p = make_independent_set_problem(g)
        exact = exact_max_feasible(p)
        div = division_approx_packing(g, p.feasible, n, seed=trial)
        if div != exact:
            mismatch.append(trial)
        greedy = set()
        for v in range(n):
            if not g.neighbor_set(v) & greedy:
                greedy.add(v)
        ls = local_search(p, 3).solution
        if not p.feasible(ls) or len(ls) < len(greedy):
            below.append(trial)
    verdict("5 independent-set oracle agreement", not mismatch and not below,
            f"division == exact on {500 - len(mismatch)}/500; local search >= greedy on {500 - len(below)}/500")


def test_6_hardness_equivalence(verdict):
    bad, count = [], 0
    for g in connected_subcubic_graphs(8, 4):
        if is_complete(g) or is_odd_cycle(g):
            continue
        count += 1
        vc = len(exact_vertex_cover(g))
        for gen in (gen_hitting_hardness, gen_cover_hardness):
            cert = gen(g, delta=1.0)
            opt = len(exact_min_feasible(abstract_set_cover(cert.system)))
            rep = verify_certificate(cert)
            if opt != vc or not rep.ok:
                bad.append((cert.kind, sorted(g.edges()), opt, vc, rep.failures[:1]))
    verdict("6 hardness equivalence", not bad,
            f"{count} graphs, hitting and cover optimum == vertex cover with all geometric checks: "
            f"{2 * count - len(bad)}/{2 * count}" + (f"; first bad {bad[0]}" if bad else ""))


def _fuzzed_packing(rng, g, ell, t):
    clusters, centers, count = [], [], np.zeros(g.n, dtype=int)
    for _ in range(int(rng.integers(1, 2 * g.n + 1))):
        z = int(rng.integers(g.n))
        if count[z] >= ell:
            continue
        dist, frontier = {z: 0}, [z]
        for d in range(1, t + 1):
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist and count[w] < ell and rng.random() < 0.6:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        for v in dist:
            count[v] += 1
        clusters.append(set(dist))
        centers.append(z)
    return ShallowPacking(clusters, centers, t=t, ell=ell)


def test_7_packing_invariants(verdict):
    rng = np.random.default_rng(7)
    bad = []
    for trial in range(1000):
        ell, t = (2, 1) if trial % 2 == 0 else (3, 2)
        g = random_graph(rng, int(rng.integers(2, 25)), p=float(rng.uniform(0.05, 0.4)))
        p = _fuzzed_packing(rng, g, ell, t)
        assert verify_packing(g, p).ok
        out = scoop_packing(g, p, seed=trial)
        if out.ell != 1 or out.t != t or not verify_packing(g, out).ok:
            bad.append(("scoop", trial))
        D = [int(v) for v in rng.permutation(g.n) if rng.random() < 0.4]
        C = sorted(set(D).union(*(g.neighbor_set(v) for v in D))) if D else []
        f = flower_decomposition(g, D, C)
        if not verify_packing(g, f).ok or not set(C) <= set().union(*f.clusters, set()):
            bad.append(("flower", trial))
    verdict("7 packing invariants", not bad,
            f"{1000 - sum(b[0] == 'scoop' for b in bad)}/1000 scoops are (1,t)-packings; "
            f"{1000 - sum(b[0] == 'flower' for b in bad)}/1000 flowers are covering (1,1)-packings")


def test_8_reduction_consistency(verdict):
    rng = np.random.default_rng(8)
    bad = []
    for trial in range(200):
        m = int(rng.integers(1, 8))
        tris = []
        while len(tris) < m:
            v = rng.uniform(0, 4, size=(3, 2))
            if abs(np.linalg.det(v[1:] - v[0])) > 0.3:
                tris.append(Triangle2(*v, id=len(tris)))
        pts = list(rng.uniform(0, 4, size=(int(rng.integers(0, 4)), 2)))
        system = hitting_set_system(tris, np.array(pts).reshape(-1, 2))
        for j in range(m):
            if len(pts) < 10 and not any(j in s for s in system.sets):
                pts.append(tris[j].coords.mean(axis=0))
        pts = np.array(pts).reshape(-1, 2)
        system = hitting_set_system(tris, pts)
        if any(not any(j in s for s in system.sets) for j in range(m)):
            continue
        via_dom = len(exact_min_feasible(make_domination_problem(hitting_set_to_domination(tris, pts))))
        direct = len(exact_min_feasible(abstract_set_cover(system)))
        if via_dom != direct:
            bad.append((trial, via_dom, direct))
    verdict("8 reduction consistency", not bad,
            f"{200 - len(bad)}/200 instances agree" + (f"; first bad {bad[0]}" if bad else ""))


def test_9_vertex_cover_reduction(verdict):
    bad, count = [], 0
    for g in all_graphs(8, 1):
        count += 1
        via = len(exact_min_feasible(make_domination_problem(vertex_cover_via_subdivision(g))))
        if via != len(exact_vertex_cover(g)):
            bad.append(sorted(g.edges()))
    verdict("9 vertex-cover reduction", not bad,
            f"{count - len(bad)}/{count} graphs agree" + (f"; first bad {bad[0]}" if bad else ""))
