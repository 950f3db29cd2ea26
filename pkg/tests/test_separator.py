import numpy as np
import pytest

from lowdense.config import DEFAULT
from lowdense.generators import gen_random_disks
from lowdense.geometry import Ball, crosses_sphere
from lowdense.igraph import build_intersection_graph
from lowdense.separator import (SeparatorError, expected_crossing_bound, sphere_separator,
                                weighted_sphere_separator)


@pytest.fixture(scope="module")
def corpus():
    return gen_random_disks(2000, 2, seed=2)


def test_partition_and_no_edges_across(corpus):
    g = build_intersection_graph(corpus)
    for seed in range(5):
        res = sphere_separator(corpus, 300, seed=seed)
        parts = np.concatenate([res.inside, res.outside, res.crossing])
        assert sorted(parts.tolist()) == list(range(len(corpus)))
        ins = set(res.inside.tolist())
        out = set(res.outside.tolist())
        assert not any((u in ins and v in out) or (u in out and v in ins) for u, v in g.edges())


def test_crossing_objects_meet_the_sphere(corpus):
    res = sphere_separator(corpus, 100, seed=1)
    for i in res.crossing:
        assert crosses_sphere(corpus[i], res.sphere, tol=DEFAULT.tol)
    for i in res.inside:
        assert not crosses_sphere(corpus[i], res.sphere)


def test_radius_drawn_from_window(corpus):
    from lowdense.geometry import representative, smallest_k_ball_approx
    reps = np.array([representative(o) for o in corpus])
    ball = smallest_k_ball_approx(reps, 50)
    for s in range(10):
        R = sphere_separator(corpus, 50, seed=s).sphere.radius
        assert ball.radius <= R <= 2 * ball.radius


def test_determinism(corpus):
    a = sphere_separator(corpus, 64, seed=9)
    b = sphere_separator(corpus, 64, seed=9)
    assert a.sphere.radius == b.sphere.radius and np.array_equal(a.crossing, b.crossing)


def test_k_one_and_bounds():
    objs = [Ball([3.0 * i, 0], 1) for i in range(5)]
    res = sphere_separator(objs, 1, seed=0)
    assert res.sphere.radius == 0.0
    with pytest.raises(ValueError):
        sphere_separator(objs, 0)
    with pytest.raises(ValueError):
        sphere_separator(objs, 6)


def test_max_crossing_budget_raises_with_best(corpus):
    with pytest.raises(SeparatorError) as ei:
        sphere_separator(corpus, 500, seed=0, max_crossing=0)
    assert ei.value.best is not None and len(ei.value.best.crossing) > 0


def test_auto_budget_is_usually_met(corpus):
    ok = 0
    for s in range(10):
        try:
            res = sphere_separator(corpus, 256, seed=s, max_crossing="auto", rho=2)
            assert len(res.crossing) <= 2 * expected_crossing_bound(2, 256, 2)
            ok += 1
        except SeparatorError:
            pass
    assert ok == 10


def test_weighted_separator_balances(corpus):
    w = np.ones(len(corpus))
    res = weighted_sphere_separator(corpus, w, seed=0)
    W = w.sum()
    c = 1 / (2 * 49)
    assert res.inside_weight <= (1 - c) * W and res.outside_weight <= (1 - c) * W
    w2 = np.random.default_rng(0).uniform(0.1, 5, len(corpus))
    res2 = weighted_sphere_separator(corpus, w2, seed=1)
    assert res2.inside_weight <= (1 - c) * w2.sum() + 1e-9
    with pytest.raises(ValueError):
        weighted_sphere_separator(corpus, -w, seed=0)
