"""Randomised sphere separators for low-density object sets.

Take one representative point per object, find a ball b(c, r) that
2-approximates the smallest ball holding k representatives, draw R uniformly
from [r, 2r] and split the objects by the sphere S(c, R).  Objects meeting the
sphere (within the geometry tolerance) form the separator; an object strictly
inside S cannot touch one strictly outside, so removing the separator
disconnects the two sides.
"""
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, doubling_constant
from .geometry import PackedObjects, Sphere, smallest_k_ball_approx, weighted_ball_approx


@dataclass
class SeparatorResult:
    sphere: Sphere
    inside: np.ndarray
    outside: np.ndarray
    crossing: np.ndarray
    trials: int
    inside_weight: float = None
    outside_weight: float = None


class SeparatorError(RuntimeError):
    def __init__(self, msg, best):
        super().__init__(msg)
        self.best = best


def expected_crossing_bound(rho, k, d, config=DEFAULT):
    """N = C (rho + rho^(1/d) k^(1-1/d)); the separator targets |crossing| <= 2N."""
    return config.crossing_constant * (rho + rho ** (1.0 / d) * k ** (1.0 - 1.0 / d))


def classify(packed, idx, sphere, tol):
    lo, hi = packed.bounds(idx, sphere.center)
    inside = hi < sphere.radius - tol
    outside = lo >= sphere.radius + tol
    crossing = ~(inside | outside)
    return idx[inside], idx[outside], idx[crossing]


def _sample(packed, idx, ball, rng, max_crossing, accept, config):
    best = None
    for trial in range(1, config.max_trials + 1):
        R = rng.uniform(ball.radius, 2.0 * ball.radius) if ball.radius > 0 else 0.0
        sphere = Sphere(ball.center, R)
        ins, out, cr = classify(packed, idx, sphere, config.tol)
        res = SeparatorResult(sphere, ins, out, cr, trial)
        balanced = accept(res) if accept is not None else True
        if balanced and (max_crossing is None or len(cr) <= max_crossing):
            return res
        if best is None or len(cr) < len(best.crossing):
            best = res
        if ball.radius == 0:
            break
    raise SeparatorError(
        f"no acceptable sphere (max_crossing={max_crossing}) after {best.trials} trials; "
        f"best crossing {len(best.crossing)}", best)


def separate_packed(packed, idx, k, rng, max_crossing=None, config=DEFAULT):
    idx = np.asarray(idx, dtype=np.int64)
    ball = smallest_k_ball_approx(packed.reps[idx], k)
    return _sample(packed, idx, ball, rng, max_crossing, None, config)


def _resolve_max_crossing(max_crossing, objs, k, d, rho, config):
    if max_crossing != "auto":
        return max_crossing
    if rho is None:
        from .igraph import build_intersection_graph, pairwise_density_proxy
        rho = pairwise_density_proxy(objs, build_intersection_graph(objs, config.tol))
    return int(math.floor(2.0 * expected_crossing_bound(rho, k, d, config)))


def sphere_separator(objs, k, seed=None, max_crossing=None, rho=None, config=DEFAULT):
    """Separate ``objs`` by a random sphere around roughly ``k`` of them.

    ``max_crossing``: ``None`` accepts the first sample; an int resamples R
    until at most that many objects cross; ``"auto"`` uses 2N from
    :func:`expected_crossing_bound` with ``rho`` (estimated by the pairwise
    proxy when not given).  Raises :class:`SeparatorError` carrying the best
    sample when the resampling budget runs out.
    """
    objs = list(objs)
    if not objs:
        raise ValueError("no objects to separate")
    if not 1 <= k <= len(objs):
        raise ValueError(f"k must lie in [1, {len(objs)}]")
    packed = PackedObjects(objs)
    mc = _resolve_max_crossing(max_crossing, objs, k, packed.dim, rho, config)
    rng = np.random.default_rng(seed)
    return separate_packed(packed, np.arange(len(objs)), k, rng, mc, config)


def weighted_sphere_separator(objs, weights, seed=None, c=None, balance=None,
                              max_crossing=None, config=DEFAULT):
    """Sphere separator balancing total weight rather than object count.

    The ball 2-approximates the smallest ball whose representatives carry at
    least ``c * W`` weight (default ``c = 1/(2 c_d^2)``).  A sample is accepted
    when the weight strictly inside and strictly outside are each at most
    ``balance * W`` (default ``1 - c``) and the crossing count is within
    ``max_crossing``.
    """
    objs = list(objs)
    w = np.asarray(weights, dtype=float)
    if len(w) != len(objs):
        raise ValueError("weights not aligned with objects")
    if np.any(w < 0):
        raise ValueError("weights must be nonnegative")
    W = float(w.sum())
    if W <= 0:
        raise ValueError("total weight must be positive")
    packed = PackedObjects(objs)
    if c is None:
        c = 1.0 / (2.0 * doubling_constant(packed.dim, config) ** 2)
    if balance is None:
        balance = 1.0 - c
    target = c * W
    if np.all(w == w[0]):
        k = min(len(objs), max(1, math.ceil(target / w[0] - 1e-9)))
        ball = smallest_k_ball_approx(packed.reps, k)
    else:
        ball = weighted_ball_approx(packed.reps, w, target)

    def weigh(res):
        res.inside_weight = float(w[res.inside].sum())
        res.outside_weight = float(w[res.outside].sum())
        return (res.inside_weight <= balance * W + 1e-12
                and res.outside_weight <= balance * W + 1e-12)

    rng = np.random.default_rng(seed)
    return _sample(packed, np.arange(len(objs)), ball, rng, max_crossing, weigh, config)
