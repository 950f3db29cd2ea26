"""Exact exponential-time solvers used as ground truth in tests."""
from itertools import combinations

from .config import DEFAULT


class CapExceeded(ValueError):
    pass


def _check_cap(size, cap, what="ground set"):
    cap = DEFAULT.brute_force_cap if cap is None else cap
    if size > cap:
        raise CapExceeded(f"{what} of {size} exceeds exact-solver cap {cap}")


def _accepts(p, S):
    return p.accepts(S) if hasattr(p, "accepts") else p.feasible(S)


def exact_max_feasible(p, cap=None):
    """Largest feasible subset of the ground set, ties broken lexicographically.

    Sizes are tried in decreasing order, subsets within a size in
    lexicographic order, so the first hit is the answer.
    """
    ground = list(p.ground)
    _check_cap(len(ground), cap)
    for size in range(len(ground), -1, -1):
        for S in combinations(ground, size):
            S = frozenset(S)
            if _accepts(p, S):
                return S
    raise ValueError("no feasible set, not even the empty one")


def exact_min_feasible(p, cap=None):
    """Smallest feasible subset of the ground set, ties broken lexicographically."""
    ground = list(p.ground)
    _check_cap(len(ground), cap)
    for size in range(len(ground) + 1):
        for S in combinations(ground, size):
            S = frozenset(S)
            if _accepts(p, S):
                return S
    raise ValueError("no feasible subset")


def max_independent_set_bb(g, cap=None):
    """Maximum independent set by branch and bound (branch on a max-degree vertex)."""
    _check_cap(g.n, cap, "graph")
    adj = [set(nb) for nb in g.adj]
    best = [frozenset()]

    def rec(cand, chosen):
        if len(chosen) + len(cand) <= len(best[0]):
            return
        if not cand:
            best[0] = frozenset(chosen)
            return
        v = max(cand, key=lambda u: (len(adj[u] & cand), -u))
        if not adj[v] & cand:
            # every remaining candidate is isolated among candidates
            rec(set(), chosen | cand)
            return
        rec(cand - {v} - adj[v], chosen | {v})
        rec(cand - {v}, chosen)

    rec(set(range(g.n)), set())
    return best[0]


def exact_vertex_cover(g, cap=None):
    """Minimum vertex cover as the complement of a maximum independent set."""
    mis = max_independent_set_bb(g, cap)
    return frozenset(range(g.n)) - mis
