"""Bounded-exchange local search and the division-based packing approximation."""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .config import DEFAULT

MAXIMIZE, MINIMIZE = "maximize", "minimize"


@dataclass
class SearchProblem:
    """Cardinality optimisation over subsets of ``range(n)``.

    ``feasible(S)`` receives a frozenset.  ``exchange_filter`` is an extra
    acceptance test applied after feasibility (e.g. connectivity).
    """
    n: int
    direction: str
    feasible: Callable
    initial: frozenset = None
    exchange_filter: Optional[Callable] = None
    hereditary: bool = False
    mergeable: bool = False
    name: str = ""
    ground: tuple = None

    def __post_init__(self):
        if self.direction not in (MAXIMIZE, MINIMIZE):
            raise ValueError(f"direction must be {MAXIMIZE!r} or {MINIMIZE!r}")
        if self.ground is None:
            self.ground = tuple(range(self.n))
        else:
            self.ground = tuple(sorted(set(int(v) for v in self.ground)))
        if self.initial is None:
            if self.direction == MINIMIZE:
                raise ValueError("minimisation needs a feasible initial solution")
            self.initial = frozenset()
        self.initial = frozenset(int(v) for v in self.initial)
        if not self.initial <= set(self.ground):
            raise ValueError("initial solution leaves the ground set")
        if not self.accepts(self.initial):
            raise ValueError(f"initial solution of {self.name or 'problem'} is infeasible")

    def accepts(self, S):
        if not self.feasible(S):
            return False
        return self.exchange_filter is None or bool(self.exchange_filter(S))

    def better(self, new_size, old_size):
        return new_size > old_size if self.direction == MAXIMIZE else new_size < old_size


@dataclass
class SearchTrace:
    steps: list = field(default_factory=list)  # (removed, added, new size)
    solution: frozenset = frozenset()
    rounds: int = 0
    examined: int = 0
    complete: bool = True


class _Budget(Exception):
    pass


def _size_pairs(p, t, size, free):
    """(|R|, |A|) pairs of improving exchanges, in search order."""
    if p.direction == MINIMIZE:
        for r in range(1, min(t, size) + 1):
            for a in range(0, min(r - 1, t - r, free) + 1):
                yield r, a
    else:
        for r in range(0, min(t, size) + 1):
            for a in range(r + 1, min(t - r, free) + 1):
                yield r, a


def _first_improvement(p, S, t, counter):
    inside = sorted(S)
    outside = [v for v in p.ground if v not in S]
    for r, a in _size_pairs(p, t, len(inside), len(outside)):
        for R in combinations(inside, r):
            base = S.difference(R)
            for A in combinations(outside, a):
                counter()
                cand = base.union(A)
                if p.accepts(cand):
                    return R, A, cand
    return None


def local_search(p, t, budget=None):
    """First-improvement local search with exchanges of at most ``t`` elements.

    Exchanges (R removed, A added) are tried by sizes in increasing order and
    within a size pair lexicographically by sorted ids.  ``budget`` caps the
    number of candidate sets examined; hitting it returns a trace with
    ``complete=False``.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    trace = SearchTrace(solution=p.initial)
    S = p.initial

    def counter():
        if budget is not None and trace.examined >= budget:
            raise _Budget
        trace.examined += 1

    try:
        while True:
            found = _first_improvement(p, S, t, counter)
            if found is None:
                break
            R, A, S = found
            trace.rounds += 1
            trace.steps.append((tuple(R), tuple(A), len(S)))
    except _Budget:
        trace.complete = False
    trace.solution = S
    return trace


def verify_local_optimality(p, S, t):
    """Exhaustively look for an improving exchange of at most ``t`` toggles.

    Enumerates toggle sets T (|T| <= t) over the ground set directly rather
    than the (R, A) split used by the search.  Returns ``(True, None)`` or
    ``(False, (removed, added))``.
    """
    S = frozenset(S)
    if not p.accepts(S):
        raise ValueError("S is not feasible")
    for size in range(1, t + 1):
        for T in combinations(p.ground, size):
            cand = S.symmetric_difference(T)
            if p.better(len(cand), len(S)) and p.accepts(cand):
                return False, (tuple(sorted(S - cand)), tuple(sorted(cand - S)))
    return True, None


def _best_subset(vertices, feasible):
    """Largest feasible subset of ``vertices``; ties go to the lexicographically smallest."""
    vs = sorted(vertices)
    for size in range(len(vs), -1, -1):
        for C in combinations(vs, size):
            if feasible(frozenset(C)):
                return frozenset(C)
    return frozenset()


def division_approx_packing(g, feasible, psi, seed=None, cap=None, with_division=False,
                            config=DEFAULT):
    """Packing via a psi-division: drop boundary vertices, solve clusters exactly.

    ``feasible`` must be hereditary and mergeable over separated vertex sets;
    the union of the per-cluster optima is then feasible.  Clusters whose
    interior exceeds ``cap`` vertices raise ``CapExceeded``.
    """
    from .division import build_division
    from .oracles import CapExceeded

    cap = config.brute_force_cap if cap is None else cap
    div = build_division(g, psi, seed, config)
    interiors = [c for c in div.interior() if c]
    too_big = [len(c) for c in interiors if len(c) > cap]
    if too_big:
        raise CapExceeded(f"cluster interior of {max(too_big)} vertices exceeds brute-force cap {cap}; "
                         f"lower psi")
    out = set()
    for c in interiors:
        out |= _best_subset(c, feasible)
    out = frozenset(out)
    return (out, div) if with_division else out
