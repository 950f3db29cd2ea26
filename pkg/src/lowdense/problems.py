"""Concrete optimisation problems expressed as :class:`SearchProblem` instances."""
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT
from .geometry import Point, contains_point, diameter
from .igraph import IntersectionGraph, build_intersection_graph, hop_distances, induced_subgraph
from .localsearch import MAXIMIZE, MINIMIZE, SearchProblem
from .report import Report


# ---------------------------------------------------------------------------
# packing problems (maximise, hereditary and mergeable)

def make_independent_set_problem(g):
    adj = [g.neighbor_set(v) for v in range(g.n)]

    def feasible(S):
        return all(not (adj[v] & S) for v in S)

    return SearchProblem(g.n, MAXIMIZE, feasible, hereditary=True, mergeable=True,
                         name="independent set")


def make_density_packing_problem(objs, rho_max, tol=DEFAULT.tol, g=None):
    """Largest subset in which every object meets at most ``rho_max`` members
    of diameter at least its own (itself included)."""
    if rho_max < 1:
        raise ValueError("rho_max must be >= 1")
    objs = list(objs)
    g = g if g is not None else build_intersection_graph(objs, tol)
    diam = [diameter(o) for o in objs]
    # heavier[v]: neighbours that count against v
    heavier = [frozenset(w for w in g.adj[v] if diam[w] >= diam[v]) for v in range(g.n)]

    def feasible(S):
        return all(1 + len(heavier[v] & S) <= rho_max for v in S)

    return SearchProblem(len(objs), MAXIMIZE, feasible, hereditary=True, mergeable=True,
                         name=f"density<= {rho_max} packing")


def containment_matrix(objs, pts, tol=DEFAULT.tol):
    """Boolean matrix M[i, j] = object i contains point j (closed, within tol)."""
    M = np.zeros((len(objs), len(pts)), dtype=bool)
    for i, o in enumerate(objs):
        for j, p in enumerate(pts):
            M[i, j] = contains_point(o, p, tol)
    return M


def make_shallow_coverage_problem(objs, pts, k, tol=DEFAULT.tol):
    """Largest subset of ``objs`` covering every point at most ``k`` times."""
    if k < 0:
        raise ValueError("k must be >= 0")
    M = containment_matrix(objs, pts, tol)

    def feasible(S):
        if not S:
            return True
        return bool(np.all(M[sorted(S)].sum(axis=0) <= k))

    return SearchProblem(len(objs), MAXIMIZE, feasible, hereditary=True, mergeable=True,
                         name=f"{k}-shallow packing")


# ---------------------------------------------------------------------------
# domination

@dataclass
class DominationInstance:
    """Pick S within D so each v in C has demand(v) members of S within reach(v) hops.

    Hop distances are measured in the full graph.
    """
    graph: IntersectionGraph
    D: tuple
    C: tuple
    demand: dict = field(default_factory=dict)
    reach: dict = field(default_factory=dict)
    connected: bool = False

    def __post_init__(self):
        n = self.graph.n
        self.D = tuple(sorted(set(int(v) for v in self.D)))
        self.C = tuple(sorted(set(int(v) for v in self.C)))
        for v in self.D + self.C:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
        self.demand = {int(v): int(x) for v, x in self.demand.items()}
        self.reach = {int(v): int(x) for v, x in self.reach.items()}
        for name, m in (("demand", self.demand), ("reach", self.reach)):
            bad = [v for v, x in m.items() if x < 1]
            if bad:
                raise ValueError(f"{name} must be >= 1 (vertex {bad[0]})")
        self._cover = self._cover_sets()
        short = [v for v in self.C if len(self._cover[v]) < self.demand_of(v)]
        if short:
            v = short[0]
            raise ValueError(f"D does not dominate C: vertex {v} has {len(self._cover[v])} "
                             f"candidates within reach {self.reach_of(v)}, demand {self.demand_of(v)}")

    def demand_of(self, v):
        return self.demand.get(v, 1)

    def reach_of(self, v):
        return self.reach.get(v, 1)

    @property
    def max_demand(self):
        return max((self.demand_of(v) for v in self.C), default=1)

    @property
    def max_reach(self):
        return max((self.reach_of(v) for v in self.C), default=1)

    def _cover_sets(self):
        Dset = set(self.D)
        out = {}
        for v in self.C:
            near = hop_distances(self.graph, v, self.reach_of(v))
            out[v] = frozenset(u for u in near if u in Dset)
        return out

    def cover_set(self, v):
        return self._cover[v]

    def dominates(self, S):
        S = frozenset(S)
        return all(len(self._cover[v] & S) >= self.demand_of(v) for v in self.C)

    def induces_connected(self, S):
        if not S:
            return True
        h, _ = induced_subgraph(self.graph, S)
        return h.is_connected()

    def shortest_paths_within_D(self):
        """Diagnostic: do hop distances between members of D stay the same inside G[D]?"""
        rep = Report("shortest paths within D")
        h, old = induced_subgraph(self.graph, self.D)
        for i, u in enumerate(old.tolist()):
            full = hop_distances(self.graph, u)
            inner = {int(old[j]): d for j, d in hop_distances(h, i).items()}
            for w in self.D:
                if w in full and inner.get(w) != full[w]:
                    rep.fail("distance", f"{u}->{w}: {full[w]} in G, {inner.get(w)} inside D")
                    return rep
        rep.check("distance", True)
        return rep


def make_domination_problem(inst):
    filt = inst.induces_connected if inst.connected else None
    return SearchProblem(inst.graph.n, MINIMIZE, inst.dominates, initial=frozenset(inst.D),
                         exchange_filter=filt, ground=inst.D,
                         name="connected domination" if inst.connected else "domination")


def _objects_and_points_graph(objs, pts, tol):
    """Intersection graph on objects (ids 0..m-1) followed by points (m..m+p-1)."""
    pts = [np.asarray(p, dtype=float) for p in pts]
    allobjs = list(objs) + [Point(p) for p in pts]
    return build_intersection_graph(allobjs, tol), len(objs)


def hitting_set_to_domination(objs, pts, tol=DEFAULT.tol):
    """Hitting set as domination: D = point vertices, C = object vertices."""
    g, m = _objects_and_points_graph(objs, pts, tol)
    return DominationInstance(g, range(m, g.n), range(m))


def set_cover_to_domination(objs, pts, tol=DEFAULT.tol):
    """Set cover as domination: D = object vertices, C = point vertices."""
    g, m = _objects_and_points_graph(objs, pts, tol)
    return DominationInstance(g, range(m), range(m, g.n))


def vertex_cover_via_subdivision(g):
    """Subdivide every edge; dominating the midpoints from V is a vertex cover."""
    edges = list(g.edges())
    sub = []
    for i, (u, v) in enumerate(edges):
        w = g.n + i
        sub += [(u, w), (v, w)]
    h = IntersectionGraph.from_edges(g.n + len(edges), sub)
    return DominationInstance(h, range(g.n), range(g.n, h.n))


# ---------------------------------------------------------------------------
# abstract set systems

@dataclass
class SetSystemInstance:
    universe: int
    sets: list
    certificate: dict = None

    def __post_init__(self):
        self.sets = [tuple(sorted(set(int(e) for e in s))) for s in self.sets]
        for i, s in enumerate(self.sets):
            if s and not (0 <= s[0] and s[-1] < self.universe):
                raise ValueError(f"set {i} holds elements outside 0..{self.universe - 1}")

    def incidence_matrix(self):
        M = np.zeros((len(self.sets), self.universe), dtype=bool)
        for i, s in enumerate(self.sets):
            M[i, list(s)] = True
        return M


def abstract_set_cover(ssi):
    """Minimum number of sets whose union is the universe."""
    covers = [frozenset(s) for s in ssi.sets]
    covered = frozenset().union(*covers) if covers else frozenset()
    missing = sorted(set(range(ssi.universe)) - covered)
    if missing:
        raise ValueError(f"element {missing[0]} lies in no set")
    U = frozenset(range(ssi.universe))

    def feasible(S):
        got = set()
        for i in S:
            got |= covers[i]
        return got >= U

    return SearchProblem(len(covers), MINIMIZE, feasible, initial=frozenset(range(len(covers))),
                         name="set cover")


def hitting_set_system(objs, pts, tol=DEFAULT.tol):
    """Elements are objects; set j lists the objects stabbed by point j."""
    M = containment_matrix(objs, pts, tol)
    return SetSystemInstance(len(objs), [np.flatnonzero(M[:, j]).tolist() for j in range(len(pts))])


def cover_set_system(objs, pts, tol=DEFAULT.tol):
    """Elements are points; set i lists the points inside object i."""
    M = containment_matrix(objs, pts, tol)
    return SetSystemInstance(len(pts), [np.flatnonzero(M[i]).tolist() for i in range(len(objs))])


def domination_feasible_bruteforce(inst, S):
    """Independent recount of domination feasibility by a plain BFS per vertex of C."""
    S = set(S)
    for v in inst.C:
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in inst.graph.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        near = [u for u in S if u in set(inst.D) and dist.get(u, 1 << 30) <= inst.reach_of(v)]
        if len(near) < inst.demand_of(v):
            return False
    return True

