"""Shallow packings, flower decompositions and random scooping."""
from dataclasses import dataclass

import numpy as np

from .igraph import IntersectionGraph
from .report import Report


@dataclass
class ShallowPacking:
    """Clusters (vertex sets, repeats allowed) with one center each.

    Valid as an (ell, t)-packing when every cluster is within ``t`` hops of its
    center inside the cluster and no vertex lies in more than ``ell`` clusters.
    """
    clusters: list
    centers: list
    t: int = 1
    ell: int = 1

    def __post_init__(self):
        self.clusters = [frozenset(int(v) for v in c) for c in self.clusters]
        self.centers = [int(c) for c in self.centers]
        if len(self.clusters) != len(self.centers):
            raise ValueError("one center per cluster required")


def _radius_from(g, cluster, center):
    """Hop distances from ``center`` inside the subgraph induced by ``cluster``."""
    dist = {center: 0}
    frontier = [center]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if w in cluster and w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def verify_packing(g, p):
    rep = Report(f"({p.ell},{p.t})-packing")
    count = {}
    for i, (c, z) in enumerate(zip(p.clusters, p.centers)):
        bad = [v for v in c if not 0 <= v < g.n]
        if bad:
            rep.fail("vertex range", f"cluster {i} holds unknown vertex {bad[0]}")
            continue
        if z not in c:
            rep.fail("center", f"cluster {i} does not contain its center {z}")
            continue
        dist = _radius_from(g, c, z)
        unreached = sorted(c - dist.keys())
        rep.check("connected", not unreached,
                  f"cluster {i}: vertex {unreached[0] if unreached else None} unreachable from center {z}")
        far = sorted(v for v, d in dist.items() if d > p.t)
        rep.check("radius", not far,
                  f"cluster {i}: vertex {far[0] if far else None} is {dist.get(far[0]) if far else None} "
                  f"hops from center {z} (t={p.t})")
        for v in c:
            count[v] = count.get(v, 0) + 1
    over = sorted(v for v, k in count.items() if k > p.ell)
    rep.check("multiplicity", not over,
              f"vertex {over[0] if over else None} lies in {count.get(over[0]) if over else None} "
              f"clusters (ell={p.ell})")
    return rep


def induced_packing_graph(g, p):
    """Graph on clusters: adjacent when they share a vertex or an edge of ``g`` joins them."""
    k = len(p.clusters)
    owners = {}
    for i, c in enumerate(p.clusters):
        for v in c:
            owners.setdefault(v, set()).add(i)
    adj = [set() for _ in range(k)]
    for i, c in enumerate(p.clusters):
        for v in c:
            for w in (v, *g.adj[v]):
                for j in owners.get(w, ()):
                    if j != i:
                        adj[i].add(j)
    return IntersectionGraph(k, adj)


def flower_decomposition(g, D, C):
    """Flowers around the heads ``D`` (in order) covering ``C``.

    Flower i is head v_i plus its neighbours that are still uncovered members
    of C and are not heads still to come (v_i, ..., v_m).  Flowers are
    disjoint, so the result is a (1,1)-packing.
    """
    D = [int(v) for v in D]
    C = set(int(v) for v in C)
    covered = set(D) | set().union(*(g.neighbor_set(v) for v in D)) if D else set()
    missing = sorted(C - covered)
    if missing:
        raise ValueError(f"D does not dominate C: vertex {missing[0]} is uncovered")
    if len(set(D)) != len(D):
        raise ValueError("repeated head in D")
    remaining = set(C)
    upcoming = set(D)
    clusters = []
    for v in D:
        flower = {v} | ((g.neighbor_set(v) & remaining) - upcoming)
        clusters.append(flower)
        remaining -= flower
        upcoming.discard(v)
    return ShallowPacking(clusters, D, t=1, ell=1)


def scoop_packing(g, p, seed=None):
    """Shrink the clusters of ``p`` into disjoint connected scoops.

    Clusters are visited in a uniformly random order.  A cluster whose center
    was already scooped is skipped; otherwise its scoop is the set of vertices
    reachable from the center inside the cluster minus earlier scoops, within
    ``p.t`` hops.  The result is a (1, t)-packing.
    """
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(p.clusters))
    taken = set()
    clusters, centers = [], []
    for i in order.tolist():
        z = p.centers[i]
        if z in taken:
            continue
        allowed = p.clusters[i] - taken
        dist = _radius_from(g, allowed, z)
        scoop = {v for v, d in dist.items() if d <= p.t}
        clusters.append(scoop)
        centers.append(z)
        taken |= scoop
    return ShallowPacking(clusters, centers, t=p.t, ell=1)
