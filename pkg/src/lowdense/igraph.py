"""Intersection graphs and plain graphs over dense integer vertex ids."""
import heapq
from collections import defaultdict, deque
from itertools import combinations

import numpy as np

from .config import DEFAULT
from .geometry import Ball, diameter, intersects, representative


class IntersectionGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``embedding`` (optional) holds one geometric object per vertex; when it is
    present the edge set is exactly the set of intersecting pairs.
    """

    def __init__(self, n, adjacency, embedding=None, labels=None):
        self.n = int(n)
        self.adj = [tuple(sorted(set(nb))) for nb in adjacency]
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        self._sets = [frozenset(nb) for nb in self.adj]
        for u, nb in enumerate(self.adj):
            if u in self._sets[u]:
                raise ValueError(f"self-loop at {u}")
            for v in nb:
                if not 0 <= v < self.n or u not in self._sets[v]:
                    raise ValueError(f"asymmetric or out-of-range edge {u}-{v}")
        self.embedding = list(embedding) if embedding is not None else None
        self.labels = list(labels) if labels is not None else None

    @classmethod
    def from_edges(cls, n, edges, embedding=None, labels=None):
        adj = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, adj, embedding, labels)

    def neighbors(self, v):
        return self.adj[v]

    def neighbor_set(self, v):
        return self._sets[v]

    def has_edge(self, u, v):
        return v in self._sets[u]

    def degree(self, v):
        return len(self.adj[v])

    def edges(self):
        for u, nb in enumerate(self.adj):
            for v in nb:
                if u < v:
                    yield u, v

    @property
    def m(self):
        return sum(len(nb) for nb in self.adj) // 2

    def max_degree(self):
        return max((len(nb) for nb in self.adj), default=0)

    def is_connected(self):
        if self.n == 0:
            return True
        return len(hop_distances(self, 0)) == self.n

    def __repr__(self):
        return f"IntersectionGraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# construction

def build_intersection_graph(objs, tol=DEFAULT.tol, method="auto"):
    """Intersection graph of ``objs``; vertex i is ``objs[i]``.

    ``method`` is ``"pairs"`` (all-pairs predicate loop), ``"grid"``
    (uniform-grid bucketing, then the same predicate on candidate pairs) or
    ``"auto"`` (grid above 200 objects).  Both produce the same edge set.
    """
    objs = list(objs)
    n = len(objs)
    if n and any(o.dim != objs[0].dim for o in objs):
        raise ValueError("objects of mixed dimension")
    if method == "auto":
        method = "grid" if n > 200 else "pairs"
    if method == "pairs":
        cand = combinations(range(n), 2)
    elif method == "grid":
        cand = sorted(_grid_candidates(objs, tol))
    else:
        raise ValueError(f"unknown method {method!r}")
    edges = _filter_pairs(objs, cand, tol)
    return IntersectionGraph.from_edges(n, edges, embedding=objs)


def _filter_pairs(objs, cand, tol):
    if objs and all(o.kind == "ball" for o in objs):
        pairs = np.array(list(cand), dtype=np.int64).reshape(-1, 2)
        if len(pairs) == 0:
            return []
        c = np.array([o.coords for o in objs])
        r = np.array([o.radius for o in objs])
        d = np.linalg.norm(c[pairs[:, 0]] - c[pairs[:, 1]], axis=1)
        keep = d <= r[pairs[:, 0]] + r[pairs[:, 1]] + tol
        return [tuple(p) for p in pairs[keep].tolist()]
    return [(u, v) for u, v in cand if intersects(objs[u], objs[v], tol)]


def bounding_box(o):
    if o.kind == "point":
        return o.coords, o.coords
    if o.kind in ("ball", "circle"):
        return o.coords - o.radius, o.coords + o.radius
    if o.kind == "box":
        return o.coords[0], o.coords[1]
    return o.coords.min(axis=0), o.coords.max(axis=0)


def _grid_candidates(objs, tol, max_cells=64):
    boxes = [bounding_box(o) for o in objs]
    ext = np.array([np.max(hi - lo) for lo, hi in boxes])
    cell = float(np.median(ext)) if len(ext) else 1.0
    if cell <= 0:
        cell = max(float(ext.max()), 1.0)
    cells = defaultdict(list)
    big = []
    for i, (lo, hi) in enumerate(boxes):
        a = np.floor((lo - tol) / cell).astype(np.int64)
        b = np.floor((hi + tol) / cell).astype(np.int64)
        if np.prod(b - a + 1) > max_cells:
            big.append(i)
            continue
        for key in np.ndindex(*(b - a + 1)):
            cells[tuple(a + np.array(key))].append(i)
    out = set()
    for members in cells.values():
        for u, v in combinations(members, 2):
            out.add((u, v) if u < v else (v, u))
    for i in big:
        for j in range(len(objs)):
            if j != i:
                out.add((i, j) if i < j else (j, i))
    return out


# ---------------------------------------------------------------------------
# queries

def induced_subgraph(g, S):
    """Subgraph induced on ``S``; returns ``(h, old_ids)`` with ``old_ids[new] == old``."""
    old = sorted(set(int(v) for v in S))
    for v in old:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    new = {v: i for i, v in enumerate(old)}
    adj = [[new[w] for w in g.adj[v] if w in new] for v in old]
    emb = [g.embedding[v] for v in old] if g.embedding is not None else None
    lab = [g.labels[v] for v in old] if g.labels is not None else None
    return IntersectionGraph(len(old), adj, emb, lab), np.array(old, dtype=np.int64)


def degeneracy(g):
    """Smallest k such that min-degree peeling never removes a vertex of degree > k.

    Returns ``(k, order)``; ties are broken by smallest vertex id.
    """
    deg = [len(nb) for nb in g.adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order, k = [], 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        k = max(k, d)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return k, order


def hop_distances(g, src, cutoff=None):
    """BFS hop distances from ``src``; vertices beyond ``cutoff`` are omitted."""
    if not 0 <= src < g.n:
        raise IndexError(f"vertex {src} out of range")
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        du = dist[u]
        if cutoff is not None and du >= cutoff:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = du + 1
                q.append(w)
    return dist


def pairwise_density_proxy(objs, g=None, tol=DEFAULT.tol):
    """max over o of |{o' : diam(o') >= diam(o), o' meets o}|, o itself included.

    This is the density restricted to queries drawn from the family itself;
    degeneracy(g) + 1 never exceeds it.
    """
    if g is None:
        g = build_intersection_graph(objs, tol)
    if g.n == 0:
        return 0
    diam = np.array([diameter(o) for o in objs])
    best = 0
    for v in range(g.n):
        nb = np.fromiter(g.adj[v], dtype=np.int64, count=len(g.adj[v]))
        cnt = 1 + int(np.count_nonzero(diam[nb] >= diam[v])) if len(nb) else 1
        best = max(best, cnt)
    return best


def density_query_count(objs, q, tol=DEFAULT.tol):
    """Number of objects with diameter >= diam(q) meeting the query object ``q``."""
    dq = diameter(q)
    return sum(1 for o in objs if diameter(o) >= dq and intersects(o, q, tol))


def estimate_density(objs, tol=DEFAULT.tol):
    """Lower-bound estimate of the density rho of ``objs``.

    Queries are every object itself plus the ball of radius diam(o)/2 about
    its representative point.  The true density quantifies over all query
    objects, so this can only under-estimate it.
    """
    objs = list(objs)
    if not objs:
        raise ValueError("need at least one object")
    best = 0
    for o in objs:
        for q in (o, Ball(representative(o), diameter(o) / 2.0)):
            best = max(best, density_query_count(objs, q, tol))
    return best
