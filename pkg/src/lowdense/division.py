"""psi-divisions built by recursive sphere separation.

A cover of the vertices is a psi-division when every cluster has at most psi
vertices and, for any two clusters C and C', no edge joins C - C' to C' - C.
The second condition is equivalent to a per-edge one: for every edge uv the
set of clusters containing u and the set containing v are nested.

Construction: recursively split each piece with the sphere separator (k = half
the piece), sending crossing objects to both children, until pieces have at
most psi vertices.  Leaves of that recursion cover every edge but need not be
pairwise separated when separator vertices of different levels are adjacent,
so a closure pass then makes memberships nested along every edge by letting
one endpoint of each offending edge join the other's clusters.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT
from .geometry import PackedObjects
from .report import Report
from .separator import separate_packed


@dataclass
class Division:
    clusters: list
    psi: int
    boundary: dict = field(default_factory=dict)
    excess: int = 0
    trials: int = 0
    fallbacks: int = 0

    @classmethod
    def from_clusters(cls, clusters, psi=None, **kw):
        clusters = [frozenset(int(v) for v in c) for c in clusters]
        count = {}
        for c in clusters:
            for v in c:
                count[v] = count.get(v, 0) + 1
        boundary = {v: k for v, k in sorted(count.items()) if k >= 2}
        excess = sum(k - 1 for k in count.values())
        if psi is None:
            psi = max((len(c) for c in clusters), default=0)
        return cls(clusters, psi, boundary, excess, **kw)

    def interior(self):
        return [c - self.boundary.keys() for c in self.clusters]


def psi_for_epsilon(rho, eps, d, K=None):
    """Cluster size ceil(K rho / eps^d) targeting total excess <= eps n."""
    if rho < 1:
        raise ValueError("rho must be >= 1")
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    if K is None:
        K = DEFAULT.division_constant
    return int(math.ceil(K * rho / eps ** d - 1e-9))


def build_division(g, psi, seed=None, config=DEFAULT):
    """Division of the embedded graph ``g`` with clusters of at most ``psi`` vertices.

    The closure pass can grow clusters past the recursion target, so the
    target is lowered and the recursion rerun (same seed) until every cluster
    fits.  When no target fits (a clique larger than psi) the division with
    the smallest largest cluster is returned; ``Division.psi`` is always the
    largest cluster actually produced.
    """
    if g.embedding is None:
        raise ValueError("build_division needs a geometric embedding")
    if psi < 1:
        raise ValueError("psi must be >= 1")
    if g.n == 0:
        return Division([], 0)
    best = None
    target = psi
    while True:
        div = _build_once(g, target, seed, config)
        if best is None or div.psi < best.psi:
            best = div
        if div.psi <= psi or target == 1:
            return best
        target = max(1, min(target - 1, target * psi // div.psi))


def _build_once(g, psi, seed, config):
    packed = PackedObjects(g.embedding)
    level = np.full(g.n, np.iinfo(np.int64).max)
    leaves = []
    trials = fallbacks = 0
    stack = [(np.arange(g.n), np.random.SeedSequence(seed), 0)]
    while stack:
        piece, ss, depth = stack.pop()
        m = len(piece)
        if m <= psi:
            leaves.append(piece)
            continue
        res = separate_packed(packed, piece, math.ceil(m / 2), np.random.default_rng(ss), None, config)
        trials += res.trials
        a = np.union1d(res.inside, res.crossing)
        b = np.union1d(res.outside, res.crossing)
        if len(a) == m or len(b) == m:
            fallbacks += 1
            split = _fallback_split(g, packed, piece)
            if split is None:
                leaves.append(piece)
                continue
            a, b = split
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        shared = np.intersect1d(a, b)
        level[shared] = np.minimum(level[shared], depth)
        ca, cb = ss.spawn(2)
        stack.append((b, cb, depth + 1))
        stack.append((a, ca, depth + 1))
    clusters = _nest_closure(g, leaves, level, psi)
    return Division.from_clusters(clusters, trials=trials, fallbacks=fallbacks)


def _fallback_split(g, packed, piece):
    """Halve ``piece`` along its representatives and duplicate the cut.

    Returns ``(X + N, Y)`` where N is the part of Y adjacent to X, or the
    mirrored split; ``None`` when neither shrinks.
    """
    reps = packed.reps[piece]
    order = piece[np.lexsort(reps.T[::-1])]
    half = len(order) // 2
    for X, Y in ((order[:half], order[half:]), (order[half:], order[:half])):
        xs = set(X.tolist())
        N = [v for v in Y.tolist() if any(w in xs for w in g.adj[v])]
        if len(N) < len(Y):
            return np.union1d(X, np.array(N, dtype=np.int64)), np.sort(Y)
    return None


def _nest_closure(g, leaves, level, psi):
    """Repair edges whose endpoint memberships are not nested, then drop contained clusters.

    For a bad edge uv one endpoint joins the clusters of the other.  The side is
    chosen to keep clusters within ``psi``, then to add fewer memberships, then
    so that the vertex separated higher in the recursion joins.  Memberships
    only grow, so the repair terminates, and it stops only when every edge is
    nested.
    """
    member = [set() for _ in range(g.n)]
    size = [len(leaf) for leaf in leaves]
    for i, leaf in enumerate(leaves):
        for v in leaf.tolist():
            member[v].add(i)
    rank = {v: (int(level[v]), v) for v in range(g.n)}
    work = [(u, v) for u, v in g.edges()]
    while work:
        u, v = work.pop()
        add_u, add_v = member[v] - member[u], member[u] - member[v]
        if not add_u or not add_v:
            continue

        def cost(x, add):
            over = sum(size[i] + 1 > psi for i in add)
            return (over, len(add), rank[x])

        x, add = min((u, add_u), (v, add_v), key=lambda p: cost(*p))
        member[x] |= add
        for i in add:
            size[i] += 1
        work.extend((x, w) for w in g.adj[x])
    # prune memberships that no incident edge needs
    for v in range(g.n):
        for i in sorted(member[v], key=lambda i: (-size[i], i)):
            if len(member[v]) < 2:
                break
            rest = member[v] - {i}
            if all(rest & member[w] and (rest <= member[w] or member[w] <= rest) for w in g.adj[v]):
                member[v] = rest
                size[i] -= 1
    clusters = [set() for _ in leaves]
    for v in range(g.n):
        for i in member[v]:
            clusters[i].add(v)
    # a cluster inside another is redundant; removing it keeps every edge nested
    uniq = sorted({frozenset(c) for c in clusters if c}, key=lambda c: (-len(c), sorted(c)))
    kept, holding = [], {}
    for c in uniq:
        v = next(iter(c))
        if not any(c <= kept[i] for i in holding.get(v, ())):
            for u in c:
                holding.setdefault(u, []).append(len(kept))
            kept.append(c)
    return kept


def validate_division(g, div):
    """Check cover, separateness, size bound and edge cover; witnesses on failure."""
    rep = Report("division")
    member = [[] for _ in range(g.n)]
    for i, c in enumerate(div.clusters):
        for v in c:
            if not 0 <= v < g.n:
                rep.fail("vertex range", f"cluster {i} holds unknown vertex {v}")
                continue
            member[v].append(i)
    missing = [v for v in range(g.n) if not member[v]]
    rep.check("cover", not missing, f"vertices in no cluster: {missing[:10]}")
    big = [(i, len(c)) for i, c in enumerate(div.clusters) if len(c) > div.psi]
    rep.check("size", not big, f"clusters over psi={div.psi}: {big[:5]}")
    sep_bad = cover_bad = None
    for u, v in g.edges():
        mu, mv = set(member[u]), set(member[v])
        if not (mu & mv) and cover_bad is None:
            cover_bad = (u, v)
        if sep_bad is None and (mu - mv) and (mv - mu):
            sep_bad = (u, v, min(mu - mv), min(mv - mu))
    rep.check("edge cover", cover_bad is None, f"edge {cover_bad} lies in no cluster")
    rep.check("separated", sep_bad is None,
              None if sep_bad is None else
              f"edge {sep_bad[0]}-{sep_bad[1]} joins cluster {sep_bad[2]} - cluster {sep_bad[3]} "
              f"to cluster {sep_bad[3]} - cluster {sep_bad[2]}")
    expect = Division.from_clusters(div.clusters, div.psi)
    rep.check("excess bookkeeping", expect.excess == div.excess and expect.boundary == div.boundary,
              f"stored excess {div.excess}, recomputed {expect.excess}")
    return rep
