"""Instance factories: random low-density disks and hardness constructions."""
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
import numpy as np
from networkx.generators.atlas import graph_atlas_g

from .config import DEFAULT
from .geometry import Ball, Circle2, Triangle2, contains_point
from .igraph import IntersectionGraph
from .problems import SetSystemInstance
from .report import Report


def gen_random_disks(n, rho_target, seed=None, d=2, fill=0.3, max_attempts=None, tol=DEFAULT.tol):
    """``n`` unit-radius balls placed by dart throwing in a cube.

    The cube side is chosen so the balls' total volume is ``fill`` times the
    cube volume.  A dart is rejected when it would make any ball meet more
    than ``floor(rho_target) - 1`` others, so the pairwise density proxy never
    exceeds ``rho_target``.  Deterministic for a given seed.
    """
    if rho_target < 1:
        raise ValueError(f"rho_target must be >= 1 (got {rho_target}); every ball meets itself")
    if n < 1:
        raise ValueError("n must be >= 1")
    if d not in (2, 3):
        raise ValueError("d must be 2 or 3")
    cap = int(math.floor(rho_target)) - 1
    unit_vol = math.pi if d == 2 else 4.0 * math.pi / 3.0
    side = (n * unit_vol / fill) ** (1.0 / d)
    reach = 2.0 + tol
    rng = np.random.default_rng(seed)
    cells = defaultdict(list)
    centers = np.empty((n, d))
    deg = np.zeros(n, dtype=np.int64)
    offsets = np.array(np.meshgrid(*[[-1, 0, 1]] * d)).reshape(d, -1).T
    max_attempts = max_attempts or 200 * n
    placed = attempts = 0
    batch = rng.uniform(0.0, side, size=(1024, d))
    bi = 0
    while placed < n:
        if attempts >= max_attempts:
            raise ValueError(f"rho_target={rho_target} unattainable: placed {placed}/{n} "
                             f"after {attempts} darts")
        if bi == len(batch):
            batch = rng.uniform(0.0, side, size=(1024, d))
            bi = 0
        p = batch[bi]
        bi += 1
        attempts += 1
        key = np.floor(p / 2.0).astype(np.int64)
        nb = []
        for off in offsets:
            for j in cells.get(tuple(key + off), ()):
                if np.linalg.norm(centers[j] - p) <= reach:
                    nb.append(j)
        if len(nb) > cap or any(deg[j] >= cap for j in nb):
            continue
        centers[placed] = p
        for j in nb:
            deg[j] += 1
        deg[placed] = len(nb)
        cells[tuple(key)].append(placed)
        placed += 1
    return [Ball(centers[i], 1.0, id=i) for i in range(n)]


# ---------------------------------------------------------------------------
# small graphs

def path_graph(n):
    return IntersectionGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return IntersectionGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    """K_{1,leaves}; the center is the last vertex."""
    return IntersectionGraph.from_edges(leaves + 1, [(i, leaves) for i in range(leaves)])


def complete_graph(n):
    return IntersectionGraph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a, b):
    return IntersectionGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph():
    return from_networkx(nx.petersen_graph())


def random_cubic_graph(n, seed=None):
    return from_networkx(nx.random_regular_graph(3, n, seed=_int_seed(seed)))


def from_networkx(h):
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return IntersectionGraph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _int_seed(seed):
    if seed is None:
        return None
    return int(np.random.SeedSequence(seed).generate_state(1)[0])


def _refine(adj):
    """Stable colour refinement; colours are isomorphism-invariant."""
    n = len(adj)
    col = [len(a) for a in adj]
    ncol = len(set(col))
    while True:
        sig = [(col[v], tuple(sorted(col[w] for w in adj[v]))) for v in range(n)]
        keys = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [keys[s] for s in sig]
        if len(keys) == ncol:
            return new
        col, ncol = new, len(keys)


@lru_cache(maxsize=None)
def _perms(k):
    return np.array(list(permutations(range(k))), dtype=np.int64)


def canonical_code(n, edges):
    """Canonical integer code of a graph: equal codes iff isomorphic.

    Minimum adjacency bit string over all vertex orders compatible with the
    colour refinement (which every isomorphism preserves).
    """
    adj = [[] for _ in range(n)]
    A = np.zeros((n, n), dtype=np.uint64)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
        A[u, v] = A[v, u] = 1
    if n <= 1:
        return 0
    col = _refine(adj)
    P = np.zeros((1, 0), dtype=np.int64)
    for c in sorted(set(col)):
        cell = np.array([v for v in range(n) if col[v] == c])
        cp = cell[_perms(len(cell))]
        P = np.concatenate([np.repeat(P, len(cp), 0), np.tile(cp, (len(P), 1))], 1)
    iu, ju = np.triu_indices(n, 1)
    bits = A[P[:, iu], P[:, ju]]
    weights = np.uint64(1) << np.arange(len(iu), dtype=np.uint64)
    return int((bits * weights).sum(axis=1).min())


@lru_cache(maxsize=None)
def _graphs_of_order(n, max_degree=None):
    """Edge lists of all graphs on n vertices (max degree <= max_degree) up to isomorphism.

    Built by adding a vertex to every smaller graph; deleting a vertex never
    raises degrees, so the degree bound can be enforced at every step.
    """
    if n > 8:
        raise ValueError("exhaustive enumeration is limited to n <= 8")
    if n <= 7:
        out = [tuple(sorted((min(u, v), max(u, v)) for u, v in h.edges()))
               for h in graph_atlas_g() if h.number_of_nodes() == n]
        if max_degree is not None:
            out = [e for e in out if _max_deg(n, e) <= max_degree]
        return tuple(out)
    seen = {}
    for base in _graphs_of_order(n - 1, max_degree):
        deg = [0] * (n - 1)
        for u, v in base:
            deg[u] += 1
            deg[v] += 1
        for mask in range(1 << (n - 1)):
            nb = [i for i in range(n - 1) if mask >> i & 1]
            if max_degree is not None and (len(nb) > max_degree
                                           or any(deg[i] >= max_degree for i in nb)):
                continue
            edges = base + tuple((i, n - 1) for i in nb)
            code = canonical_code(n, edges)
            if code not in seen:
                seen[code] = edges
    return tuple(seen[c] for c in sorted(seen))


def _max_deg(n, edges):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return max(deg, default=0)


def all_graphs(n_max=8, n_min=1, max_degree=None):
    """Every graph with n_min <= n <= n_max vertices, one per isomorphism class."""
    for n in range(n_min, n_max + 1):
        for edges in _graphs_of_order(n, max_degree):
            yield IntersectionGraph.from_edges(n, edges)


def connected_subcubic_graphs(n_max=8, n_min=1):
    """Connected graphs of maximum degree <= 3, one per isomorphism class."""
    for g in all_graphs(n_max, n_min, max_degree=3):
        if g.is_connected():
            yield g


def is_complete(g):
    return g.m == g.n * (g.n - 1) // 2


def is_odd_cycle(g):
    return g.n >= 3 and g.n % 2 == 1 and g.m == g.n and all(g.degree(v) == 2 for v in range(g.n)) \
        and g.is_connected()


# ---------------------------------------------------------------------------
# colourings by backtracking

def vertex_coloring(g, k):
    """A proper k-colouring as a list, or None when none exists."""
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    col = [-1] * g.n

    def rec(i):
        if i == len(order):
            return True
        v = order[i]
        used = {col[w] for w in g.adj[v]}
        for c in range(k):
            if c not in used:
                col[v] = c
                if rec(i + 1):
                    return True
        col[v] = -1
        return False

    return col if rec(0) else None


def edge_coloring(g, k):
    """Proper k-edge-colouring as a dict edge -> colour, or None."""
    edges = list(g.edges())
    line = IntersectionGraph.from_edges(
        len(edges), [(i, j) for i, j in combinations(range(len(edges)), 2)
                     if set(edges[i]) & set(edges[j])])
    col = vertex_coloring(line, k)
    if col is None:
        return None
    return {e: c for e, c in zip(edges, col)}


# ---------------------------------------------------------------------------
# hardness constructions

@dataclass
class HardnessCertificate:
    """A set-cover instance built from a vertex-cover instance.

    ``system`` is authoritative: choose the fewest sets covering the universe.
    For ``kind == "hitting"`` sets are points and elements are triangles; for
    the cover kinds sets are shapes (triangles, circles, planes) and elements
    are points.  ``objects``/``points`` hold the geometric embedding;
    ``planes`` holds (a, b, c) for z = a x + b y + c in the plane variant.
    """
    kind: str
    graph: IntersectionGraph
    system: SetSystemInstance
    points: np.ndarray
    objects: list = field(default_factory=list)
    planes: np.ndarray = None
    params: dict = field(default_factory=dict)
    claim: str = ""
    set_vertex: list = None

    @property
    def incidence(self):
        return self.system.incidence_matrix()


def _arc_points(center_deg, count, arc_len):
    """``count`` equally spaced unit-circle points on an arc of length ``arc_len`` (radians)."""
    c = math.radians(center_deg)
    if count == 1:
        ang = np.array([c])
    else:
        ang = c + arc_len * (np.arange(count) / (count - 1) - 0.5)
    return np.stack([np.cos(ang), np.sin(ang)], axis=1)


def _check_subcubic(g):
    if g.max_degree() > 3:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds 3")


def gen_hitting_hardness(g, delta=1.0):
    """Triangles whose minimum hitting set is a minimum vertex cover of ``g``.

    ``g`` must be connected, subcubic and 3-colourable.  Vertices of colour i
    sit on a short arc around the i-th corner of an inscribed equilateral
    triangle; edge uv becomes the triangle on u, v and a fresh point on the
    arc of the third colour.  ``delta`` is in degrees; arcs have length
    delta/100.  Points are numbered fresh points first (edge order), then
    vertices, so point ``m + v`` is vertex ``v``.
    """
    _check_subcubic(g)
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n < 2:
        raise ValueError("graph needs an edge")
    col = vertex_coloring(g, 3)
    if col is None:
        raise ValueError("graph is not 3-colourable (complete graph K4)")
    arc = delta / 100.0
    edges = list(g.edges())
    # slot lists per arc: original vertices first, then fresh points in edge order
    members = [[("v", v) for v in range(g.n) if col[v] == i] for i in range(3)]
    for j, (u, v) in enumerate(edges):
        members[3 - col[u] - col[v]].append(("e", j))
    pid = {}
    coords = []
    for i, centre in enumerate((90.0, 210.0, 330.0)):
        for key, p in zip(members[i], _arc_points(centre, len(members[i]), arc)):
            pid[key] = len(coords)
            coords.append(p)
    # fresh edge points get ids 0..m-1, vertex v gets id m + v
    order = sorted(pid, key=lambda k: (k[0] != "e", k[1]))
    remap = [pid[k] for k in order]
    pts = np.array([coords[r] for r in remap])
    new = {k: i for i, k in enumerate(order)}
    tris, sets = [], [[] for _ in order]
    for j, (u, v) in enumerate(edges):
        a, b, c = new[("v", u)], new[("v", v)], new[("e", j)]
        tris.append(Triangle2(pts[a], pts[b], pts[c], id=j))
        for p in (a, b, c):
            sets[p].append(j)
    system = SetSystemInstance(len(edges), sets)
    return HardnessCertificate("hitting", g, system, pts, tris,
                               params={"delta": float(delta), "arc_length": arc, "colors": col},
                               claim="min hitting set == min vertex cover")


def gen_cover_hardness(g, delta=1.0):
    """Triangles (one per vertex) whose minimum cover of the edge points is a minimum vertex cover.

    Edges are 4-edge-coloured and placed on short arcs at the four axis points
    of the unit circle; vertex v's shape is the hull of its incident edges'
    points (degenerate when v has fewer than three edges).  Isolated vertices
    have empty sets and are left out.
    """
    _check_subcubic(g)
    arc = delta / 100.0
    edges = list(g.edges())
    ecol = edge_coloring(g, 4)
    if ecol is None:  # cannot happen for subcubic graphs
        raise ValueError("no 4-edge-colouring found")
    pts = np.zeros((len(edges), 2))
    for c, centre in enumerate((0.0, 90.0, 180.0, 270.0)):
        ids = [j for j, e in enumerate(edges) if ecol[e] == c]
        for j, p in zip(ids, _arc_points(centre, len(ids), arc)):
            pts[j] = p
    sets, objs, owner = [], [], []
    for v in range(g.n):
        inc = [j for j, (a, b) in enumerate(edges) if v in (a, b)]
        if not inc:
            continue
        corners = [pts[j] for j in inc] + [pts[inc[-1]]] * (3 - len(inc))
        objs.append(Triangle2(*corners, id=len(objs), degenerate=len(inc) < 3))
        sets.append(inc)
        owner.append(v)
    system = SetSystemInstance(len(edges), sets)
    return HardnessCertificate("cover", g, system, pts, objs,
                               params={"delta": float(delta), "arc_length": arc,
                                       "edges": [list(e) for e in edges],
                                       "edge_colors": [ecol[e] for e in edges]},
                               claim="min set cover == min vertex cover", set_vertex=owner)


def circumcircle(a, b, c):
    """Center and radius of the circle through three points; None if collinear."""
    (ax, ay), (bx, by), (cx, cy) = a, b, c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-14:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    center = np.array([ux, uy])
    return center, float(np.linalg.norm(np.asarray(a) - center))


def cocircular_quadruples(pts, tol=DEFAULT.tol, limit=None):
    """4-subsets whose fourth point lies within ``tol`` of the circle through the other three.

    The circle is fitted through the three points spanning the largest
    triangle, which keeps the test well conditioned.
    """
    out = []
    for quad in combinations(range(len(pts)), 4):
        P = pts[list(quad)]
        best, area = None, -1.0
        for trip in combinations(range(4), 3):
            a, b, c = P[list(trip)]
            ar = abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
            if ar > area:
                best, area = trip, ar
        cc = circumcircle(*P[list(best)])
        rest = P[[i for i in range(4) if i not in best][0]]
        if cc is None or abs(np.linalg.norm(rest - cc[0]) - cc[1]) <= tol:
            out.append(quad)
            if limit and len(out) >= limit:
                break
    return out


def gen_circle_hardness(g, delta=1.0, perturb=None, tol=DEFAULT.tol):
    """Circles through the perturbed edge points of each vertex (3-regular ``g`` only).

    Points of the cover construction are moved by up to ``perturb`` (default
    arc length / 1000), deterministically per point id, until no four are
    cocircular; the perturbation doubles on each of up to 8 attempts.
    """
    if g.n == 0 or any(g.degree(v) != 3 for v in range(g.n)):
        raise ValueError("circle construction needs a 3-regular graph")
    base = gen_cover_hardness(g, delta)
    scale = base.params["arc_length"] / 1e3 if perturb is None else float(perturb)
    for attempt in range(8):
        pts = base.points.copy()
        for i in range(len(pts)):
            pts[i] += scale * np.random.default_rng([attempt, i]).uniform(-1.0, 1.0, 2)
        if cocircular_quadruples(pts, tol, limit=1):
            scale *= 2.0
            continue
        circles = []
        for j, s in enumerate(base.system.sets):
            cc = circumcircle(*pts[list(s)])
            if cc is None:
                break
            circles.append(Circle2(cc[0], cc[1], id=j))
        else:
            params = dict(base.params, perturb=scale, attempts=attempt + 1)
            return HardnessCertificate("circle", g, base.system, pts, circles, params=params,
                                       claim="min circle cover == min vertex cover",
                                       set_vertex=base.set_vertex)
        scale *= 2.0
    raise ValueError("could not perturb points into general position after 8 attempts")


def lift(pts):
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    return np.column_stack([pts, (pts ** 2).sum(axis=1)])


def gen_plane_hardness(cert):
    """Lift a circle certificate to planes in 3D via (x, y) -> (x, y, x^2 + y^2).

    The circle with center (a, b) and radius R maps to the plane
    z = 2a x + 2b y + (R^2 - a^2 - b^2); a point lies on the circle iff its
    lift lies on the plane.
    """
    if cert.kind != "circle":
        raise ValueError("plane lifting needs a circle certificate")
    planes = np.array([[2 * c.coords[0], 2 * c.coords[1],
                        c.radius ** 2 - c.coords[0] ** 2 - c.coords[1] ** 2] for c in cert.objects]
                      ).reshape(-1, 3)
    return HardnessCertificate("plane", cert.graph, cert.system, lift(cert.points), [], planes,
                               params=dict(cert.params), claim="min plane cover == min vertex cover",
                               set_vertex=cert.set_vertex)


# ---------------------------------------------------------------------------
# certificate verification

def _angles_deg(tri):
    v = tri.coords
    out = []
    for i in range(3):
        a, b, c = v[i], v[(i + 1) % 3], v[(i + 2) % 3]
        x, y = b - a, c - a
        cosang = np.dot(x, y) / (np.linalg.norm(x) * np.linalg.norm(y))
        out.append(math.degrees(math.acos(max(-1.0, min(1.0, cosang)))))
    return out


def _convex_position(pts):
    """Every point is a strict vertex of the convex hull (points sorted around their centroid)."""
    if len(pts) <= 2:
        return True, None
    c = pts.mean(axis=0)
    order = np.argsort(np.arctan2(pts[:, 1] - c[1], pts[:, 0] - c[0]))
    P = pts[order]
    m = len(P)
    for i in range(m):
        a, b, d = P[i - 1], P[i], P[(i + 1) % m]
        if (b[0] - a[0]) * (d[1] - a[1]) - (b[1] - a[1]) * (d[0] - a[0]) <= 0:
            return False, int(order[i])
    return True, None


def _geometric_incidence(cert, tol):
    """Sets x elements incidence recomputed from the embedding."""
    S = len(cert.system.sets)
    U = cert.system.universe
    M = np.zeros((S, U), dtype=bool)
    if cert.kind == "hitting":
        for p in range(S):
            for e, tri in enumerate(cert.objects):
                M[p, e] = contains_point(tri, cert.points[p], tol)
    elif cert.kind in ("cover", "circle"):
        for s, obj in enumerate(cert.objects):
            for e in range(U):
                M[s, e] = contains_point(obj, cert.points[e], tol)
    else:
        for s, (a, b, c) in enumerate(cert.planes):
            z = a * cert.points[:, 0] + b * cert.points[:, 1] + c
            M[s] = np.abs(cert.points[:, 2] - z) <= max(tol, 1e-9) * (1.0 + np.abs(z))
    return M


def verify_certificate(cert, tol=DEFAULT.tol, oracle_limit=10):
    """Re-derive incidence from geometry and check the construction's conditions."""
    rep = Report(f"{cert.kind} certificate")
    delta = cert.params.get("delta", 1.0)
    drad = math.radians(delta)
    auth = cert.incidence
    if cert.kind == "plane" and cert.planes is not None:
        # the plane fit is the geometric claim here; check it directly
        worst = 0.0
        for s, elems in enumerate(cert.system.sets):
            L = cert.points[list(elems)]
            a, b, c = cert.planes[s]
            worst = max(worst, float(np.max(np.abs(L[:, 2] - (a * L[:, 0] + b * L[:, 1] + c)))))
        rep.check("plane fit", worst < 1e-6, f"lifted points off their plane by {worst:.3g}")
    geo = _geometric_incidence(cert, tol)
    diff = np.argwhere(geo != auth)
    rep.check("incidence", len(diff) == 0,
              None if len(diff) == 0 else
              f"set {diff[0][0]} / element {diff[0][1]}: geometry says {bool(geo[tuple(diff[0])])}, "
              f"design says {bool(auth[tuple(diff[0])])}")

    if cert.kind in ("hitting", "cover"):
        ok, bad = _convex_position(cert.points)
        rep.check("convex position", ok, f"point {bad} is not a strict hull vertex")

    if cert.kind == "hitting":
        bad_ang = [(i, a) for i, t in enumerate(cert.objects) for a in _angles_deg(t)
                   if not 60 - delta < a < 60 + delta]
        rep.check("(A) angles", not bad_ang,
                  f"triangle {bad_ang[0][0]} has angle {bad_ang[0][1]:.6f}" if bad_ang else None)
        depth = geo.sum(axis=1)
        rep.check("(B) depth <= 3", depth.max(initial=0) <= 3,
                  f"point {int(depth.argmax()) if len(depth) else None} lies in {int(depth.max(initial=0))} triangles")
        sides = [(i, float(np.linalg.norm(t.coords[k] - t.coords[(k + 1) % 3])))
                 for i, t in enumerate(cert.objects) for k in range(3)]
        bad_side = [(i, s) for i, s in sides if not math.sqrt(3) - drad < s < math.sqrt(3) + drad]
        rep.check("(D) side lengths", not bad_side,
                  f"triangle {bad_side[0][0]} side {bad_side[0][1]:.6f}" if bad_side else None)
        verts = {tuple(v) for t in cert.objects for v in t.coords}
        stray = [i for i, p in enumerate(cert.points) if tuple(p) not in verts]
        rep.check("(E) points are vertices", not stray, f"point {stray[:1]} is no triangle vertex")

    if cert.kind in ("cover", "circle", "plane"):
        mult = auth.sum(axis=0)
        bad = np.flatnonzero(mult != 2)
        rep.check("element multiplicity 2", len(bad) == 0,
                  f"element {bad[:1].tolist()} lies in {mult[bad[:1]].tolist()} sets")

    if cert.kind == "cover":
        depth = geo.sum(axis=0)
        rep.check("(B) depth <= 2", depth.max(initial=0) <= 2,
                  f"point {int(depth.argmax()) if len(depth) else None} in {int(depth.max(initial=0))} triangles")
        full = [(i, t) for i, t in enumerate(cert.objects) if not t.degenerate]
        rep.note(f"{len(cert.objects) - len(full)} degenerate triangle(s) excluded from angle checks")
        for i, t in full:
            ang = sorted(_angles_deg(t))
            if not ang[0] > 45 - delta:
                rep.fail("(A) min angle", f"triangle {i} min angle {ang[0]:.6f}")
            if not (45 - delta < ang[0] < 45 + delta and 45 - delta < ang[1] < 45 + delta
                    and 90 - delta < ang[2] < 90 + delta):
                rep.fail("(E) 45-45-90 pattern", f"triangle {i} angles {[round(a, 6) for a in ang]}")
            diam = max(float(np.linalg.norm(t.coords[a] - t.coords[b])) for a, b in combinations(range(3), 2))
            if not 2 - drad < diam <= 2 + tol:
                rep.fail("(D) diameter", f"triangle {i} diameter {diam:.9f}")
        rep.checked += ["(A) min angle", "(E) 45-45-90 pattern", "(D) diameter"]
        verts = {tuple(v) for t in cert.objects for v in t.coords}
        rep.check("(F) vertices are the points", verts == {tuple(p) for p in cert.points},
                  "triangle vertices and point set differ")

    if cert.kind == "circle":
        quads = cocircular_quadruples(cert.points, tol, limit=1)
        rep.check("no four cocircular", not quads, f"points {quads[:1]} are cocircular")

    if cert.graph.n <= oracle_limit:
        from .oracles import exact_min_feasible, exact_vertex_cover
        from .problems import abstract_set_cover
        vc = len(exact_vertex_cover(cert.graph))
        opt = len(exact_min_feasible(abstract_set_cover(cert.system))) if cert.system.universe else 0
        rep.check("optimum equivalence", vc == opt, f"set optimum {opt} but vertex cover {vc}")
    else:
        rep.note(f"oracle cross-check skipped: source graph has {cert.graph.n} > {oracle_limit} vertices")
    return rep
