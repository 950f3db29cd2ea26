"""Geometric objects, predicates and the smallest k-enclosing ball.

Objects are closed point sets in R^2 or R^3.  Five variants are supported:

* ``point``     -- a single point
* ``ball``      -- closed ball (a disk in the plane)
* ``box``       -- axis-parallel box given by its min and max corners
* ``triangle``  -- closed planar triangle (may be flagged degenerate)
* ``circle``    -- planar circle *curve*, without its interior

All predicates work in floating point with an absolute tolerance; two objects
whose distance is at most ``tol`` are treated as intersecting.
"""
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT

KINDS = ("point", "ball", "box", "triangle", "circle")
_PLANAR_ONLY = ("triangle", "circle")


@dataclass(frozen=True, eq=False)
class GeomObject:
    kind: str
    coords: np.ndarray
    radius: float = 0.0
    id: int = -1
    degenerate: bool = False

    @property
    def dim(self):
        return self.coords.shape[-1]

    def __repr__(self):
        body = np.array2string(self.coords, separator=",").replace("\n", "")
        extra = f", r={self.radius:g}" if self.kind in ("ball", "circle") else ""
        return f"{self.kind}(id={self.id}, {body}{extra})"


@dataclass(frozen=True, eq=False)
class Sphere:
    """Sphere S(center, radius); also used for the ball it bounds.

    A zero radius is allowed: the smallest ball around a single point.
    """
    center: np.ndarray
    radius: float

    def __post_init__(self):
        if not np.isfinite(self.radius) or self.radius < 0:
            raise ValueError(f"sphere radius must be finite and >= 0, got {self.radius}")


def _vec(x, dim=None):
    a = np.asarray(x, dtype=float)
    if a.ndim != 1 or a.shape[0] not in (2, 3):
        raise ValueError(f"expected a 2D or 3D point, got shape {a.shape}")
    if dim is not None and a.shape[0] != dim:
        raise ValueError(f"expected a {dim}D point")
    return a


def Point(p, id=-1):
    return GeomObject("point", _vec(p), 0.0, id)


def Ball(center, r, id=-1):
    if r < 0:
        raise ValueError("ball radius must be >= 0")
    return GeomObject("ball", _vec(center), float(r), id)


def AxisBox(lo, hi, id=-1):
    lo, hi = _vec(lo), _vec(hi, len(lo))
    if np.any(hi < lo):
        raise ValueError("box corners must satisfy lo <= hi")
    return GeomObject("box", np.stack([lo, hi]), 0.0, id)


def Triangle2(a, b, c, id=-1, degenerate=False):
    v = np.stack([_vec(a, 2), _vec(b, 2), _vec(c, 2)])
    if not degenerate and abs(_orient(v[0], v[1], v[2])) == 0.0:
        raise ValueError("collinear triangle vertices; pass degenerate=True")
    return GeomObject("triangle", v, 0.0, id, bool(degenerate))


def Circle2(center, r, id=-1):
    if r < 0:
        raise ValueError("circle radius must be >= 0")
    return GeomObject("circle", _vec(center, 2), float(r), id)


def with_id(o, id):
    return GeomObject(o.kind, o.coords, o.radius, id, o.degenerate)


# ---------------------------------------------------------------------------
# elementary planar helpers

def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _point_segment_dist(p, a, b):
    ab = b - a
    L = ab @ ab
    if L == 0.0:
        return float(np.linalg.norm(p - a))
    s = min(1.0, max(0.0, (p - a) @ ab / L))
    return float(np.linalg.norm(p - (a + s * ab)))


def _point_triangle_dist(p, v, degenerate=False):
    if not degenerate:
        o1, o2, o3 = _orient(v[0], v[1], p), _orient(v[1], v[2], p), _orient(v[2], v[0], p)
        if (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0):
            return 0.0
    return min(_point_segment_dist(p, v[i], v[(i + 1) % 3]) for i in range(3))


def _box_corners2(o):
    (x0, y0), (x1, y1) = o.coords
    return np.array([[x0, y0], [x1, y0], [x1, y1], [x0, y1]])


def _polygon(o):
    if o.kind == "triangle":
        return o.coords
    if o.kind == "box":
        return _box_corners2(o)
    if o.kind == "point":
        return o.coords[None, :]
    raise AssertionError(o.kind)


def _polygon_distance(P, Q):
    """Euclidean distance between two convex polygons (vertex arrays, possibly degenerate)."""
    axes = []
    for poly in (P, Q):
        m = len(poly)
        for i in range(m):
            e = poly[(i + 1) % m] - poly[i]
            if e @ e > 0.0:
                axes.append(e)
                axes.append(np.array([-e[1], e[0]]))
    diff = Q.mean(axis=0) - P.mean(axis=0)
    if diff @ diff > 0.0:
        axes.append(diff)
    separated = False
    for ax in axes:
        ax = ax / np.linalg.norm(ax)
        p, q = P @ ax, Q @ ax
        if p.max() < q.min() or q.max() < p.min():
            separated = True
            break
    if not separated and axes:
        return 0.0
    best = np.inf
    for A, B in ((P, Q), (Q, P)):
        m = len(B)
        for p in A:
            for i in range(m):
                best = min(best, _point_segment_dist(p, B[i], B[(i + 1) % m]))
    return float(best)


# ---------------------------------------------------------------------------
# scalar operations

def diameter(o):
    if o.kind == "point":
        return 0.0
    if o.kind in ("ball", "circle"):
        return 2.0 * o.radius
    if o.kind == "box":
        return float(np.linalg.norm(o.coords[1] - o.coords[0]))
    v = o.coords
    return float(max(np.linalg.norm(v[i] - v[j]) for i in range(3) for j in range(i + 1, 3)))


def distance_bounds(o, c):
    """(min, max) Euclidean distance from the point ``c`` to the points of ``o``."""
    c = np.asarray(c, dtype=float)
    if o.kind == "point":
        d = float(np.linalg.norm(o.coords - c))
        return d, d
    if o.kind == "ball":
        d = float(np.linalg.norm(o.coords - c))
        return max(0.0, d - o.radius), d + o.radius
    if o.kind == "circle":
        d = float(np.linalg.norm(o.coords - c))
        return abs(d - o.radius), d + o.radius
    if o.kind == "box":
        lo, hi = o.coords
        near = np.clip(c, lo, hi) - c
        far = np.maximum(np.abs(c - lo), np.abs(c - hi))
        return float(np.linalg.norm(near)), float(np.linalg.norm(far))
    v = o.coords
    return (_point_triangle_dist(c, v, o.degenerate),
            float(np.max(np.linalg.norm(v - c, axis=1))))


def contains_point(o, p, tol=DEFAULT.tol):
    p = np.asarray(p, dtype=float)
    if o.kind == "circle":
        return abs(np.linalg.norm(p - o.coords) - o.radius) <= tol
    return distance_bounds(o, p)[0] <= tol


def _check_dims(a, b):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim}D vs {b.dim}D")
    for o in (a, b):
        if o.kind in _PLANAR_ONLY and o.dim != 2:
            raise ValueError(f"{o.kind} objects are planar only")


def intersects(a, b, tol=DEFAULT.tol):
    """True iff the closed point sets of ``a`` and ``b`` meet (within ``tol``)."""
    _check_dims(a, b)
    if _RANK[a.kind] > _RANK[b.kind]:
        a, b = b, a
    ka, kb = a.kind, b.kind
    if ka == "point":
        return contains_point(b, a.coords, tol)
    if ka == "ball":
        lo, _ = distance_bounds(b, a.coords)
        return lo <= a.radius + tol
    if ka == "circle":
        if kb == "circle":
            d = float(np.linalg.norm(a.coords - b.coords))
            return abs(a.radius - b.radius) - tol <= d <= a.radius + b.radius + tol
        lo, hi = distance_bounds(b, a.coords)
        return lo <= a.radius + tol and hi >= a.radius - tol
    if ka == "box" and kb == "box":
        gap = np.maximum(0.0, np.maximum(a.coords[0] - b.coords[1], b.coords[0] - a.coords[1]))
        return float(np.linalg.norm(gap)) <= tol
    return _polygon_distance(_polygon(a), _polygon(b)) <= tol


# points first so single-point tests dominate; circle after the solids it is tested against
_RANK = {"point": 0, "ball": 1, "circle": 2, "box": 3, "triangle": 4}


def crosses_sphere(o, s, tol=0.0):
    """True iff ``o`` has points strictly inside ``s`` and points on or outside it.

    With ``tol > 0`` the band is widened: points within ``tol`` of the sphere
    count on both sides.
    """
    lo, hi = distance_bounds(o, s.center)
    return lo < s.radius + tol and hi >= s.radius - tol


def representative(o):
    """Deterministic point of ``o``.

    Ball -> center; circle -> center pushed onto the curve along +x;
    triangle -> first vertex; box -> min corner; point -> itself.
    """
    if o.kind in ("point", "ball"):
        return o.coords.copy()
    if o.kind == "circle":
        return o.coords + np.array([o.radius, 0.0])
    return o.coords[0].copy()


def smallest_k_ball_approx(pts, k):
    """2-approximate smallest ball containing ``k`` of the points.

    Radius is the smallest k-th nearest neighbour distance (a point counts as
    its own first neighbour); the center is the minimising input point.  The
    optimal ball contains one of the points, and every other point of that ball
    lies within twice the optimal radius of it.
    """
    pts = np.asarray(pts, dtype=float)
    if pts.ndim != 2 or len(pts) == 0:
        raise ValueError("need a nonempty (n, d) point array")
    n = len(pts)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    kth = _kth_neighbor_dist(pts, k)
    i = int(np.argmin(kth))
    r = np.partition(np.linalg.norm(pts - pts[i], axis=1), k - 1)[k - 1]
    return Sphere(pts[i].copy(), float(r))


def _kth_neighbor_dist(pts, k, chunk=256):
    n = len(pts)
    if k == 1:
        return np.zeros(n)
    if k <= 64 and n > 512:
        from scipy.spatial import cKDTree
        d, _ = cKDTree(pts).query(pts, k=[k])
        return d[:, 0]
    # fast |a|^2 + |b|^2 - 2ab ranking, then exact distances for the near-minimal
    # candidates (the expansion cancels badly for nearly coincident points)
    sq = np.einsum("ij,ij->i", pts, pts)
    out = np.empty(n)
    for s in range(0, n, chunk):
        blk = pts[s:s + chunk]
        d2 = sq[s:s + chunk, None] + sq[None, :] - 2.0 * blk @ pts.T
        np.maximum(d2, 0.0, out=d2)
        out[s:s + chunk] = np.partition(d2, k - 1, axis=1)[:, k - 1]
    slack = 1e-9 * (1.0 + float(sq.max()))
    cand = np.flatnonzero(out <= out.min() + 2 * slack)
    out = np.sqrt(out)
    for i in cand[:64]:
        d = np.linalg.norm(pts - pts[i], axis=1)
        out[i] = np.partition(d, k - 1)[k - 1]
    return out


def weighted_ball_approx(pts, weights, target):
    """2-approximate smallest ball whose points carry weight >= ``target``."""
    pts = np.asarray(pts, dtype=float)
    w = np.asarray(weights, dtype=float)
    if len(pts) == 0:
        raise ValueError("empty point set")
    best_r, best_i = np.inf, 0
    for i in range(len(pts)):
        d = np.linalg.norm(pts - pts[i], axis=1)
        order = np.argsort(d, kind="stable")
        cw = np.cumsum(w[order])
        j = int(np.searchsorted(cw, target * (1 - 1e-12)))
        if j >= len(pts):
            continue
        if d[order[j]] < best_r:
            best_r, best_i = float(d[order[j]]), i
    if not np.isfinite(best_r):
        raise ValueError("target weight exceeds total weight")
    return Sphere(pts[best_i].copy(), best_r)


# ---------------------------------------------------------------------------
# packed arrays for vectorised distance bounds

_CODE = {k: i for i, k in enumerate(KINDS)}


class PackedObjects:
    """Column-wise copy of an object list, for vectorised distance queries."""

    def __init__(self, objs):
        if not objs:
            raise ValueError("no objects")
        d = objs[0].dim
        if any(o.dim != d for o in objs):
            raise ValueError("objects of mixed dimension")
        n = len(objs)
        self.dim = d
        self.n = n
        self.kind = np.array([_CODE[o.kind] for o in objs])
        self.r = np.array([o.radius for o in objs])
        self.deg = np.array([o.degenerate for o in objs])
        self.p = np.zeros((3, n, d))
        for i, o in enumerate(objs):
            c = o.coords
            if c.ndim == 1:
                self.p[0, i] = c
            else:
                self.p[:len(c), i] = c
        self.reps = np.array([representative(o) for o in objs])

    def bounds(self, idx, c):
        """Arrays (min, max) of distances from ``c`` to objects ``idx``."""
        idx = np.asarray(idx)
        kind = self.kind[idx]
        lo = np.empty(len(idx))
        hi = np.empty(len(idx))
        P = self.p[:, idx]
        r = self.r[idx]
        m = (kind == _CODE["point"])
        if m.any():
            dd = np.linalg.norm(P[0, m] - c, axis=1)
            lo[m], hi[m] = dd, dd
        m = (kind == _CODE["ball"])
        if m.any():
            dd = np.linalg.norm(P[0, m] - c, axis=1)
            lo[m], hi[m] = np.maximum(0.0, dd - r[m]), dd + r[m]
        m = (kind == _CODE["circle"])
        if m.any():
            dd = np.linalg.norm(P[0, m] - c, axis=1)
            lo[m], hi[m] = np.abs(dd - r[m]), dd + r[m]
        m = (kind == _CODE["box"])
        if m.any():
            b0, b1 = P[0, m], P[1, m]
            lo[m] = np.linalg.norm(np.clip(c, b0, b1) - c, axis=1)
            hi[m] = np.linalg.norm(np.maximum(np.abs(c - b0), np.abs(c - b1)), axis=1)
        m = (kind == _CODE["triangle"])
        if m.any():
            V = P[:, m]
            hi[m] = np.max(np.linalg.norm(V - c, axis=2), axis=0)
            lo[m] = _tri_dist_vec(V, c, self.deg[idx][m])
        return lo, hi


def _seg_dist_vec(a, b, p):
    ab = b - a
    L = np.einsum("ij,ij->i", ab, ab)
    s = np.einsum("ij,ij->i", p - a, ab) / np.where(L > 0, L, 1.0)
    s = np.clip(np.where(L > 0, s, 0.0), 0.0, 1.0)
    return np.linalg.norm(p - (a + s[:, None] * ab), axis=1)


def _tri_dist_vec(V, c, degenerate):
    a, b, cc = V[0], V[1], V[2]

    def orient(u, v):
        return (v[:, 0] - u[:, 0]) * (c[1] - u[:, 1]) - (v[:, 1] - u[:, 1]) * (c[0] - u[:, 0])

    o1, o2, o3 = orient(a, b), orient(b, cc), orient(cc, a)
    inside = (((o1 >= 0) & (o2 >= 0) & (o3 >= 0)) | ((o1 <= 0) & (o2 <= 0) & (o3 <= 0))) & ~degenerate
    p = np.broadcast_to(c, a.shape)
    d = np.minimum(np.minimum(_seg_dist_vec(a, b, p), _seg_dist_vec(b, cc, p)), _seg_dist_vec(cc, a, p))
    return np.where(inside, 0.0, d)
