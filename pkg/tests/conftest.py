import numpy as np
import pytest

from lowdense.geometry import Ball, Point, Triangle2
from lowdense.igraph import IntersectionGraph


def random_disks(rng, n, side=None, rmin=0.3, rmax=1.0):
    """n disks of random radius in a square sized for a few overlaps each."""
    side = side if side is not None else 1.6 * np.sqrt(n)
    c = rng.uniform(0, side, size=(n, 2))
    r = rng.uniform(rmin, rmax, size=n)
    return [Ball(c[i], r[i], id=i) for i in range(n)]


def random_graph(rng, n, p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return IntersectionGraph.from_edges(n, edges)


def random_triangles_and_points(rng, m, k, side=3.0):
    tris = []
    while len(tris) < m:
        v = rng.uniform(0, side, size=(3, 2))
        if abs(np.linalg.det(np.array([v[1] - v[0], v[2] - v[0]]))) > 0.2:
            tris.append(Triangle2(*v, id=len(tris)))
    pts = rng.uniform(0, side, size=(k, 2))
    return tris, pts


def disk_chain(n, gap=0.0):
    """Unit disks in a row; consecutive ones touch (gap=0) so the graph is a path."""
    return [Ball([2.0 * i + gap * i, 0.0], 1.0, id=i) for i in range(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
