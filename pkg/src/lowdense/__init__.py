"""Local search and separators for low-density geometric objects."""
from .config import DEFAULT, Config
from .division import Division, build_division, psi_for_epsilon, validate_division
from .geometry import AxisBox, Ball, Circle2, GeomObject, Point, Sphere, Triangle2, intersects
from .igraph import IntersectionGraph, build_intersection_graph, pairwise_density_proxy
from .localsearch import SearchProblem, SearchTrace, local_search, verify_local_optimality
from .separator import SeparatorError, SeparatorResult, sphere_separator

__version__ = "0.1.0"
