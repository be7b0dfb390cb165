"""Geodesics and TSP heuristics on randomly embedded random graphs."""

try:
    from geotsp._geotsp import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _geotsp import *  # noqa: F401,F403  (build-tree layout)
