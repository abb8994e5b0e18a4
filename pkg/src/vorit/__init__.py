"""Exact Voronoi-vertex iteration on finite rational point sets."""
from .geom import (DegenerateInputError, GeometryError, Point, PointSet, circumcenter, incircle,
                   orientation, point, squared_distance)
from .hull import HullClassification, classify, is_cocircular, is_collinear
from .voronoi import (EmptyCircle, InvariantViolation, Vertex, VoronoiSummary, diagram,
                      empty_circles, summarize, vertex_set)
from .dynamics import (Caps, OrbitRecord, ResourceLimitError, Similarity, apply_similarity,
                       are_similar, detect_period, iterate, orbit)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError", "GeometryError", "Point", "PointSet", "circumcenter", "incircle",
    "orientation", "point", "squared_distance", "HullClassification", "classify",
    "is_cocircular", "is_collinear", "EmptyCircle", "InvariantViolation", "Vertex",
    "VoronoiSummary", "diagram", "empty_circles", "summarize", "vertex_set", "Caps",
    "OrbitRecord", "ResourceLimitError", "Similarity", "apply_similarity", "are_similar",
    "detect_period", "iterate", "orbit",
]
