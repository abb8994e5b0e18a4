"""Voronoi vertices, degrees and edge counts via the Delaunay dual.

Every Delaunay triangle's circumcircle is empty.  Triangles sharing one
circumcircle (a cocircular fan) are merged into a single vertex whose
support is every generator on that circle; interior diagonals of such a fan
are not Voronoi edges.  All counts are cross-checked against each other
and against the vertex-counting identity on every call.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .delaunay import GHOST, Triangulation, canon
from .geom import GeometryError, Point, PointSet, as_pointset, squared_distance
from .geom import circumcenter_h
from .hull import HullClassification, classify


class InvariantViolation(GeometryError, AssertionError):
    """An identity that must always hold failed: always a bug."""


@dataclass(frozen=True)
class EmptyCircle:
    center: Point
    squared_radius: Fraction
    support: tuple[Point, ...]


@dataclass(frozen=True)
class Vertex:
    point: Point
    degree: int
    support_size: int


@dataclass(frozen=True)
class VoronoiSummary:
    n_points: int
    vertices: tuple[Vertex, ...]
    n_finite_edges: int
    n_infinite_edges: int
    i_c: int
    boundary_count: int
    interior_count: int
    collinear: bool

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> PointSet:
        return PointSet(v.point for v in self.vertices)

    def predicted_vertex_count(self) -> int:
        """Right-hand side of |V(P)| = 2|P| - |Bd(P)| - I_c(P) - 2."""
        return 2 * self.n_points - self.boundary_count - self.i_c - 2

    def identity_holds(self) -> bool:
        if self.collinear:
            return self.n_vertices == 0
        return self.n_vertices == self.predicted_vertex_count()


@dataclass(frozen=True)
class VoronoiEdge:
    """Edge on the bisector of generators ``p`` and ``q``.

    ``end`` is None for an infinite edge; ``direction`` then points away
    from the hull along the ray.
    """
    p: Point
    q: Point
    start: Point
    end: Point | None
    direction: tuple[Fraction, Fraction] | None = None


@dataclass
class Diagram:
    points: PointSet
    hull: HullClassification | None
    circles: list[EmptyCircle]
    edges: list[VoronoiEdge] = field(default_factory=list)


def _merged_circles(P: PointSet, tri: Triangulation):
    """Group Delaunay triangles by exact circumcenter.

    Returns (centers, supports, owner) where ``owner`` maps each triangle to
    its group index; groups are ordered by center.
    """
    hom = tri.hom
    by_center: dict[Point, set[int]] = {}
    tri_center = {}
    for t in tri.triangles():
        c = circumcenter_h(hom[t[0]], hom[t[1]], hom[t[2]])
        by_center.setdefault(c, set()).update(t)
        tri_center[t] = c
    centers = sorted(by_center)
    index = {c: i for i, c in enumerate(centers)}
    supports = [sorted(by_center[c]) for c in centers]
    owner = {t: index[c] for t, c in tri_center.items()}
    return centers, supports, owner


def _triangulate(P: PointSet):
    if len(P) < 3:
        return None
    tri = Triangulation(P.homogeneous())
    return None if tri.collinear else tri


def vertex_set(P) -> PointSet:
    """The Voronoi vertices of P (empty for |P| <= 2 or collinear P)."""
    P = as_pointset(P)
    tri = _triangulate(P)
    if tri is None:
        return PointSet()
    hom = tri.hom
    return PointSet(circumcenter_h(hom[u], hom[v], hom[w]) for u, v, w in tri.triangles())


def empty_circles(P) -> list[EmptyCircle]:
    P = as_pointset(P)
    tri = _triangulate(P)
    if tri is None:
        return []
    centers, supports, _ = _merged_circles(P, tri)
    return [EmptyCircle(c, squared_distance(c, P[s[0]]), tuple(P[i] for i in s))
            for c, s in zip(centers, supports)]


def diagram(P, *, with_geometry: bool = False):
    """Build the merged Voronoi structure of P.

    Returns (Diagram, summary).  Edge geometry is only materialised when
    ``with_geometry`` is set (the renderer needs it, the counters do not).
    """
    P = as_pointset(P)
    n = len(P)
    hull = classify(P) if n else None
    tri = _triangulate(P)
    if tri is None:
        summary = VoronoiSummary(n, (), 0, 0, 0, len(hull.boundary) if hull else 0,
                                 len(hull.interior) if hull else 0, True)
        return Diagram(P, hull, []), summary

    centers, supports, owner = _merged_circles(P, tri)
    apex = tri.apex
    degree = [0] * len(centers)
    n_finite = n_infinite = 0
    edges = []
    for (u, v), w in apex.items():
        if u > v or u == GHOST:
            continue
        w2 = apex[(v, u)]
        if w == GHOST or w2 == GHOST:
            # hull edge: one infinite Voronoi edge at the far side's vertex
            inner = (u, v, w) if w != GHOST else (v, u, w2)
            g = owner[canon(inner)]
            degree[g] += 1
            n_infinite += 1
            if with_geometry:
                a, b = P[inner[0]], P[inner[1]]
                # inner is counterclockwise, so the outside is to the right of a -> b
                edges.append(VoronoiEdge(a, b, centers[g], None, (b.y - a.y, a.x - b.x)))
            continue
        g1 = owner[canon((u, v, w))]
        g2 = owner[canon((v, u, w2))]
        if g1 == g2:
            continue
        degree[g1] += 1
        degree[g2] += 1
        n_finite += 1
        if with_geometry:
            edges.append(VoronoiEdge(P[u], P[v], centers[g1], centers[g2]))

    vertices = tuple(Vertex(c, d, len(s)) for c, d, s in zip(centers, degree, supports))
    i_c = sum(len(s) - 3 for s in supports)
    n_bd, n_int = len(hull.boundary), len(hull.interior)
    summary = VoronoiSummary(n, vertices, n_finite, n_infinite, i_c, n_bd, n_int, False)
    _check(summary, hull)
    circles = []
    if with_geometry:
        circles = [EmptyCircle(c, squared_distance(c, P[s[0]]), tuple(P[i] for i in s))
                   for c, s in zip(centers, supports)]
        edges.sort(key=lambda e: (e.p, e.q))
    return Diagram(P, hull, circles, edges), summary


def _check(s: VoronoiSummary, hull: HullClassification):
    V = s.n_vertices
    problems = []
    if s.n_infinite_edges != len(hull.neighbor_pairs):
        problems.append(f"infinite edges {s.n_infinite_edges} != boundary neighbour pairs "
                        f"{len(hull.neighbor_pairs)}")
    if any(v.degree != v.support_size for v in s.vertices):
        problems.append("vertex degree differs from its circle's support size")
    i_c_deg = sum(v.degree - 3 for v in s.vertices)
    if i_c_deg != s.i_c:
        problems.append(f"I_c by degree {i_c_deg} != I_c by circles {s.i_c}")
    if s.n_finite_edges != V + s.interior_count - 1:
        problems.append(f"finite edges {s.n_finite_edges} != Euler count {V + s.interior_count - 1}")
    if sum(v.degree for v in s.vertices) != s.n_infinite_edges + 2 * s.n_finite_edges:
        problems.append("degree sum differs from edge incidences")
    if not s.identity_holds():
        problems.append(f"|V| = {V} but 2|P| - |Bd| - I_c - 2 = {s.predicted_vertex_count()}")
    if problems:
        raise InvariantViolation("; ".join(problems))


def summarize(P) -> VoronoiSummary:
    return diagram(P)[1]
