"""Brute-force reference for the Voronoi fast path.

Everything here works from first principles on :class:`Fraction`
coordinates and deliberately shares no code with the Delaunay route:
circumcenters come from Cramer's rule on the two bisector equations,
emptiness from squared distances, the hull from an all-pairs supporting
line test, and edges from consecutive support points around each circle.
O(n^4); meant for a few dozen points at most.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

from .geom import Point, as_pointset
from .voronoi import EmptyCircle, InvariantViolation, Vertex, VoronoiSummary


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _d2(a: Point, b: Point) -> Fraction:
    return (a.x - b.x) ** 2 + (a.y - b.y) ** 2


def _solve_center(a: Point, b: Point, c: Point):
    # 2(b-a).x = |b|^2-|a|^2 and 2(c-a).x = |c|^2-|a|^2
    a11, a12 = 2 * (b.x - a.x), 2 * (b.y - a.y)
    a21, a22 = 2 * (c.x - a.x), 2 * (c.y - a.y)
    r1 = b.x ** 2 + b.y ** 2 - a.x ** 2 - a.y ** 2
    r2 = c.x ** 2 + c.y ** 2 - a.x ** 2 - a.y ** 2
    det = a11 * a22 - a12 * a21
    if det == 0:
        return None
    return Point((r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det)


def brute_force_empty_circles(P) -> list[EmptyCircle]:
    P = as_pointset(P)
    found: dict[Point, EmptyCircle] = {}
    for a, b, c in combinations(P, 3):
        center = _solve_center(a, b, c)
        if center is None or center in found:
            continue
        r2 = _d2(center, a)
        dists = [_d2(center, p) for p in P]
        if any(d < r2 for d in dists):
            continue
        support = tuple(p for p, d in zip(P, dists) if d == r2)
        found[center] = EmptyCircle(center, r2, support)
    return [found[c] for c in sorted(found)]


def brute_force_neighbor_pairs(P):
    """Unordered pairs whose segment lies on the hull boundary with nothing between."""
    P = as_pointset(P)
    pairs = []
    for p, q in combinations(P, 2):
        others = [r for r in P if r != p and r != q]
        sides = [_cross(p, q, r) for r in others]
        if not any(sides):
            continue  # collinear set
        if not (all(s >= 0 for s in sides) or all(s <= 0 for s in sides)):
            continue
        lo, hi = min(p, q), max(p, q)
        if any(s == 0 and lo < r < hi for s, r in zip(sides, others)):
            continue
        pairs.append((p, q))
    return pairs


def _angular_order(center: Point, pts):
    def half(p):
        dx, dy = p.x - center.x, p.y - center.y
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        c = _cross(center, p, q)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(pts, key=cmp_to_key(cmp))


def brute_force_edges(P, circles=None):
    """Enumerate Voronoi edges as (p, p', q1, q2) with q2 None for infinite edges."""
    P = as_pointset(P)
    if circles is None:
        circles = brute_force_empty_circles(P)
    adjacent_at: dict[tuple[Point, Point], list[Point]] = {}
    for circ in circles:
        ring = _angular_order(circ.center, circ.support)
        for i, p in enumerate(ring):
            q = ring[(i + 1) % len(ring)]
            key = (p, q) if p < q else (q, p)
            adjacent_at.setdefault(key, []).append(circ.center)
    hull_pairs = {(p, q) if p < q else (q, p) for p, q in brute_force_neighbor_pairs(P)}
    edges = []
    for key in sorted(adjacent_at):
        at = adjacent_at[key]
        if len(at) == 2 and key not in hull_pairs:
            edges.append((key[0], key[1], min(at), max(at)))
        elif len(at) == 1 and key in hull_pairs:
            edges.append((key[0], key[1], at[0], None))
        else:
            raise InvariantViolation(f"pair {key} adjacent at {len(at)} circles, "
                                     f"hull neighbours: {key in hull_pairs}")
    if circles and hull_pairs - set(adjacent_at):
        raise InvariantViolation("hull neighbour pair with no Voronoi edge")
    return edges


def brute_force_summary(P) -> VoronoiSummary:
    P = as_pointset(P)
    n = len(P)
    pairs = brute_force_neighbor_pairs(P)
    collinear = n <= 2 or not pairs
    boundary = {p for pair in pairs for p in pair} if not collinear else set(P)
    if collinear:
        return VoronoiSummary(n, (), 0, 0, 0, n, 0, True)
    circles = brute_force_empty_circles(P)
    edges = brute_force_edges(P, circles)
    degree = {c.center: 0 for c in circles}
    for _, _, q1, q2 in edges:
        degree[q1] += 1
        if q2 is not None:
            degree[q2] += 1
    vertices = tuple(Vertex(c.center, degree[c.center], len(c.support)) for c in circles)
    n_inf = sum(1 for e in edges if e[3] is None)
    return VoronoiSummary(
        n_points=n,
        vertices=vertices,
        n_finite_edges=len(edges) - n_inf,
        n_infinite_edges=n_inf,
        i_c=sum(len(c.support) - 3 for c in circles),
        boundary_count=len(boundary),
        interior_count=n - len(boundary),
        collinear=False,
    )


# -- explicit cells ----------------------------------------------------------

def _clip(poly, a, b, c):
    """Keep the part of convex polygon ``poly`` with a*x + b*y <= c."""
    out = []
    m = len(poly)
    for i in range(m):
        s, e = poly[i], poly[(i + 1) % m]
        fs = a * s.x + b * s.y - c
        fe = a * e.x + b * e.y - c
        if fs <= 0:
            out.append(s)
        if (fs < 0 < fe) or (fe < 0 < fs):
            t = fs / (fs - fe)
            out.append(Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)))
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def bounding_box(P, circles):
    pts = list(P) + [c.center for c in circles]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    pad = max(max(xs) - min(xs), max(ys) - min(ys)) + 1
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def brute_force_cells(P, box=None):
    """Each generator's cell as the intersection of its bisector half-planes,
    cut down to a box that strictly contains P and every Voronoi vertex."""
    P = as_pointset(P)
    if box is None:
        box = bounding_box(P, brute_force_empty_circles(P))
    x0, y0, x1, y1 = box
    square = [Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)]
    cells = {}
    for p in P:
        poly = square
        for q in P:
            if q == p:
                continue
            # |x-p|^2 <= |x-q|^2  <=>  2(q-p).x <= |q|^2 - |p|^2
            poly = _clip(poly, 2 * (q.x - p.x), 2 * (q.y - p.y),
                         q.x ** 2 + q.y ** 2 - p.x ** 2 - p.y ** 2)
        cells[p] = poly
    return cells, box


def cell_angle_violations(P):
    """Check every finite corner of every reconstructed cell.

    Returns a list of problems: corners whose interior angle is not strictly
    below pi, and cells whose finite corners disagree with the empty-circle
    centers supported by that generator.
    """
    P = as_pointset(P)
    circles = brute_force_empty_circles(P)
    cells, (x0, y0, x1, y1) = brute_force_cells(P, bounding_box(P, circles))
    problems = []
    for p, poly in cells.items():
        expected = {c.center for c in circles if p in c.support}
        corners = set()
        m = len(poly)
        for i, q in enumerate(poly):
            if not (x0 < q.x < x1 and y0 < q.y < y1):
                continue
            corners.add(q)
            if _cross(poly[i - 1], q, poly[(i + 1) % m]) <= 0:
                problems.append(f"cell of {p}: angle at {q} is not below pi")
        if corners != expected:
            problems.append(f"cell of {p}: corners {sorted(corners)} != vertices {sorted(expected)}")
    return problems
