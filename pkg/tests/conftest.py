import random
import sys
from fractions import Fraction as F

from hypothesis import strategies as st

from vorit.geom import Point, PointSet


def P(*coords):
    return PointSet(Point(F(x), F(y)) for x, y in coords)


SQUARE = P((0, 0), (1, 0), (0, 1), (1, 1))
TRIANGLE_CENTER = P((0, 0), (4, 0), (0, 4), (1, 1))
COLLINEAR = P((0, 0), (1, 1), (2, 2), (5, 5))
GRID_CENTER = P((0, 0), (2, 0), (0, 2), (2, 2), (1, 1))


def grid(nx, ny):
    return P(*((i, j) for i in range(nx) for j in range(ny)))


def regular_hexagon_center():
    # no regular hexagon has rational vertices; this one is cocircular and
    # centrally symmetric, which is what the degenerate case needs
    return P((5, 0), (3, 4), (-3, 4), (-5, 0), (-3, -4), (3, -4), (0, 0))


def cocircular_fan(k):
    """k points on the circle of radius 25 (many integer points lie on it)."""
    pts = [(7, 24), (15, 20), (20, 15), (24, 7), (25, 0), (24, -7), (20, -15),
           (15, -20), (7, -24), (0, -25), (-7, -24), (-15, -20), (-20, -15),
           (-24, -7), (-25, 0), (-24, 7), (-20, 15), (-15, 20), (-7, 24), (0, 25)]
    return P(*pts[:k])


DEGENERATE_FIXTURES = {
    "square": SQUARE,
    "triangle_center": TRIANGLE_CENTER,
    "grid_center": GRID_CENTER,
    "hexagon_center": regular_hexagon_center(),
    "fan4": cocircular_fan(4),
    "fan7": cocircular_fan(7),
    "fan12": cocircular_fan(12),
    "fan12_center": PointSet(list(cocircular_fan(12)) + [Point(F(0), F(0))]),
    "fan20": cocircular_fan(20),
    "collinear": COLLINEAR,
    "collinear_pair": P((0, 0), (3, 1)),
    "single": P((1, 2)),
    "empty": PointSet(),
    "grid3": grid(3, 3),
    "grid4x3": grid(4, 3),
    "grid5x2": grid(5, 2),
    "hull_edge_points": P((0, 0), (4, 0), (2, 0), (1, 0), (4, 4), (0, 4), (2, 4), (0, 2), (2, 1)),
    "two_rows": P((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)),
}


def random_set(rng: random.Random, n: int, denom: int = 1 << 16) -> PointSet:
    pts = set()
    while len(pts) < n:
        pts.add(Point(F(rng.randrange(denom), denom), F(rng.randrange(denom), denom)))
    return PointSet(pts)


def small_grid_set(rng: random.Random, n: int, side: int = 6) -> PointSet:
    """Points on a small integer grid: plenty of collinearity and cocircularity."""
    n = min(n, side * side)
    return PointSet(Point(F(x), F(y)) for x, y in rng.sample(
        [(i, j) for i in range(side) for j in range(side)], n))


coord = st.fractions(min_value=-20, max_value=20, max_denominator=8)
points = st.builds(Point, coord, coord)
small_ints = st.integers(min_value=-6, max_value=6)
lattice_points = st.builds(lambda x, y: Point(F(x), F(y)), small_ints, small_ints)
point_sets = st.one_of(
    st.lists(points, min_size=0, max_size=14).map(PointSet),
    st.lists(lattice_points, min_size=0, max_size=14).map(PointSet),
)

# (cos, sin) of rotations with rational entries from Pythagorean triples
PYTHAGOREAN = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (12, 35, 37),
               (9, 40, 41), (28, 45, 53), (11, 60, 61), (33, 56, 65), (16, 63, 65), (1, 0, 1)]


@st.composite
def similarities(draw):
    from vorit.dynamics import Similarity
    a, b, c = draw(st.sampled_from(PYTHAGOREAN))
    sa, sb = draw(st.sampled_from([1, -1])), draw(st.sampled_from([1, -1]))
    swap = draw(st.booleans())
    cos, sin = (F(sa * a, c), F(sb * b, c)) if not swap else (F(sa * b, c), F(sb * a, c))
    k = draw(st.fractions(min_value=F(1, 8), max_value=8, max_denominator=9).filter(lambda v: v > 0))
    x0 = (draw(coord), draw(coord))
    return Similarity.rotation(cos, sin, k, x0, reflect=draw(st.booleans()))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
