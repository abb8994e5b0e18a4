import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from vorit.delaunay import Triangulation
from vorit.geom import PointSet, point, squared_distance
from vorit.voronoi import diagram, empty_circles, summarize, vertex_set
from vorit.oracle import brute_force_empty_circles

from conftest import (COLLINEAR, DEGENERATE_FIXTURES, GRID_CENTER, P, SQUARE, TRIANGLE_CENTER,
                      grid, point_sets, random_set)


def test_square():
    s = summarize(SQUARE)
    assert s.vertex_set() == P((F(1, 2), F(1, 2)))
    assert (s.i_c, s.boundary_count, s.n_infinite_edges, s.n_finite_edges) == (1, 4, 4, 0)
    assert s.vertices[0].degree == 4


def test_triangle_center():
    s = summarize(TRIANGLE_CENTER)
    assert s.n_vertices == 3 and s.i_c == 0
    assert (s.n_finite_edges, s.n_infinite_edges) == (3, 3)
    assert all(v.degree == 3 for v in s.vertices)


def test_grid_center_circles():
    circles = empty_circles(GRID_CENTER)
    centers = [c.center for c in circles]
    assert sorted(centers) == sorted([point(1, 0), point(2, 1), point(1, 2), point(0, 1)])
    assert [c.center for c in brute_force_empty_circles(GRID_CENTER)] == centers
    assert all(len(c.support) == 3 and c.squared_radius == 1 for c in circles)


def test_grid3_cocircularity():
    s = summarize(grid(3, 3))
    # four unit cells, each an empty circle through 4 lattice points
    assert s.n_vertices == 4 and s.i_c == 4


def test_collinear_and_small_sets_are_empty():
    for S in (COLLINEAR, P((0, 0), (1, 2)), P((3, 3)), PointSet()):
        s = summarize(S)
        assert s.collinear and s.n_vertices == 0
        assert vertex_set(S) == PointSet()


def test_cocircular_set_one_vertex():
    s = summarize(P((3, 4), (5, 0), (-5, 0), (0, 5)))
    assert s.vertex_set() == P((0, 0))
    assert s.i_c == 1


def test_edge_geometry_triangle_center():
    diag, _ = diagram(TRIANGLE_CENTER, with_geometry=True)
    finite = [e for e in diag.edges if e.end is not None]
    rays = [e for e in diag.edges if e.end is None]
    assert len(finite) == 3 and len(rays) == 3
    for e in rays:
        # the bisector direction, pointing where p and q stay nearest forever
        assert (e.q.x - e.p.x) * e.direction[0] + (e.q.y - e.p.y) * e.direction[1] == 0
        far = point(e.start.x + 1000 * e.direction[0], e.start.y + 1000 * e.direction[1])
        r2 = squared_distance(far, e.p)
        assert all(squared_distance(far, g) > r2 for g in TRIANGLE_CENTER if g not in (e.p, e.q))


@pytest.mark.parametrize("name", sorted(DEGENERATE_FIXTURES))
def test_fixtures_satisfy_identity(name):
    s = summarize(DEGENERATE_FIXTURES[name])
    assert s.identity_holds()


def test_insertion_order_irrelevant():
    rng = random.Random(4)
    S = random_set(rng, 30)
    hom = S.homogeneous()
    a = Triangulation(hom).triangles()
    rev = list(reversed(hom))
    b = Triangulation(rev).triangles()
    n = len(hom)
    remap = sorted(tuple(sorted(n - 1 - i for i in t)) for t in b)
    assert sorted(tuple(sorted(t)) for t in a) == remap


@settings(max_examples=300, deadline=None)
@given(point_sets)
def test_counting_identity(S):
    s = summarize(S)  # raises on any internal inconsistency
    if not s.collinear:
        assert s.n_vertices == 2 * len(S) - s.boundary_count - s.i_c - 2
        assert s.n_finite_edges == s.n_vertices + s.interior_count - 1
        assert sum(v.degree for v in s.vertices) == s.n_infinite_edges + 2 * s.n_finite_edges
        assert all(v.degree >= 3 for v in s.vertices)


@settings(max_examples=200, deadline=None)
@given(point_sets)
def test_vertex_set_matches_summary(S):
    assert vertex_set(S) == summarize(S).vertex_set()
