import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from vorit.dynamics import (FAIL, NA, PASS, Caps, ResourceLimitError, Similarity, StepStats,
                            apply_similarity, are_similar, bound_verdicts, detect_period,
                            iterate, orbit)
from vorit.geom import PointSet, point
from vorit.voronoi import summarize, vertex_set

from conftest import P, SQUARE, TRIANGLE_CENTER, point_sets, random_set, similarities


def test_similarity_validates():
    with pytest.raises(ValueError):
        Similarity(((1, 1), (0, 1)))
    with pytest.raises(ValueError):
        Similarity(((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        Similarity.from_parts(2, ((1, 1), (0, 1)))


def test_pythagorean_rotation():
    t = Similarity.rotation(F(3, 5), F(4, 5))
    assert t.k == 1 and t.orientation_preserving
    assert t(point(5, 0)) == point(3, 4)


def test_irrational_scale():
    # rotation by 45 degrees with scale sqrt(2): rational A, irrational k
    t = Similarity(((1, -1), (1, 1)))
    assert t.scale_squared == 2 and t.k is None and t.U is None
    S = P((0, 0), (3, 0), (0, 1), (2, 5))
    assert are_similar(S, apply_similarity(t, S)) is not None


def test_compose_and_inverse():
    t = Similarity.rotation(F(5, 13), F(12, 13), k=F(3, 2), x0=(1, -2), reflect=True)
    u = Similarity.rotation(F(-4, 5), F(3, 5), x0=(F(1, 3), 0))
    p = point(F(7, 3), -1)
    assert t.compose(u)(p) == t(u(p))
    assert t.inverse()(t(p)) == p
    assert not t.orientation_preserving


def test_non_similar_triangles():
    assert are_similar(P((0, 0), (1, 0), (0, 1)), P((0, 0), (2, 0), (0, 1))) is None


def test_similar_with_reflection():
    A = P((0, 0), (4, 0), (1, 2))
    B = P((0, 0), (4, 0), (1, -2))
    t = are_similar(A, B)
    assert t is not None and apply_similarity(t, A) == B


def test_similar_small_sets():
    assert are_similar(PointSet(), PointSet()) is not None
    t = are_similar(P((1, 1)), P((3, 0)))
    assert t(point(1, 1)) == point(3, 0)
    assert are_similar(P((1, 1)), P((3, 0), (1, 1))) is None


@settings(max_examples=200, deadline=None)
@given(point_sets, similarities())
def test_are_similar_finds_witness(S, t):
    T = apply_similarity(t, S)
    w = are_similar(S, T)
    assert w is not None and apply_similarity(w, S) == T


@settings(max_examples=150, deadline=None)
@given(point_sets, similarities())
def test_equivariance(S, t):
    assert vertex_set(apply_similarity(t, S)) == apply_similarity(t, vertex_set(S))


def test_iterate_examples():
    assert iterate(SQUARE, 1) == P((F(1, 2), F(1, 2)))
    assert iterate(SQUARE, 2) == PointSet()
    assert len(iterate(TRIANGLE_CENTER, 1)) == 3
    assert iterate(TRIANGLE_CENTER, 3) == PointSet()


@settings(max_examples=60, deadline=None)
@given(point_sets, st.integers(0, 2), st.integers(0, 2))
def test_semigroup(S, a, b):
    assert iterate(iterate(S, a), b) == iterate(S, a + b)


def test_orbit_square():
    rec = orbit(SQUARE, 10)
    assert rec.sizes == [4, 1, 0] and rec.status == "empty" and rec.terminated_at == 2
    assert rec.ok


def test_orbit_nine_points():
    rng = random.Random(110)
    S = random_set(rng, 9)
    rec = orbit(S, 3)
    assert rec.sizes == [9, 13, 21, 37]
    assert all(st.summary.boundary_count == 3 and st.summary.i_c == 0 for st in rec.steps)
    assert rec.ok and rec.status == "max-steps"


def test_orbit_caps():
    S = random_set(random.Random(110), 9)
    with pytest.raises(ResourceLimitError) as ei:
        orbit(S, 5, Caps(max_points=20))
    assert ei.value.step == 2 and ei.value.record.sizes == [9, 13]
    with pytest.raises(ResourceLimitError):
        orbit(S, 5, Caps(max_bits=40))
    assert len(orbit(S, 10, Caps(max_steps=2)).steps) == 3


def test_detect_period():
    assert detect_period(SQUARE, 8) is None
    assert detect_period(TRIANGLE_CENTER, 0) is None
    with pytest.raises(ResourceLimitError):
        detect_period(random_set(random.Random(110), 9), 5, Caps(max_points=15))


def test_bound_verdicts():
    h = [StepStats(9, 3, 0, False), StepStats(13, 3, 0, False)]
    assert bound_verdicts(h) == {"step_upper": PASS, "cumulative_upper": PASS,
                                 "boundary_monotone": PASS, "lower_bound": PASS}
    h = [StepStats(9, 3, 0, False), StepStats(14, 4, 0, False)]
    v = bound_verdicts(h)
    assert v["step_upper"] == FAIL and v["boundary_monotone"] == FAIL
    h = [StepStats(2, 2, 0, True), StepStats(0, 0, 0, True)]
    assert bound_verdicts(h)["step_upper"] == NA
    h = [StepStats(6, 4, 1, False), StepStats(5, 4, 0, False)]
    assert bound_verdicts(h)["lower_bound"] == NA


@settings(max_examples=80, deadline=None)
@given(point_sets)
def test_orbit_bounds_hold(S):
    rec = orbit(S, 3, Caps(max_points=2000, max_bits=4000))
    assert rec.failures() == []


def test_apply_similarity_examples():
    S = P((0, 0), (1, 1))
    assert apply_similarity(Similarity.identity(), S) == S
    assert apply_similarity(Similarity.from_parts(2, ((1, 0), (0, 1)), (1, 0)), S) == P((1, 0), (3, 2))


def test_two_point_sets_similar():
    assert are_similar(P((0, 0), (1, 0)), P((0, 0), (5, 5))) is not None


@settings(max_examples=60, deadline=None)
@given(point_sets, similarities(), similarities())
def test_similarity_is_equivalence(S, t, u):
    T, U = apply_similarity(t, S), apply_similarity(u, apply_similarity(t, S))
    assert are_similar(S, S) is not None
    back = are_similar(T, S)
    assert back is not None and apply_similarity(back, T) == S
    w1, w2 = are_similar(S, T), are_similar(T, U)
    assert apply_similarity(w2.compose(w1), S) == U


def test_small_set_corollaries():
    rng = random.Random(21)
    checked_int2 = 0
    for _ in range(400):
        S = random_set(rng, rng.randint(3, 8))
        s, V = summarize(S), vertex_set(S)
        if len(V) > len(S):
            assert len(S) > 5
        if s.interior_count == 2 and s.i_c == 0:
            assert len(V) == len(S)
            checked_int2 += 1
    assert checked_int2 > 0
