"""Exact planar geometry over the rationals.

Coordinates are :class:`fractions.Fraction` values.  The predicates convert
points to homogeneous integer triples ``(X, Y, W)`` with ``W > 0`` and
evaluate signs of integer determinants, so no intermediate fraction is ever
normalised.  Hot loops (triangulation, hull) call the ``*_h`` kernels
directly on pre-converted triples.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from fractions import Fraction
from typing import Iterable, NamedTuple


class GeometryError(Exception):
    """Base class for errors raised by this package."""


class DegenerateInputError(GeometryError, ValueError):
    """A predicate needing three non-collinear points got collinear ones."""


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def point(x, y) -> Point:
    """Build a point from anything :class:`Fraction` accepts (ints, strings, fractions)."""
    return Point(Fraction(x), Fraction(y))


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


# -- homogeneous kernels ---------------------------------------------------

def to_homogeneous(p: Point) -> tuple[int, int, int]:
    xn, xd = p.x.numerator, p.x.denominator
    yn, yd = p.y.numerator, p.y.denominator
    if xd == yd:
        return xn, yn, xd
    w = math.lcm(xd, yd)
    return xn * (w // xd), yn * (w // yd), w


def from_homogeneous(X: int, Y: int, W: int) -> Point:
    return Point(Fraction(X, W), Fraction(Y, W))


def orient_h(a, b, c) -> int:
    """Sign of the orientation determinant for homogeneous points (all W > 0)."""
    ax, ay, aw = a
    bx, by, bw = b
    cx, cy, cw = c
    det = (ax * (by * cw - bw * cy)
           - ay * (bx * cw - bw * cx)
           + aw * (bx * cy - by * cx))
    return _sign(det)


def incircle_h(a, b, c, d) -> int:
    """Raw in-circle sign: +1 when d is inside the circle through a, b, c
    *and* (a, b, c) is counterclockwise.  Flips with the orientation."""
    dx, dy, dw = d
    rows = []
    for px, py, pw in (a, b, c):
        u = px * dw - dx * pw
        v = py * dw - dy * pw
        m = pw * dw
        rows.append((u * m, v * m, u * u + v * v))
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = rows
    det = (a0 * (b1 * c2 - b2 * c1)
           - a1 * (b0 * c2 - b2 * c0)
           + a2 * (b0 * c1 - b1 * c0))
    return _sign(det)


def circumcenter_h(a, b, c) -> Point:
    """Exact circumcenter of three homogeneous points; raises on collinear input."""
    ax, ay, aw = a
    bx, by, bw = b
    cx, cy, cw = c
    # b - a and c - a, scaled by aw*bw and aw*cw respectively
    ub, vb = bx * aw - ax * bw, by * aw - ay * bw
    uc, vc = cx * aw - ax * cw, cy * aw - ay * cw
    sb, sc = aw * bw, aw * cw
    det = ub * vc - vb * uc
    if det == 0:
        raise DegenerateInputError("circumcenter of collinear points")
    nb = ub * ub + vb * vb
    nc = uc * uc + vc * vc
    den = 2 * det * sb * sc
    ox = vc * nb * sc - vb * nc * sb
    oy = ub * nc * sb - uc * nb * sc
    # center = a + (ox, oy) / den
    return Point(Fraction(ax * den + aw * ox, aw * den),
                 Fraction(ay * den + aw * oy, aw * den))


# -- public predicates on Points --------------------------------------------

def orientation(a: Point, b: Point, c: Point) -> int:
    """+1 if a, b, c turn counterclockwise, -1 if clockwise, 0 if collinear."""
    return orient_h(to_homogeneous(a), to_homogeneous(b), to_homogeneous(c))


def incircle(a: Point, b: Point, c: Point, d: Point) -> int:
    """+1 if d lies strictly inside the circle through a, b, c; 0 on it; -1 outside.

    The answer does not depend on the order of a, b, c.
    """
    ha, hb, hc = to_homogeneous(a), to_homogeneous(b), to_homogeneous(c)
    o = orient_h(ha, hb, hc)
    if o == 0:
        raise DegenerateInputError("incircle needs three non-collinear points")
    return o * incircle_h(ha, hb, hc, to_homogeneous(d))


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    return circumcenter_h(to_homogeneous(a), to_homogeneous(b), to_homogeneous(c))


def squared_distance(a: Point, b: Point) -> Fraction:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def bit_length(p: Point) -> int:
    """Largest bit length among the numerators and denominators of p."""
    return max(p.x.numerator.bit_length(), p.x.denominator.bit_length(),
               p.y.numerator.bit_length(), p.y.denominator.bit_length())


# -- point sets --------------------------------------------------------------

class PointSet(tuple):
    """Immutable, duplicate-free set of points in lexicographic (x, y) order."""

    __slots__ = ()

    def __new__(cls, points: Iterable = ()):
        pts = []
        for p in points:
            pts.append(p if type(p) is Point else Point(Fraction(p[0]), Fraction(p[1])))
        return super().__new__(cls, sorted(set(pts)))

    def __repr__(self):
        return f"PointSet({list(self)!r})"

    def __contains__(self, p):
        i = bisect_left(self, p)
        return i < len(self) and self[i] == p

    def homogeneous(self) -> list[tuple[int, int, int]]:
        return [to_homogeneous(p) for p in self]

    def max_bit_length(self) -> int:
        return max((bit_length(p) for p in self), default=0)


def as_pointset(points) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet(points)

