"""Convex hull, boundary/interior split and boundary neighbours.

A point is on the boundary when it lies anywhere on the hull's boundary,
including the relative interior of a hull edge.  Two boundary points are
neighbours when the segment between them runs along the hull boundary with
no third point of the set on it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geom import DegenerateInputError, Point, PointSet, as_pointset, incircle_h, orient_h


@dataclass(frozen=True)
class HullClassification:
    boundary: tuple[Point, ...]       # cyclic, counterclockwise, starts at the lex-min point
    interior: tuple[Point, ...]       # lexicographic
    neighbor_pairs: tuple[tuple[Point, Point], ...]
    collinear: bool


def _strict_hull(pts, hom):
    """Indices of the strict hull vertices (counterclockwise) of lex-sorted points."""
    n = len(pts)
    if n <= 2:
        return list(range(n))
    lower: list[int] = []
    for i in range(n):
        while len(lower) >= 2 and orient_h(hom[lower[-2]], hom[lower[-1]], hom[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(range(n)):
        while len(upper) >= 2 and orient_h(hom[upper[-2]], hom[upper[-1]], hom[i]) <= 0:
            upper.pop()
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    # fully collinear input collapses to the two extreme points
    return hull if len(hull) > 2 else [0, n - 1]


def classify(P) -> HullClassification:
    P = as_pointset(P)
    n = len(P)
    if n <= 2 or is_collinear(P):
        pairs = tuple(zip(P, P[1:]))
        return HullClassification(tuple(P), (), pairs, True)

    hom = P.homogeneous()
    hull = _strict_hull(P, hom)
    on_hull = set(hull)
    rest = [i for i in range(n) if i not in on_hull]
    cycle: list[int] = []
    used: set[int] = set()
    for k, i in enumerate(hull):
        j = hull[(k + 1) % len(hull)]
        # any point on the supporting line of a hull edge lies on the edge itself
        mids = [m for m in rest if m not in used and orient_h(hom[i], hom[j], hom[m]) == 0]
        mids.sort(reverse=P[i] > P[j])
        used.update(mids)
        cycle.append(i)
        cycle.extend(mids)

    boundary = [P[i] for i in cycle]
    interior = tuple(P[i] for i in rest if i not in used)
    pairs = []
    for k, p in enumerate(boundary):
        q = boundary[(k + 1) % len(boundary)]
        pairs.append((p, q) if p < q else (q, p))
    return HullClassification(tuple(boundary), interior, tuple(pairs), False)


def is_collinear(P) -> bool:
    P = as_pointset(P)
    if len(P) <= 2:
        return True
    hom = P.homogeneous()
    a, b = hom[0], hom[1]
    return all(orient_h(a, b, c) == 0 for c in hom[2:])


def is_cocircular(P) -> bool:
    """True when every point of P lies on one circle.  Needs |P| >= 3, not collinear."""
    P = as_pointset(P)
    if len(P) < 3 or is_collinear(P):
        raise DegenerateInputError("cocircularity needs at least three non-collinear points")
    hom = P.homogeneous()
    a, b = hom[0], hom[1]
    c = next(h for h in hom[2:] if orient_h(a, b, h) != 0)
    return all(incircle_h(a, b, c, h) == 0 for h in hom)
