"""Certified long-orbit cardinality tracking.

Exact coordinates roughly double in bit length per iteration, so orbits of
a few dozen steps cannot be carried exactly.  Sizes, boundary counts and
the absence of cocircularity only depend on predicate *signs*, though, and
those can be certified with interval arithmetic at a precision that grows
roughly linearly with the number of steps.

:func:`track` iterates exactly while coordinates stay small, then switches
to outward-rounded intervals (:mod:`mpmath.iv`).  Every orientation and
in-circle sign must be provably non-zero; otherwise the interval phase is
restarted from the last exact iterate at twice the precision.  A genuine
degeneracy (a zero sign) can never be certified, so such orbits end in
:class:`UncertifiedError` rather than a guess.
"""
from __future__ import annotations

from dataclasses import dataclass

from mpmath import iv

from .delaunay import GHOST, Triangulation
from .dynamics import StepStats, bound_verdicts
from .geom import GeometryError, as_pointset
from .voronoi import summarize


class UncertifiedError(GeometryError):
    """A predicate sign could not be certified at the maximum precision."""


class _Ambiguous(Exception):
    pass


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    raise _Ambiguous


def _orient(a, b, c):
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _incircle(a, b, c, d):
    rows = []
    for p in (a, b, c):
        u, v = p[0] - d[0], p[1] - d[1]
        rows.append((u, v, u * u + v * v))
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = rows
    return _sign(a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0))


def _circumcenter(a, b, c):
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    d = 2 * (bx * cy - by * cx)
    nb, nc = bx * bx + by * by, cx * cx + cy * cy
    return (a[0] + (cy * nb - by * nc) / d, a[1] + (bx * nc - cx * nb) / d)


def _interval_step(pts):
    """One certified iteration on interval points.

    Returns (stats of ``pts``, next interval point list).  Raises _Ambiguous
    when any needed sign straddles zero.
    """
    n = len(pts)
    if n < 3:
        return StepStats(n, n, 0, True), []
    # any order works for the triangulation; index order only matters for the
    # exactly-collinear case, which cannot be certified anyway
    tri = Triangulation(pts, _orient, _incircle)
    if tri.collinear:
        # all triples certified collinear is impossible with intervals
        raise _Ambiguous
    apex = tri.apex
    hull_edges = 0
    for (u, v), w in apex.items():
        if w == GHOST:
            hull_edges += 1
        elif u < v and u != GHOST and v != GHOST:
            w2 = apex[(v, u)]
            if w2 != GHOST:
                # strictly locally Delaunay everywhere <=> no cocircular fan
                if _incircle(pts[u], pts[v], pts[w], pts[w2]) >= 0:
                    raise _Ambiguous
    tris = tri.triangles()
    centers = [_circumcenter(pts[u], pts[v], pts[w]) for u, v, w in tris]
    # each hull edge is certified strictly convex, so |Bd| is the hull edge count
    return StepStats(n, hull_edges, 0, False), centers


@dataclass
class TrackedStep:
    n: int
    stats: StepStats
    mode: str                # "exact" or "interval"
    checks: dict[str, str]


def track(P, steps: int, *, exact_bits: int = 2048, start_prec: int = 128,
          max_prec: int = 1 << 15) -> list[TrackedStep]:
    """Sizes, |Bd| and I_c of iterates 0..steps (stopping early at the empty set)."""
    S = as_pointset(P)
    out: list[TrackedStep] = []
    history: list[StepStats] = []

    def record(n, stats, mode):
        history.append(stats)
        checks = {}
        if not stats.collinear:
            checks["identity"] = "pass"  # exact: checked by summarize; interval: by construction
        if n >= 1:
            checks.update(bound_verdicts(history))
        out.append(TrackedStep(n, stats, mode, checks))

    n = 0
    while True:
        s = summarize(S)
        record(n, StepStats(s.n_points, s.boundary_count, s.i_c, s.collinear), "exact")
        if not S or n == steps:
            return out
        nxt = s.vertex_set()
        if nxt.max_bit_length() > exact_bits:
            S = nxt
            n += 1
            break
        S, n = nxt, n + 1

    # interval phase from exact S at step n
    base_n, base_len = n, len(out)
    prec = start_prec
    while True:
        del out[base_len:]
        del history[base_len:]
        saved = iv.prec
        iv.prec = prec  # mpmath's interval context is process-global
        k = base_n
        try:
            pts = [(iv.mpf(p.x.numerator) / p.x.denominator,
                    iv.mpf(p.y.numerator) / p.y.denominator) for p in S]
            while True:
                stats, nxt = _interval_step(pts)
                record(k, stats, "interval")
                if not pts or k == steps:
                    return out
                pts, k = nxt, k + 1
        except _Ambiguous:
            if prec >= max_prec:
                raise UncertifiedError(f"sign undecidable at {prec} bits near step {k}") from None
            prec *= 2
        finally:
            iv.prec = saved
