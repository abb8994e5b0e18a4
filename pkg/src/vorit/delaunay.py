"""Incremental Delaunay triangulation with exact predicates.

Bowyer-Watson insertion over homogeneous integer points, with a single
ghost vertex closing the hull so that outside-hull insertions need no
special casing.  A ghost triangle ``(x, y, GHOST)`` stands for the open
half-plane to the left of ``x -> y`` plus the open segment ``xy``.

Triangles are kept as a map from each directed edge ``(u, v)`` to the apex
``w`` of the counterclockwise triangle ``(u, v, w)`` that owns it.  Point
indices are expected to follow lexicographic order of the points (as in a
:class:`~vorit.geom.PointSet`), which is what the on-segment test relies on.

The two predicates are injectable so the same code can run on other point
representations; a predicate may raise to abort construction.
"""
from __future__ import annotations

import random

from .geom import incircle_h, orient_h

GHOST = -1

_SHUFFLE_SEED = 0x5EED


def canon(t):
    u, v, w = t
    if u <= v and u <= w:
        return t
    if v <= w:
        return (v, w, u)
    return (w, u, v)


class Triangulation:
    def __init__(self, hom, orient=orient_h, incircle=incircle_h):
        self.hom = hom
        self.orient = orient
        self.incircle = incircle
        self.apex: dict[tuple[int, int], int] = {}
        self._rng = random.Random(_SHUFFLE_SEED)
        self._last = None
        self.collinear = True
        self._build()

    # -- structure -----------------------------------------------------

    def _add(self, u, v, w):
        apex = self.apex
        apex[(u, v)] = w
        apex[(v, w)] = u
        apex[(w, u)] = v

    def _remove(self, u, v, w):
        apex = self.apex
        del apex[(u, v)]
        del apex[(v, w)]
        del apex[(w, u)]

    def triangles(self):
        """Real (non-ghost) triangles, each once, counterclockwise."""
        seen = set()
        out = []
        for (u, v), w in self.apex.items():
            if GHOST in (u, v, w):
                continue
            t = canon((u, v, w))
            if t not in seen:
                seen.add(t)
                out.append(t)
        out.sort()
        return out

    # -- predicates ----------------------------------------------------

    def _in_conflict(self, t, p):
        hom = self.hom
        u, v, w = t
        if u == GHOST:
            x, y = v, w
        elif v == GHOST:
            x, y = w, u
        elif w == GHOST:
            x, y = u, v
        else:
            return self.incircle(hom[u], hom[v], hom[w], hom[p]) > 0
        o = self.orient(hom[x], hom[y], hom[p])
        if o != 0:
            return o > 0
        return min(x, y) < p < max(x, y)

    # -- construction --------------------------------------------------

    def _build(self):
        hom = self.hom
        n = len(hom)
        if n < 3:
            return
        orient = self.orient
        order = list(range(n))
        self._rng.shuffle(order)
        a, b = order[0], order[1]
        k = next((k for k in range(2, n) if orient(hom[a], hom[b], hom[order[k]]) != 0), None)
        if k is None:
            return
        self.collinear = False
        c = order[k]
        order[2], order[k] = order[k], order[2]
        if orient(hom[a], hom[b], hom[c]) < 0:
            b, c = c, b
        self._add(a, b, c)
        self._add(b, a, GHOST)
        self._add(c, b, GHOST)
        self._add(a, c, GHOST)
        self._last = (a, b, c)
        for p in order[3:]:
            self._insert(p)

    def _locate(self, p):
        """Walk from the last created triangle to one in conflict with p."""
        hom = self.hom
        apex = self.apex
        rng = self._rng
        orient = self.orient
        hp = hom[p]
        t = self._last
        for _ in range(4 * len(hom) + 16):
            u, v, w = t
            edges = ((u, v), (v, w), (w, u))
            s = rng.randrange(3)
            for i in range(3):
                a, b = edges[(s + i) % 3]
                if orient(hom[a], hom[b], hp) < 0:
                    c = apex[(b, a)]
                    t = (b, a, c)
                    if c == GHOST:
                        return t
                    break
            else:
                return t
        # a stochastic walk this long means something odd; fall back to a scan
        for (u, v), w in self.apex.items():
            if self._in_conflict((u, v, w), p):
                return (u, v, w)
        raise RuntimeError("no triangle in conflict with inserted point")

    def _insert(self, p):
        apex = self.apex
        start = canon(self._locate(p))
        cavity = {start}
        rejected = set()
        stack = [start]
        boundary = []
        while stack:
            u, v, w = stack.pop()
            for a, b in ((u, v), (v, w), (w, u)):
                nt = canon((b, a, apex[(b, a)]))
                if nt in cavity:
                    continue
                if nt not in rejected and self._in_conflict(nt, p):
                    cavity.add(nt)
                    stack.append(nt)
                else:
                    rejected.add(nt)
                    boundary.append((a, b))
        for t in cavity:
            self._remove(*t)
        last = None
        for a, b in boundary:
            self._add(a, b, p)
            if a != GHOST and b != GHOST:
                last = (a, b, p)
        if last is not None:
            self._last = last
