"""Plain-text point files.

One point per line, ``x y``; each coordinate is an integer, a decimal
literal (``0.125``, ``-3e-2``) or a fraction ``p/q``.  ``#`` starts a comment
and blank lines are skipped.  Decimals are read exactly in base 10; output
always uses exact fractions, so a write/read round trip is lossless.
"""
from __future__ import annotations

import logging
import random
import sys
from fractions import Fraction

from .geom import Point, PointSet
from .voronoi import summarize

log = logging.getLogger(__name__)

# iterates carry integers far beyond the default str() digit limit
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class PointFileError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _coord(tok: str, lineno: int) -> Fraction:
    t = tok.lower()
    if "nan" in t or "inf" in t:
        raise PointFileError(f"not a finite number: {tok!r}", lineno)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise PointFileError(f"bad coordinate {tok!r}", lineno) from None


def parse_points(text: str) -> PointSet:
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise PointFileError(f"expected 2 coordinates, got {len(toks)}", lineno)
        pts.append(Point(_coord(toks[0], lineno), _coord(toks[1], lineno)))
    P = PointSet(pts)
    if len(P) != len(pts):
        log.warning("dropped %d duplicate point(s)", len(pts) - len(P))
    return P


def read_points(path) -> PointSet:
    if path == "-":
        return parse_points(sys.stdin.read())
    with open(path, encoding="utf-8") as f:
        return parse_points(f.read())


def format_points(P) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in P)


def write_points(P, path):
    text = format_points(P)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def random_points(count: int, seed: int, box=(0, 0, 1, 1), denominator: int = 1 << 16,
                  general_position: bool = False) -> PointSet:
    """``count`` distinct points on the grid (1/denominator)Z^2 inside ``box``.

    Same arguments, same set.  With ``general_position`` the draw is repeated
    (continuing the same random stream) until the set has no cocircularity.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    x0, y0, x1, y1 = (Fraction(v) for v in box)
    if x1 < x0 or y1 < y0:
        raise ValueError("box must be given as x0 y0 x1 y1 with x0 <= x1, y0 <= y1")
    nx = int((x1 - x0) * denominator) + 1
    ny = int((y1 - y0) * denominator) + 1
    if nx * ny < count:
        raise ValueError("box holds fewer grid points than requested")
    rng = random.Random(seed)
    while True:
        seen: set[Point] = set()
        while len(seen) < count:
            seen.add(Point(x0 + Fraction(rng.randrange(nx), denominator),
                           y0 + Fraction(rng.randrange(ny), denominator)))
        P = PointSet(seen)
        if not general_position or summarize(P).i_c == 0:
            return P
