"""Orbits of the Voronoi-vertex map, growth bounds, similarities and periods."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .geom import GeometryError, Point, PointSet, as_pointset, squared_distance
from .voronoi import VoronoiSummary, summarize, vertex_set


class ResourceLimitError(GeometryError):
    """An orbit outgrew the configured cardinality, bit-length or step caps."""

    def __init__(self, message, step=None, record=None):
        super().__init__(message)
        self.step = step
        self.record = record


@dataclass(frozen=True)
class Caps:
    max_points: int = 10 ** 5
    max_bits: int = 10 ** 6
    max_steps: int = 64

    def check(self, S: PointSet, step: int):
        if len(S) > self.max_points:
            raise ResourceLimitError(f"step {step}: {len(S)} points exceeds cap {self.max_points}", step)
        bits = S.max_bit_length()
        if bits > self.max_bits:
            raise ResourceLimitError(f"step {step}: coordinate bit length {bits} exceeds cap "
                                     f"{self.max_bits}", step)


DEFAULT_CAPS = Caps()


# -- similarity transforms -------------------------------------------------------

def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Similarity:
    """The map x -> k U x + x0.

    The linear part ``A = kU`` is stored as a rational 2x2 matrix rather than
    ``k`` and ``U`` separately: a similarity between two rational point sets
    always has rational ``A`` but may have irrational ``k`` (and hence ``U``),
    e.g. rotation by 45 degrees with scale sqrt(2).  ``A`` must satisfy
    ``A^T A = k^2 I`` with ``k^2 > 0``.
    """
    A: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    x0: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    def __post_init__(self):
        (a, b), (c, d) = self.A
        A = ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "x0", (Fraction(self.x0[0]), Fraction(self.x0[1])))
        (a, b), (c, d) = A
        s = a * a + c * c
        if s == 0 or b * b + d * d != s or a * b + c * d != 0:
            raise ValueError("linear part is not a positive multiple of an orthogonal matrix")

    @classmethod
    def from_parts(cls, k, U, x0=(0, 0)) -> "Similarity":
        k = Fraction(k)
        if k <= 0:
            raise ValueError("scale must be positive")
        (u11, u12), (u21, u22) = [[Fraction(v) for v in row] for row in U]
        if (u11 * u11 + u21 * u21 != 1 or u12 * u12 + u22 * u22 != 1
                or u11 * u12 + u21 * u22 != 0):
            raise ValueError("U is not orthogonal")
        return cls(((k * u11, k * u12), (k * u21, k * u22)), x0)

    @classmethod
    def identity(cls) -> "Similarity":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def rotation(cls, cos, sin, k=1, x0=(0, 0), reflect=False) -> "Similarity":
        """Rotation by a rational point (cos, sin) on the unit circle, optionally
        preceded by the reflection (x, y) -> (x, -y)."""
        c, s = Fraction(cos), Fraction(sin)
        U = ((c, s), (s, -c)) if reflect else ((c, -s), (s, c))
        return cls.from_parts(k, U, x0)

    @property
    def scale_squared(self) -> Fraction:
        (a, _), (c, _) = self.A
        return a * a + c * c

    @property
    def k(self):
        """The scale as a Fraction, or None when it is irrational."""
        return _rational_sqrt(self.scale_squared)

    @property
    def U(self):
        """Orthogonal part, or None when the scale is irrational."""
        k = self.k
        if k is None:
            return None
        (a, b), (c, d) = self.A
        return ((a / k, b / k), (c / k, d / k))

    @property
    def orientation_preserving(self) -> bool:
        (a, b), (c, d) = self.A
        return a * d - b * c > 0

    def __call__(self, p: Point) -> Point:
        (a, b), (c, d) = self.A
        return Point(a * p.x + b * p.y + self.x0[0], c * p.x + d * p.y + self.x0[1])

    def compose(self, other: "Similarity") -> "Similarity":
        """self after other."""
        (a, b), (c, d) = self.A
        (e, f), (g, h) = other.A
        A = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        t = self(Point(*other.x0))
        return Similarity(A, (t.x, t.y))

    def inverse(self) -> "Similarity":
        (a, b), (c, d) = self.A
        s = self.scale_squared
        Ai = ((a / s, c / s), (b / s, d / s))  # A^-1 = A^T / k^2
        x, y = self.x0
        return Similarity(Ai, (-(Ai[0][0] * x + Ai[0][1] * y), -(Ai[1][0] * x + Ai[1][1] * y)))


def apply_similarity(t: Similarity, P) -> PointSet:
    return PointSet(t(p) for p in as_pointset(P))


def _farthest_pairs(P: PointSet):
    best = None
    pairs = []
    for a, b in combinations(P, 2):
        d = squared_distance(a, b)
        if best is None or d > best:
            best, pairs = d, [(a, b)]
        elif d == best:
            pairs.append((a, b))
    return best, pairs


def _map_segment(a, b, c, d, reflect):
    """Similarity taking a -> c and b -> d (complex affine, optionally with conjugation)."""
    ux, uy = b.x - a.x, b.y - a.y
    if reflect:
        uy = -uy
    vx, vy = d.x - c.x, d.y - c.y
    n = ux * ux + uy * uy
    # alpha = v / u
    ar = (vx * ux + vy * uy) / n
    ai = (vy * ux - vx * uy) / n
    A = ((ar, ai), (ai, -ar)) if reflect else ((ar, -ai), (ai, ar))
    t = Similarity(A)
    img = t(a)
    return Similarity(A, (c.x - img.x, c.y - img.y))


def are_similar(P, Q):
    """A Similarity t with t(P) = Q, or None.

    A farthest pair of P can only map to a farthest pair of Q, so every
    candidate is pinned down by sending P's lexicographically first farthest
    pair to one of Q's farthest pairs, in either order and either handedness.
    """
    P, Q = as_pointset(P), as_pointset(Q)
    if len(P) != len(Q):
        return None
    if not P:
        return Similarity.identity()
    if len(P) == 1:
        return Similarity(((1, 0), (0, 1)), (Q[0].x - P[0].x, Q[0].y - P[0].y))
    _, p_pairs = _farthest_pairs(P)
    _, q_pairs = _farthest_pairs(Q)
    a, b = p_pairs[0]
    target = set(Q)
    for c, d in q_pairs:
        for cc, dd in ((c, d), (d, c)):
            for reflect in (False, True):
                t = _map_segment(a, b, cc, dd, reflect)
                if all(t(p) in target for p in P):
                    return t
    return None


# -- iteration and orbits ----------------------------------------------------------

def iterate(P, n: int, caps: Caps = DEFAULT_CAPS) -> PointSet:
    S = as_pointset(P)
    for step in range(1, n + 1):
        if not S:
            break
        S = vertex_set(S)
        caps.check(S, step)
    return S


PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass(frozen=True)
class StepStats:
    """What the bound checks need to know about one iterate."""
    size: int
    boundary: int
    i_c: int
    collinear: bool


def bound_verdicts(history: list[StepStats]) -> dict[str, str]:
    """Growth-bound verdicts for the last entry of ``history`` (step n >= 1).

    Each bound is only asserted when its hypotheses hold for the earlier
    iterates; otherwise the verdict is "n/a".  The size identity the upper
    bounds rest on needs a non-collinear predecessor, so a collinear (or
    tiny) iterate switches them off from then on.
    """
    n = len(history) - 1
    cur, prev, first = history[-1], history[-2], history[0]
    earlier = history[:-1]
    out = {}
    out["step_upper"] = NA if prev.collinear else (
        PASS if cur.size <= 2 * prev.size - 5 else FAIL)
    if all(not s.collinear for s in earlier):
        out["cumulative_upper"] = PASS if cur.size <= 2 ** n * (first.size - 5) + 5 else FAIL
    else:
        out["cumulative_upper"] = NA
    out["boundary_monotone"] = PASS if cur.boundary <= prev.boundary else FAIL
    if all(not s.collinear and s.i_c == 0 for s in earlier):
        lower = 2 ** n * first.size - (2 ** n - 1) * (first.boundary + 2)
        out["lower_bound"] = PASS if cur.size >= lower else FAIL
    else:
        out["lower_bound"] = NA
    return out


def _stats(s: VoronoiSummary) -> StepStats:
    return StepStats(s.n_points, s.boundary_count, s.i_c, s.collinear)


@dataclass
class OrbitStep:
    n: int
    points: PointSet
    summary: VoronoiSummary
    checks: dict[str, str]
    max_bits: int


@dataclass
class OrbitRecord:
    steps: list[OrbitStep] = field(default_factory=list)
    terminated_at: int | None = None
    status: str = "running"

    @property
    def sizes(self) -> list[int]:
        return [s.summary.n_points for s in self.steps]

    @property
    def ok(self) -> bool:
        return all(v != FAIL for s in self.steps for v in s.checks.values())

    def failures(self):
        return [(s.n, k) for s in self.steps for k, v in s.checks.items() if v == FAIL]


def orbit(P, max_steps: int | None = None, caps: Caps = DEFAULT_CAPS) -> OrbitRecord:
    """Run the orbit of P for up to ``max_steps`` iterations (default: the step cap).

    Every iterate is summarised, so the record carries I_c, |Bd| and the edge
    counts of each step together with the identity and bound verdicts.  The
    run stops early once the set is empty.  Exceeding a cap raises
    :class:`ResourceLimitError` carrying the partial record.
    """
    if max_steps is None:
        max_steps = caps.max_steps
    max_steps = min(max_steps, caps.max_steps)
    S = as_pointset(P)
    rec = OrbitRecord()
    history: list[StepStats] = []
    for n in range(max_steps + 1):
        s = summarize(S)  # raises InvariantViolation if the identity fails
        history.append(_stats(s))
        checks = {"identity": PASS if s.identity_holds() else FAIL}
        if n >= 1:
            checks.update(bound_verdicts(history))
        rec.steps.append(OrbitStep(n, S, s, checks, S.max_bit_length()))
        if not S:
            rec.terminated_at = n
            rec.status = "empty"
            return rec
        if n == max_steps:
            break
        S = s.vertex_set()
        try:
            caps.check(S, n + 1)
        except ResourceLimitError as e:
            rec.status = "resource-limit"
            e.record = rec
            raise
    rec.status = "max-steps"
    return rec


def detect_period(P, k_max: int, caps: Caps = DEFAULT_CAPS):
    """Smallest k <= k_max with P similar to its k-th iterate, as (k, witness)."""
    P = as_pointset(P)
    S = P
    for k in range(1, k_max + 1):
        S = vertex_set(S)
        caps.check(S, k)
        if not S:
            return None
        if len(S) == len(P):
            t = are_similar(P, S)
            if t is not None:
                return k, t
    return None
