"""Command-line front end: ``vorit <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 resource cap reached,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import io
from .dynamics import (Caps, OrbitRecord, OrbitStep, ResourceLimitError, are_similar, iterate,
                       orbit)
from .render import RenderOptions, render_svg
from .voronoi import InvariantViolation, summarize, vertex_set

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3

REPORT_SCHEMA = "vorit.orbit-report/1"
PERIOD_SCHEMA = "vorit.period-search/1"

def _caps(args) -> Caps:
    return Caps(max_points=args.max_points, max_bits=args.max_bits,
                max_steps=getattr(args, "max_steps", None) or Caps.max_steps)


def _dump_json(obj, dest):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)


def orbit_report(rec: OrbitRecord, error: str | None = None) -> dict:
    steps = []
    for st in rec.steps:
        s = st.summary
        steps.append({
            "n": st.n,
            "cardinality": s.n_points,
            "boundary": s.boundary_count,
            "interior": s.interior_count,
            "i_c": s.i_c,
            "collinear": s.collinear,
            "vertices": s.n_vertices,
            "finite_edges": s.n_finite_edges,
            "infinite_edges": s.n_infinite_edges,
            "max_bits": st.max_bits,
            "checks": dict(st.checks),
        })
    report = {
        "schema": REPORT_SCHEMA,
        "status": rec.status,
        "terminated_at": rec.terminated_at,
        "steps": steps,
    }
    if error:
        report["error"] = error
    return report


# -- commands ---------------------------------------------------------------------

def cmd_analyze(args):
    P = io.read_points(args.input)
    s = summarize(P)
    if s.collinear:
        print(f"|P|={s.n_points} collinear; vit=∅")
        checks = {}
    else:
        # summarize() already raised if the identity failed
        print(f"|P|={s.n_points} |Bd|={s.boundary_count} I_c={s.i_c} |vit|={s.n_vertices} "
              f"identity=pass")
        print(f"|Int|={s.interior_count} |E_F|={s.n_finite_edges} |E_I|={s.n_infinite_edges}")
        checks = {"identity": "pass"}
    if args.json:
        rec = OrbitRecord([OrbitStep(0, P, s, checks, P.max_bit_length())], None, "single-step")
        _dump_json(orbit_report(rec), args.json)
    return EXIT_OK


def cmd_iterate(args):
    P = io.read_points(args.input)
    S = iterate(P, args.n, _caps(args))
    io.write_points(S, args.output)
    return EXIT_OK


def cmd_orbit(args):
    P = io.read_points(args.input)
    caps = _caps(args)
    code = EXIT_OK
    error = None
    try:
        rec = orbit(P, args.max_steps, caps)
    except ResourceLimitError as e:
        rec, error, code = e.record, str(e), EXIT_CAP
    if rec.failures():
        code = EXIT_INTERNAL
        error = f"bound violated: {rec.failures()}"
    if not args.quiet:
        print(f"{'n':>3} {'|P|':>7} {'|Bd|':>5} {'I_c':>4} {'|E_F|':>7} {'|E_I|':>5} "
              f"{'bits':>8}  checks")
        for st in rec.steps:
            s = st.summary
            checks = " ".join(f"{k}={v}" for k, v in st.checks.items())
            print(f"{st.n:>3} {s.n_points:>7} {s.boundary_count:>5} {s.i_c:>4} "
                  f"{s.n_finite_edges:>7} {s.n_infinite_edges:>5} {st.max_bits:>8}  {checks}")
        print(f"status: {rec.status}" + (f" ({error})" if error else ""))
    if args.json:
        _dump_json(orbit_report(rec, error), args.json)
    return code


def cmd_random(args):
    P = io.random_points(args.count, args.seed, tuple(args.box), args.denominator,
                         general_position=args.force_general_position)
    io.write_points(P, args.output)
    return EXIT_OK


def cmd_render(args):
    P = io.read_points(args.input)
    opts = RenderOptions(show_voronoi=not args.no_voronoi, show_hull=args.hull,
                         show_vertices=args.vertices, overlay_next=args.overlay_next)
    svg = render_svg(P, opts)
    if args.svg == "-":
        sys.stdout.write(svg)
    else:
        with open(args.svg, "w", encoding="utf-8", newline="\n") as f:
            f.write(svg)
    return EXIT_OK


def _first_return(P, k_max, caps):
    """Like dynamics.detect_period, but tells a dying orbit from a surviving one."""
    S = P
    for k in range(1, k_max + 1):
        S = vertex_set(S)
        caps.check(S, k)
        if not S:
            return "dead"
        if len(S) == len(P):
            t = are_similar(P, S)
            if t is not None:
                return k, t
    return "no_match"


def period_search(count, trials, k_max, seed=0, caps=Caps(), box=(0, 0, 1, 1),
                  denominator=1 << 16):
    """Search ``trials`` seeded random sets for one similar to an iterate; returns a report dict."""
    outcomes = {"skipped": 0, "dead": 0, "no_match": 0, "exhausted": 0}
    hits = []
    for i in range(trials):
        if k_max <= 0:
            outcomes["skipped"] += 1
            continue
        P = io.random_points(count, seed + i, box, denominator)
        try:
            found = _first_return(P, k_max, caps)
        except ResourceLimitError:
            outcomes["exhausted"] += 1
            continue
        if found in ("dead", "no_match"):
            outcomes[found] += 1
            continue
        k, t = found
        hits.append({
            "trial": i,
            "seed": seed + i,
            "period": k,
            "points": [[str(p.x), str(p.y)] for p in P],
            "witness": {"A": [[str(v) for v in row] for row in t.A],
                        "x0": [str(v) for v in t.x0]},
        })
    return {"schema": PERIOD_SCHEMA, "count": count, "trials": trials, "k_max": k_max,
            "seed": seed, "hits": hits, "outcomes": outcomes}


def cmd_period_search(args):
    rep = period_search(args.count, args.trials, args.kmax, args.seed, _caps(args),
                        tuple(args.box), args.denominator)
    o = rep["outcomes"]
    print(f"trials={rep['trials']} hits={len(rep['hits'])} dead={o['dead']} "
          f"no_match={o['no_match']} exhausted={o['exhausted']} skipped={o['skipped']}")
    for h in rep["hits"]:
        print(f"hit: seed={h['seed']} period={h['period']}")
    if args.json:
        _dump_json(rep, args.json)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------

def _add_caps(p, steps=False):
    d = Caps()
    p.add_argument("--max-points", type=int, default=d.max_points)
    p.add_argument("--max-bits", type=int, default=d.max_bits)
    if steps:
        p.add_argument("--max-steps", type=int, default=d.max_steps)


def _fraction(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vorit", description="Voronoi-vertex iteration with exact arithmetic.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="one-step summary and the vertex-count identity")
    p.add_argument("input")
    p.add_argument("--json", metavar="PATH", help="also write a one-step report ('-' for stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("iterate", help="write the n-th iterate")
    p.add_argument("input")
    p.add_argument("-n", type=int, default=1)
    p.add_argument("-o", "--output", default="-")
    _add_caps(p)
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("orbit", help="follow an orbit, checking identities and bounds")
    p.add_argument("input")
    _add_caps(p, steps=True)
    p.add_argument("--json", metavar="PATH", help="write the orbit report ('-' for stdout)")
    p.add_argument("-q", "--quiet", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("random", help="seeded random points on a rational grid")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=_fraction, nargs=4, default=[0, 0, 1, 1],
                   metavar=("X0", "Y0", "X1", "Y1"))
    p.add_argument("--denominator", type=int, default=1 << 16)
    p.add_argument("--force-general-position", action="store_true",
                   help="redraw until the set has no cocircularity")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("render", help="draw the set and its Voronoi diagram as SVG")
    p.add_argument("input")
    p.add_argument("--svg", required=True, metavar="PATH")
    p.add_argument("--hull", action="store_true")
    p.add_argument("--vertices", action="store_true")
    p.add_argument("--overlay-next", action="store_true",
                   help="also draw the Voronoi diagram of the next iterate")
    p.add_argument("--no-voronoi", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("period-search", help="look for sets similar to one of their iterates")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=_fraction, nargs=4, default=[0, 0, 1, 1],
                   metavar=("X0", "Y0", "X1", "Y1"))
    p.add_argument("--denominator", type=int, default=1 << 16)
    p.add_argument("--json", metavar="PATH")
    _add_caps(p)
    p.set_defaults(func=cmd_period_search)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
