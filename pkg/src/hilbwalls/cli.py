"""Command-line driver: ``analyze``, ``scan``, ``min-k``, ``fm`` and ``plot``.

Exit codes: 0 success, 2 invalid input, 3 the SYZ square condition fails,
4 the output file cannot be written.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .classify import ChamberReport, Wall, chamber_report, minimal_clear_k, svg_plot
from .fmpartner import FmPartnerReport, fm_partner_report
from .mukai import MukaiVector
from .surface import (
    GcdViolationError,
    SurfaceParams,
    SyzFailure,
    movable_cone,
    normalize,
)
from .walls import POSITIVE_J_LOWER

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_INVALID, EXIT_SYZ, EXIT_IO = 0, 2, 3, 4


class UsageError(Exception):
    pass


def frac(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _vec(v: MukaiVector) -> list[int]:
    return v.as_list()


def fm_document(rep: FmPartnerReport) -> dict:
    return {
        "u": _vec(rep.u),
        "partner_degree": rep.partner_degree,
        "bezout": {"A": rep.bezout[0], "B": rep.bezout[1], "rule": rep.bezout_rule},
        "ns_generator_vector": _vec(rep.ns_generator_vector),
        "twist_order": rep.twist_order,
        "bm_class": {"curve_coeff": rep.bm_class_curve_coeff, "s": rep.bm_class_s},
    }


def wall_document(wall: Wall) -> dict:
    cert = wall.certificate
    return {
        "gamma": frac(wall.gamma),
        "vectors": [_vec(c.w) for c in wall.representatives],
        "j": [c.j for c in wall.representatives],
        "w_squared": [c.wsq for c in wall.representatives],
        "kind": wall.kind.value if wall.kind else None,
        "certificate": None if cert is None else {
            "vector": _vec(cert.vector),
            "square": cert.square,
            "pairing_with_v": cert.pairing_with_v,
            "reason": cert.reason,
        },
        "semicircle": {"center": frac(wall.center), "radius_sq": frac(wall.radius_sq)},
        "y0_sq": frac(wall.y0_sq),
        "lattice_groups": wall.lattice_groups,
        "saturated": wall.saturated,
    }


def analysis_document(report: ChamberReport) -> dict:
    p = report.params
    rays = movable_cone(p)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"Delta": p.Delta, "h": p.h, "k": p.k, "d": p.d, "N": p.N,
                  "degree": p.degree, "points": p.points},
        "syz": True,
        "positive_j_lower": report.positive_j_lower,
        "movable_cone": [list(r.as_tuple()) for r in rays],
        "bound_k": frac(report.bound_k),
        "walls": [wall_document(w) for w in report.walls],
        "chamber_count": report.chamber_count,
        "chamber_count_by_vectors": report.chamber_count_by_vectors,
        "lagrangian_unique": report.lagrangian_unique,
        "faults": list(report.faults),
        "fm_partner": fm_document(fm_partner_report(p)),
    }


def syz_failure_document(fail: SyzFailure) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"d": fail.d, "N": fail.N, "degree": 2 * fail.d, "points": fail.N + 1},
        "syz": False,
        "dN": fail.product,
        "squarefree_part": fail.squarefree_part,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# --- argument handling ------------------------------------------------------


def _params_from_triple(args) -> SurfaceParams:
    missing = [n for n in ("delta", "h", "k") if getattr(args, n) is None]
    if missing:
        raise UsageError("missing --" + ", --".join(missing))
    if min(args.delta, args.h, args.k) < 1:
        raise UsageError("--delta, --h and --k must be positive")
    try:
        return SurfaceParams(args.delta, args.h, args.k)
    except GcdViolationError as exc:
        raise UsageError(str(exc)) from None


def _resolve_input(args) -> SurfaceParams | SyzFailure:
    triple = any(getattr(args, n) is not None for n in ("delta", "h", "k"))
    pair = args.degree is not None or args.points is not None
    if triple == pair:
        raise UsageError("give exactly one of (--delta --h --k) or (--degree --points)")
    if triple:
        return _params_from_triple(args)
    if args.degree is None or args.points is None:
        raise UsageError("--degree and --points go together")
    if args.degree < 2 or args.degree % 2:
        raise UsageError(f"--degree must be a positive even integer, got {args.degree}")
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    return normalize(args.degree // 2, args.points - 1)


def _scan_row(job: tuple[int, int, int, str]) -> dict:
    Delta, h, k, policy = job
    report = chamber_report(SurfaceParams(Delta, h, k), policy)
    vectors = [_vec(c.w) for w in report.walls for c in w.representatives]
    return {
        "k": k,
        "walls": report.candidate_count,
        "distinct_gamma": len(report.walls),
        "chambers": report.chamber_count,
        "chambers_by_vectors": report.chamber_count_by_vectors,
        "gammas": [frac(w.gamma) for w in report.walls],
        "vectors": vectors,
    }


def scan_rows(Delta: int, h: int, k_max: int, policy: str = "verbatim", jobs: int = 1) -> list[dict]:
    work = [(Delta, h, k, policy) for k in range(1, k_max + 1) if gcd(h, k) == 1]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_scan_row, work))
    return [_scan_row(job) for job in work]


def _fmt_vectors(vectors: list[list[int]]) -> str:
    return ";".join("({},{},{})".format(*v) for v in vectors)


# --- commands ---------------------------------------------------------------


def cmd_analyze(args, out) -> int:
    resolved = _resolve_input(args)
    if isinstance(resolved, SyzFailure):
        if args.json:
            out.write(dumps(syz_failure_document(resolved)))
        else:
            out.write(f"SYZ condition fails: d*N = {resolved.product} is not a perfect square "
                      f"(square-free part {resolved.squarefree_part}).\n")
        return EXIT_SYZ
    report = chamber_report(resolved, args.positive_j_lower)
    doc = analysis_document(report)
    if args.json:
        out.write(dumps(doc))
    else:
        out.write(render_analysis(doc))
    return EXIT_OK


def render_analysis(doc: dict) -> str:
    inp = doc["input"]
    lines = [
        f"Delta={inp['Delta']} h={inp['h']} k={inp['k']}  (d={inp['d']}, H^2={inp['degree']}, "
        f"Hilb^{inp['points']})",
        f"movable cone: <{doc['movable_cone'][0]}, {doc['movable_cone'][1]}>   "
        f"wall-free for k >= {doc['bound_k']}",
    ]
    if doc["walls"]:
        lines.append(f"{'Γ':>10}  {'kind':<10} {'y0^2':>10}  w (j, w^2)")
        for wall in doc["walls"]:
            reps = ", ".join(
                "({},{},{}) (j={}, w^2={})".format(*v, j, s)
                for v, j, s in zip(wall["vectors"], wall["j"], wall["w_squared"])
            )
            lines.append(f"{wall['gamma']:>10}  {wall['kind']:<10} {wall['y0_sq']:>10}  {reps}")
    else:
        lines.append("no interior walls")
    lines.append(f"chambers: {doc['chamber_count']} (by vectors: {doc['chamber_count_by_vectors']})")
    lines.append(f"Hilbert scheme is a Lagrangian fibration: {doc['lagrangian_unique']}")
    for fault in doc["faults"]:
        lines.append(f"FAULT: {fault}")
    fm = doc["fm_partner"]
    lines.append(f"FM partner: u={tuple(fm['u'])}, degree {fm['partner_degree']}, "
                 f"twist order {fm['twist_order']}")
    return "\n".join(lines) + "\n"


def cmd_scan(args, out) -> int:
    if args.k_max < 1 or args.delta < 1 or args.h < 1 or args.jobs < 1:
        raise UsageError("--delta, --h, --k-max and --jobs must be positive")
    rows = scan_rows(args.delta, args.h, args.k_max, args.positive_j_lower, args.jobs)
    if args.json:
        out.write(dumps({
            "schema_version": SCHEMA_VERSION,
            "Delta": args.delta, "h": args.h, "k_max": args.k_max,
            "positive_j_lower": args.positive_j_lower,
            "rows": rows,
        }))
    elif args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "walls", "distinct_gamma", "chambers", "vectors"])
        for r in rows:
            writer.writerow([r["k"], r["walls"], r["distinct_gamma"], r["chambers"],
                             _fmt_vectors(r["vectors"])])
        out.write(buf.getvalue())
    else:
        out.write(f"{'k':>4} {'walls':>6} {'Γ':>4} {'chambers':>9}  w\n")
        for r in rows:
            out.write(f"{r['k']:>4} {r['walls']:>6} {r['distinct_gamma']:>4} "
                      f"{r['chambers']:>9}  {_fmt_vectors(r['vectors'])}\n")
    return EXIT_OK


def cmd_min_k(args, out) -> int:
    if args.delta < 1 or args.h < 1:
        raise UsageError("--delta and --h must be positive")
    res = minimal_clear_k(args.delta, args.h, args.positive_j_lower)
    if args.json:
        out.write(dumps({
            "schema_version": SCHEMA_VERSION,
            "Delta": res.Delta, "h": res.h, "k0": res.k0, "d0": res.d0,
            "degree0": res.degree0,
            "per_k": [{"k": k, "walls": n} for k, n in res.per_k],
        }))
        return EXIT_OK
    out.write(f"k0 = {res.k0}, d0 = {res.d0}, degree {res.degree0}\n")
    for k, n in res.per_k:
        out.write(f"  k={k}: {n} flopping wall(s)\n")
    return EXIT_OK


def cmd_fm(args, out) -> int:
    params = _params_from_triple(args)
    doc = fm_document(fm_partner_report(params))
    if args.json:
        out.write(dumps(doc))
        return EXIT_OK
    out.write(
        f"u = {tuple(doc['u'])}\n"
        f"partner degree = {doc['partner_degree']}\n"
        f"Bezout (A, B) = ({doc['bezout']['A']}, {doc['bezout']['B']})  [{doc['bezout']['rule']}]\n"
        f"NS generator preimage = {tuple(doc['ns_generator_vector'])}\n"
        f"twist order = {doc['twist_order']}\n"
        f"Beauville-Mukai class = (0, {doc['bm_class']['curve_coeff']}H', s), "
        f"s {doc['bm_class']['s']}\n"
    )
    return EXIT_OK


def cmd_plot(args, out) -> int:
    params = _params_from_triple(args)
    report = chamber_report(params, args.positive_j_lower)
    text = svg_plot(params, report.walls)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    out.write(f"{len(report.walls)} wall(s): "
              + (", ".join(frac(w.gamma) for w in report.walls) or "none") + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbwalls", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def triple(p, required=False):
        p.add_argument("--delta", type=int, required=required)
        p.add_argument("--h", type=int, required=required)
        p.add_argument("--k", type=int, required=required)

    def policy(p):
        p.add_argument("--positive-j-lower", choices=sorted(POSITIVE_J_LOWER),
                       default="verbatim",
                       help="lower bound on (w,v) for positive pairs: 2w^2+1 (verbatim) or w^2+1")

    p = sub.add_parser("analyze", help="walls, chambers and FM data for one surface")
    triple(p)
    p.add_argument("--degree", type=int, help="H^2 = 2d")
    p.add_argument("--points", type=int, help="number of points N + 1")
    p.add_argument("--json", action="store_true")
    policy(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="per-k wall table")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    policy(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("min-k", help="smallest k beyond which the movable cone has one chamber")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--json", action="store_true")
    policy(p)
    p.set_defaults(func=cmd_min_k)

    p = sub.add_parser("fm", help="Fourier-Mukai partner data")
    triple(p, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fm)

    p = sub.add_parser("plot", help="write an SVG of the wall semicircles")
    triple(p, required=True)
    p.add_argument("--out", required=True)
    policy(p)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
