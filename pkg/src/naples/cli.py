"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 refused by a resource ceiling.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .core import format_sequence, parse_sequence
from .enumeration import (
    count_npf_permsum,
    count_npf_recursive,
    count_pf_closed,
    fiber_gf_direct,
    log_gf,
)
from .errors import NaplesError, ResourceLimit
from .fibers import fiber_members, fiber_size
from .paths import decreasing_to_klattice, pf_to_labeled_dyck
from .qstats import area, area_distribution, area_k
from .render import to_svg, to_tikz
from .verify import verify

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(value) -> str:
    return json.dumps(value, sort_keys=True) + "\n"


def _series_latex(series, log) -> str:
    parts = []
    for key, coeff in series:
        head = "" if coeff == 1 else str(coeff)
        if log:
            term = "q^{\\ln %d}" % key
        elif key == 1:
            term = "q"
        elif key < 10:
            term = f"q^{key}"
        else:
            term = "q^{%d}" % key
        parts.append(head + term)
    return "+".join(parts) + "\n"


def cmd_count(args) -> str:
    method = args.method
    if method == "closed":
        if args.k != 0:
            raise NaplesError("the closed form covers k = 0 only")
        value = count_pf_closed(args.n)
    elif method == "recursive":
        value = count_npf_recursive(args.n, args.k)
    else:
        value = count_npf_permsum(args.n, args.k, threads=args.threads, max_n=args.max_n)
    if args.format == "csv":
        return _csv(["n", "k", "method", "count"], [[args.n, args.k, method, value]])
    if args.format == "latex":
        return f"{value}\n"
    return _json(value)


def cmd_fiber(args) -> str:
    sigma = parse_sequence(args.sigma)
    if args.list:
        members = [format_sequence(p) for p in fiber_members(sigma, args.k)]
        if args.format == "csv":
            return _csv(["pref"], [[m] for m in members])
        if args.format == "latex":
            return ",\\ ".join(members) + "\n"
        return _json(members)
    size = fiber_size(sigma, args.k)
    if args.format == "csv":
        return _csv(["sigma", "k", "size"], [[format_sequence(sigma), args.k, size]])
    if args.format == "latex":
        return f"{size}\n"
    return _json(size)


def cmd_gf(args) -> str:
    if args.log:
        series = log_gf(args.n)
    else:
        series = fiber_gf_direct(args.n, threads=args.threads, max_n=args.max_n)
    terms = [[key, coeff] for key, coeff in series]
    if args.format == "csv":
        return _csv(["index", "coefficient"], terms)
    if args.format == "latex":
        return _series_latex(series, args.log)
    return _json({"n": args.n, "log": args.log, "terms": terms})


def cmd_qdist(args) -> str:
    poly = area_distribution(args.n, args.k, threads=args.threads, max_n=args.max_n)
    if args.format == "csv":
        return _csv(["exponent", "coefficient"], list(enumerate(poly.coeffs)))
    if args.format == "latex":
        return poly.to_latex() + "\n"
    return _json({"coeffs": list(poly.coeffs)})


def cmd_area(args) -> str:
    pref = parse_sequence(args.pref)
    value = area(pref) if args.k == 0 else area_k(pref, args.k)
    if args.format == "csv":
        return _csv(["pref", "k", "area"], [[format_sequence(pref), args.k, value]])
    if args.format == "latex":
        return f"{value}\n"
    return _json(value)


def cmd_path(args) -> str:
    pref = parse_sequence(args.pref)
    if args.k is None:
        path, k = pf_to_labeled_dyck(pref), 0
    else:
        path, k = decreasing_to_klattice(pref, args.k), args.k
    if args.render == "tikz":
        return to_tikz(path, k)
    if args.render == "svg":
        return to_svg(path, k)
    labels = list(path.labels) if path.labels is not None else None
    if args.format == "csv":
        rows = []
        south = iter(labels or [])
        for i, step in enumerate(path.steps, 1):
            rows.append([i, step, next(south) if step == "S" and labels else ""])
        return _csv(["step", "direction", "label"], rows)
    if args.format == "latex":
        return path.steps + "\n"
    return _json({"steps": path.steps, "labels": labels, "k": k})


def cmd_verify(args):
    report = verify(args.n_max)
    if args.format == "csv":
        rows = [
            [c.name, c.params, "pass" if c.passed else "FAIL",
             "" if c.counterexample is None else json.dumps(c.counterexample)]
            for c in report.checks
        ]
        out = _csv(["check", "range", "result", "counterexample"], rows)
    elif args.format == "latex":
        lines = ["\\begin{tabular}{l|l|l}", "check & range & result \\\\", "\\hline"]
        for c in report.checks:
            lines.append(f"{c.name} & {c.params} & {'pass' if c.passed else 'FAIL'} \\\\")
        lines.append("\\end{tabular}")
        out = "\n".join(lines) + "\n"
    else:
        # wall times vary run to run; keep JSON output reproducible unless asked
        data = report.to_dict()
        if not args.timings:
            for check in data["checks"]:
                check.pop("elapsed")
        out = _json(data)
    return out, report.passed


def _common_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=["json", "csv", "latex"], default=default("json"))
    parser.add_argument("--threads", type=int, default=default(1), help="worker threads for enumeration")
    parser.add_argument("--max-n", type=int, default=default(None), dest="max_n",
                        help="override the enumeration ceiling")
    parser.add_argument("--seed", choices=["none"], default=default("none"),
                        help="accepted for compatibility; every computation is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="naples", description="k-Naples parking functions")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _common_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _common_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count PF_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--method", choices=["closed", "recursive", "permsum"], default="recursive")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fiber", parents=[common], help="fiber of the outcome map")
    p.add_argument("--sigma", required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--list", action="store_true", help="list members instead of the size")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("gf", parents=[common], help="fiber-size generating function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--log", action="store_true", help="logarithmic series via the recursion")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("qdist", parents=[common], help="area_k distribution over PF_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_qdist)

    p = sub.add_parser("area", parents=[common], help="area / area_k of a preference")
    p.add_argument("--pref", required=True)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("path", parents=[common], help="lattice path of a preference")
    p.add_argument("--pref", required=True)
    p.add_argument("--k", type=int, default=None,
                   help="draw the k-lattice path of a weakly decreasing preference")
    p.add_argument("--render", choices=["tikz", "svg"])
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("verify", parents=[common], help="run the cross-validation suite")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--timings", action="store_true", help="include wall time per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "n", 1) < 1:
            raise NaplesError(f"n must be positive, got {args.n}")
        result = args.func(args)
    except ResourceLimit as exc:
        print(f"naples: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (NaplesError, ValueError, IndexError) as exc:
        print(f"naples: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if isinstance(result, tuple):
        out, passed = result
        sys.stdout.write(out)
        return EXIT_OK if passed else EXIT_FAILED
    sys.stdout.write(result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
