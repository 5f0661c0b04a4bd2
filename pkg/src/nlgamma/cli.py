"""Command-line interface.

Subcommands: `eval` (point evaluation), `verify` (identity suites),
`table` (CSV grids), `scan` (sign-pattern certification).  Exit codes:
0 success / all checks pass, 1 verification failures, 2 usage or domain
errors.  Standard output is deterministic: fixed 17-significant-digit
formatting, fixed iteration order, no timing information (wall time only
goes into JSON report files).
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from . import verify
from .delta import (
    MAX_DERIV_ORDER,
    Route,
    check_complete_monotonicity,
    default_route,
    delta,
    delta_deriv,
)
from .quad import DEFAULT_CONFIG, QuadConfig
from .report import fmt17

__all__ = ["main"]


class _CliError(Exception):
    """Maps to exit code 2."""


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nlgamma",
        description="Evaluate ln(Gamma(x+1))/x and its derivatives by "
        "independent routes and verify the identities relating them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the function or a derivative")
    p_eval.add_argument("--fn", required=True, choices=("delta", "deriv"))
    p_eval.add_argument("--m", type=int, default=1, help="derivative order")
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument(
        "--route",
        default="AUTO",
        choices=["AUTO"] + [r.value for r in Route],
    )
    p_eval.add_argument("--rel-tol", type=float, default=None)

    p_verify = sub.add_parser("verify", help="run a named identity suite")
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--json", dest="json_path", default=None)

    p_table = sub.add_parser("table", help="emit a CSV grid of values")
    p_table.add_argument("--fn", default="deriv", choices=("delta", "deriv"))
    p_table.add_argument("--m", type=int, default=1)
    p_table.add_argument("--start", type=float, required=True)
    p_table.add_argument("--stop", type=float, required=True)
    p_table.add_argument("--count", type=int, required=True)
    p_table.add_argument("--log", action="store_true", help="log spacing")
    p_table.add_argument("--routes", default="CLOSED")
    p_table.add_argument("--out", default=None)

    p_scan = sub.add_parser("scan", help="certify the derivative sign pattern")
    p_scan.add_argument("--m-max", type=int, required=True)
    p_scan.add_argument("--start", type=float, required=True)
    p_scan.add_argument("--stop", type=float, required=True)
    p_scan.add_argument("--count", type=int, required=True)
    p_scan.add_argument("--json", dest="json_path", default=None)
    return parser


def _cfg_for(rel_tol):
    if rel_tol is None:
        return DEFAULT_CONFIG
    if rel_tol <= 0.0:
        raise _CliError("--rel-tol must be positive")
    return QuadConfig(rel_tol=rel_tol)


def _route_for(name, m, x):
    if name == "AUTO":
        return default_route(m, x)
    return Route[name]


def _grid(start, stop, count, log_spacing):
    if count < 1:
        raise _CliError("--count must be >= 1")
    if count == 1:
        if start != stop:
            raise _CliError("--count 1 requires start == stop")
        return [start]
    if log_spacing:
        if start <= 0.0:
            raise _CliError("log spacing requires start > 0")
        lo, hi = math.log(start), math.log(stop)
        return [math.exp(lo + (hi - lo) * i / (count - 1)) for i in range(count)]
    return [start + (stop - start) * i / (count - 1) for i in range(count)]


def _cmd_eval(args):
    cfg = _cfg_for(args.rel_tol)
    if args.fn == "delta":
        value = delta(args.x)
        route = default_route(0, args.x)
        err = 2.0 * abs(value) * 1.1e-16 + 1e-18
        line = (fmt17(value), fmt17(err), route.value, "1")
    else:
        route = _route_for(args.route, args.m, args.x)
        r = delta_deriv(args.m, args.x, route, cfg)
        line = (fmt17(r.value), fmt17(r.abs_err_est), r.route.value, str(r.n_evals))
    print("\t".join(line))
    return 0


def _cmd_verify(args):
    if args.suite not in verify.SUITES:
        raise _CliError(
            f"unknown suite '{args.suite}' (choose from {', '.join(sorted(verify.SUITES))})"
        )
    rep = verify.run_suite(args.suite, tol=args.tol)
    for line in rep.render_lines():
        print(line)
    if args.json_path:
        rep.write_json(args.json_path)
    return 0 if rep.n_fail == 0 else 1


def _cmd_table(args):
    if args.start <= -1.0:
        raise _CliError("grid start must be > -1")
    xs = _grid(args.start, args.stop, args.count, args.log)
    try:
        routes = [Route[r.strip()] for r in args.routes.split(",") if r.strip()]
    except KeyError as exc:
        raise _CliError(f"unknown route {exc}") from exc
    if not routes:
        raise _CliError("--routes must name at least one route")
    lines = ["x,route,value,abs_err_est"]
    for x in xs:
        for route in routes:
            if args.fn == "delta":
                value = delta(x)
                err = 2.0 * abs(value) * 1.1e-16 + 1e-18
                used = default_route(0, x)
                lines.append(f"{fmt17(x)},{used.value},{fmt17(value)},{fmt17(err)}")
            else:
                used = route
                if x == 0.0 and route in (Route.CLOSED, Route.RECURRENCE):
                    used = Route.SERIES  # exact value at the removable point
                r = delta_deriv(args.m, x, used)
                lines.append(
                    f"{fmt17(x)},{r.route.value},{fmt17(r.value)},{fmt17(r.abs_err_est)}"
                )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_scan(args):
    if not 1 <= args.m_max <= MAX_DERIV_ORDER:
        raise _CliError(f"--m-max must be in 1..{MAX_DERIV_ORDER}")
    xs = _grid(args.start, args.stop, args.count, False)
    t0 = time.perf_counter()
    rep = check_complete_monotonicity(args.m_max, xs)
    rep.wall_time_ms = int(round((time.perf_counter() - t0) * 1000.0))
    for line in rep.render_lines():
        print(line)
    if args.json_path:
        rep.write_json(args.json_path)
    return 0 if rep.n_fail == 0 else 1


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize others
        return int(exc.code) if exc.code else 0
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "scan":
            return _cmd_scan(args)
        raise _CliError(f"unknown command {args.command}")
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
