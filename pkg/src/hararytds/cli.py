"""Command-line front end.

Exit codes: 0 success, 1 parameter error, 2 infeasible (min degree < k),
3 timeout left a result unresolved.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from .conformance import ResultCache, Verdict, plan_sweep, reports_to_csv, reports_to_json, sweep
from .constructions import construct_2tds
from .domination import coverage, format_set_line, is_ktds, lower_bounds, parse_set_file
from .errors import InfeasibleError, ParameterError
from .harary import HararyParams, build_harary, format_edge_list, read_edge_list
from .solver import solve_exact

EXIT_OK, EXIT_PARAM, EXIT_INFEASIBLE, EXIT_TIMEOUT = 0, 1, 2, 3

log = logging.getLogger("hararytds")


def _graph(args: argparse.Namespace):
    return build_harary(HararyParams(args.d, args.n))


def cmd_gen(args: argparse.Namespace) -> int:
    sys.stdout.write(format_edge_list(_graph(args)))
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    p = HararyParams(args.d, args.n)
    for res in construct_2tds(p):
        sys.stdout.write(format_set_line(res.set, f"{res.formula_id} validated={str(res.validated).lower()}") + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_edge_list(Path(args.graph).read_text(encoding="utf-8"))
    if g.min_degree < args.k:
        raise InfeasibleError(f"minimum degree {g.min_degree} < k={args.k}")
    sets = parse_set_file(Path(args.sets).read_text(encoding="utf-8"), g.order)
    for i, s in enumerate(sets, 1):
        if is_ktds(g, s, args.k):
            print(f"set {i}: valid {args.k}TDS size={len(s)}")
        else:
            short = [v + 1 for v, c in enumerate(coverage(g, s)) if c < args.k]
            print(f"set {i}: invalid {args.k}TDS size={len(s)} undercovered={' '.join(map(str, short))}")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    b = lower_bounds(_graph(args), args.k)
    print(f"trivial={b.lb_trivial}")
    print(f"degree={b.lb_degree}")
    print(f"degree_sum={b.lb_degree_sum}")
    print(f"upper={b.ub_trivial}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    backend = None if args.backend == "auto" else args.backend
    res = solve_exact(_graph(args), args.k, args.method, args.budget, backend)
    witness = " ".join(map(str, res.witness.labels()))
    if not res.solved:
        print(f"unresolved lo={res.lo} hi={res.hi}")
        print(f"best={witness}")
        return EXIT_TIMEOUT
    print(f"gamma={res.gamma}")
    print(f"witness={witness}")
    log.info("method=%s backend=%s nodes=%d elapsed=%.3fs", res.method.value, res.backend, res.nodes, res.elapsed)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    d_range = range(args.d_min, args.d_max + 1)
    n_range = range(args.n_min, args.n_max + 1)
    _, skipped = plan_sweep(d_range, n_range, args.k)
    cache = ResultCache(args.cache) if args.cache else None
    reports = sweep(d_range, n_range, args.k, args.budget, args.method, args.workers, cache)
    timing = not args.no_timing
    if args.format == "json":
        text = reports_to_json(reports, args.k, skipped, timing)
    else:
        text = reports_to_csv(reports, timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    unresolved = sum(r.verdict is Verdict.UNRESOLVED for r in reports)
    log.info("%d instances, %d skipped, %d unresolved", len(reports), len(skipped), unresolved)
    return EXIT_TIMEOUT if unresolved else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hararytds", description="Double total domination in Harary graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def dn(p: argparse.ArgumentParser) -> None:
        p.add_argument("d", type=int, help="degree parameter")
        p.add_argument("n", type=int, help="order")

    p = sub.add_parser("gen", help="emit the edge list of H(d, n)")
    dn(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="emit every closed-form 2TDS for H(d, n) as a set file")
    dn(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check sets from a set file against an edge-list graph")
    p.add_argument("graph")
    p.add_argument("sets")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="lower bounds on the k-tuple total domination number")
    dn(p)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="exact k-tuple total domination number")
    dn(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--method", choices=["bnb", "brute"], default="bnb")
    p.add_argument("--budget", type=float, default=None, help="time limit in seconds")
    p.add_argument("--backend", choices=["auto", "python", "cython"], default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="conformance sweep over a (d, n) grid")
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--budget", type=float, default=60.0, help="per-instance time limit in seconds")
    p.add_argument("--method", choices=["bnb", "brute"], default="bnb")
    p.add_argument("--workers", type=int, default=None, help="defaults to $HARARYTDS_WORKERS or CPU count")
    p.add_argument("--cache", default=None, help="JSON-lines results cache")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--no-timing", action="store_true", help="blank out elapsed-time fields")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors with status 2, which here means infeasible
        return EXIT_PARAM if exc.code == 2 else int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParameterError, IndexError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
