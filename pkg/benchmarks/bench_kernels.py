"""Compare the compiled and pure-Python search kernels.

Usage:
    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Both backends must report the same optimum and node count; the script exits
non-zero if they ever disagree.
"""

from __future__ import annotations

import argparse
import sys
import time

from hararytds import kernels
from hararytds.harary import HararyParams, build_harary
from hararytds.solver import Method, solve_exact

CASES = [
    (Method.BRUTE, 4, 22),
    (Method.BRUTE, 3, 24),
    (Method.BRUTE, 5, 24),
    (Method.BNB, 5, 40),
    (Method.BNB, 3, 50),
    (Method.BNB, 5, 50),
    (Method.BNB, 7, 50),
]
QUICK = CASES[:1] + CASES[3:5]


def best_of(repeat, fn):
    best, res = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn()
        best = min(best, time.perf_counter() - t0)
    return best, res


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="run a small subset")
    args = ap.parse_args(argv)

    if "cython" not in kernels.available_backends():
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1

    print(f"{'instance':<12}{'method':<7}{'gamma':>6}{'nodes':>10}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    status = 0
    for method, d, n in QUICK if args.quick else CASES:
        g = build_harary(HararyParams(d, n))
        tp, rp = best_of(args.repeat, lambda: solve_exact(g, 2, method, backend="python"))
        tc, rc = best_of(args.repeat, lambda: solve_exact(g, 2, method, backend="cython"))
        if (rp.gamma, rp.nodes, rp.witness) != (rc.gamma, rc.nodes, rc.witness):
            print(f"MISMATCH on H({d},{n}) {method.value}", file=sys.stderr)
            status = 2
        print(f"{f'H({d},{n})':<12}{method.value:<7}{rc.gamma:>6}{rc.nodes:>10}{tp:>11.4f}{tc:>11.4f}{tp / tc:>8.0f}x")
    return status


if __name__ == "__main__":
    sys.exit(main())
