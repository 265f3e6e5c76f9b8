#!/usr/bin/env python3
"""Census every unlabeled n-vertex tournament for k-voter inducibility.

Reproduces the small-order landscape: every class through n=7 is
3-inducible, exactly 96 of the 6880 classes at n=8 are not, and those
resist no 5-voter profile.  Writes one CSV row per isomorphism class.

    python3 scripts/run_census.py --n 7 --k 3
    python3 scripts/run_census.py --n 8 --k 3 --out census8.csv --jobs 2
"""

import argparse
import sys
import time

from majdim import CLASS_COUNTS, run_census


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, required=True, help="vertex count (<= 8)")
    ap.add_argument("--k", type=int, default=3, help="voters to test (default 3)")
    ap.add_argument("--jobs", type=int, default=1, help="worker threads")
    ap.add_argument("--timeout", type=float, default=None, help="per-class solver cap, seconds")
    ap.add_argument("--out", default=None, help="CSV path (default: stdout)")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    summary, rows = run_census(args.n, args.k, jobs=args.jobs, timeout=args.timeout)
    elapsed = time.perf_counter() - t0

    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        print("canonical_key,n,k,inducible,method,seconds", file=sink)
        for row in rows:
            print(row.as_csv(), file=sink)
    finally:
        if args.out:
            sink.close()

    expected = CLASS_COUNTS[args.n - 1] if args.n <= len(CLASS_COUNTS) else None
    print(
        "n=%d k=%d: %d classes (%s expected), %d inducible, %d not, %d failures, %.1fs"
        % (
            args.n,
            args.k,
            len(rows),
            expected if expected is not None else "?",
            summary["inducible"],
            summary["not_inducible"],
            len(summary["failures"]),
            elapsed,
        ),
        file=sys.stderr,
    )
    return 3 if summary["failures"] else 0


if __name__ == "__main__":
    sys.exit(main())
