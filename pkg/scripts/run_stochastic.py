#!/usr/bin/env python3
"""Average majority dimension of tournaments drawn from stochastic cultures.

For each culture and each odd alternative count n, draws seeded samples,
computes the exact dimension of each sampled majority digraph, and prints
one table row with the mean.  Profile cultures (ic, iac, mallows, spatial)
draw an odd electorate so the induced digraph is a tournament; the uniform
culture draws the tournament directly.

    python3 scripts/run_stochastic.py --models uniform_tournament ic --n 5 9 13 --samples 30
    python3 scripts/run_stochastic.py --models spatial --dims 1 --n 9 --samples 50
"""

import argparse
import sys
import time

from majdim import MODELS, dimension
from majdim.cultures import CultureSpec, sample
from majdim.profiles import majority_digraph


def sampled_dimension(spec: CultureSpec):
    drawn = sample(spec)
    g = drawn if spec.model == "uniform_tournament" else majority_digraph(drawn)
    return dimension(g).dim


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--models", nargs="+", default=["uniform_tournament"], choices=MODELS)
    ap.add_argument("--n", nargs="+", type=int, default=[5, 9, 13, 17, 21])
    ap.add_argument("--samples", type=int, default=30, help="seeded draws per cell")
    ap.add_argument("--voters", type=int, default=51, help="electorate for profile cultures (odd)")
    ap.add_argument("--phi", type=float, default=0.8, help="mallows dispersion")
    ap.add_argument("--dims", type=int, default=2, help="spatial dimensionality")
    ap.add_argument("--seed0", type=int, default=0, help="first seed; draws use seed0..seed0+samples-1")
    args = ap.parse_args(argv)

    print("model,n,samples,mean_dim,min_dim,max_dim,seconds")
    for model in args.models:
        for n in args.n:
            t0 = time.perf_counter()
            dims = []
            unresolved = 0
            for seed in range(args.seed0, args.seed0 + args.samples):
                spec = CultureSpec(
                    model=model,
                    n=n,
                    voters=args.voters,
                    phi=args.phi,
                    dims=args.dims,
                    seed=seed,
                )
                d = sampled_dimension(spec)
                if d is None:
                    unresolved += 1
                else:
                    dims.append(d)
            elapsed = time.perf_counter() - t0
            if unresolved:
                print(
                    "%s n=%d: %d samples exceeded the k<=9 search bound"
                    % (model, n, unresolved),
                    file=sys.stderr,
                )
            if dims:
                print(
                    "%s,%d,%d,%.2f,%d,%d,%.1f"
                    % (model, n, len(dims), sum(dims) / len(dims), min(dims), max(dims), elapsed)
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
