#!/usr/bin/env python3
"""Sweep the determinant-of-induction oracle over a (q, d) grid.

For each cell the character exponent b is swept fully when M = q^d - 1
is small, and sampled otherwise.  Prints one line per cell and exits
non-zero if any counterexample is found.
"""

import argparse
import random
import sys
import time

from cryslift.induction import FrobeniusModel, verify_det_induction


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-values", default="2,3,4,5,7,8,9")
    ap.add_argument("--d-max", type=int, default=6)
    ap.add_argument("--full-sweep-max-m", type=int, default=4000)
    ap.add_argument("--samples", type=int, default=512,
                    help="random b values per cell when M is large")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    failures = 0
    for q in (int(v) for v in args.q_values.split(",")):
        for d in range(1, args.d_max + 1):
            model = FrobeniusModel(q, d)
            if model.M <= args.full_sweep_max_m:
                bs = range(model.M)
                mode = "full"
            else:
                bs = sorted(rng.sample(range(model.M), args.samples))
                mode = f"{args.samples} sampled"
            start = time.perf_counter()
            bad = sum(1 for b in bs if not verify_det_induction(model, b)["pass"])
            failures += bad
            print(
                f"q={q} d={d} M={model.M} ({mode} b): "
                f"{bad} counterexamples [{time.perf_counter() - start:.2f}s]"
            )
    if failures:
        print(f"{failures} counterexamples found", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
