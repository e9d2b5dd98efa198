#!/usr/bin/env python3
"""Run the exhaustive lift sweep used by the acceptance gate and write a
deterministic JSON report.

Examples:
    python3 scripts/run_sweep.py --out sweep.json
    python3 scripts/run_sweep.py --max-field-bits 8 --jobs 4 --record failures
"""

import argparse
import json
import sys
import time

from cryslift.fields import is_prime
from cryslift.sweep import SweepConfig, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-field-bits", type=int, default=10,
                    help="cap p^(f*d) at 2^BITS (default 10)")
    ap.add_argument("--e-max", type=int, default=3)
    ap.add_argument("--a-bound", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--record", choices=("all", "failures"), default="failures")
    ap.add_argument("--out", default="sweep.json")
    args = ap.parse_args()

    cap = 2 ** args.max_field_bits
    config = SweepConfig(
        p_values=tuple(p for p in range(2, cap) if is_prime(p)),
        f_max=args.max_field_bits,
        e_max=args.e_max,
        d_max=args.max_field_bits,
        t_with_p=True,
        a_bound=args.a_bound,
        thetas_per_cell=None,
        seed=args.seed,
        jobs=args.jobs,
        max_field_bits=args.max_field_bits,
        record=args.record,
    )
    start = time.perf_counter()
    report = run_sweep(config)
    elapsed = time.perf_counter() - start
    with open(args.out, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    totals = report["totals"]
    print(
        f"{totals['instances']} instances, {totals['failed']} failed "
        f"({elapsed:.1f}s) -> {args.out}",
        file=sys.stderr,
    )
    return 0 if totals["failed"] == 0 else 3


if __name__ == "__main__":
    raise SystemExit(main())
