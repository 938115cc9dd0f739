#!/usr/bin/env python3
"""Time the fast, reference and naive transform paths across several primes.

Prints one JSON object per prime with median wall times and the speedup of
the accumulation loop over the quadratic-time oracle.
"""

import argparse
import json
import statistics
import time

from zcdft.oracle import naive_dft
from zcdft.sequences import ZcParams, zc_time
from zcdft.transform import DFT, dft_reference, execute, plan


def median_ns(fn, reps: int) -> int:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[139, 419, 839])
    ap.add_argument("--u", type=int, default=25)
    ap.add_argument("--reps", type=int, default=25)
    args = ap.parse_args()

    for p in args.primes:
        params = ZcParams(p=p, u=min(args.u, p - 1))
        pl = plan(params, DFT)
        x = zc_time(params)
        fast = median_ns(lambda: execute(pl), args.reps)
        reference = median_ns(lambda: dft_reference(params), args.reps)
        naive = median_ns(lambda: naive_dft(x), args.reps)
        print(
            json.dumps(
                {
                    "p": p,
                    "u": params.u,
                    "reps": args.reps,
                    "fast_ns": fast,
                    "reference_ns": reference,
                    "naive_ns": naive,
                    "naive_over_fast": round(naive / fast, 1),
                }
            )
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
