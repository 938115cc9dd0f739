"""Command-line front end.

Subcommands: gen (time-domain sequence), dft / idft (fast, reference or
naive transform), pattern (point-set CSV, optionally flipped), verify (full
invariant suite) and bench (timing + operation counts). Exit codes: 0 ok,
1 verification failure, 2 bad arguments. All data outputs are deterministic
given the flags; only bench timings vary run to run.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

import numpy as np

from . import __version__, oracle, pattern, transform
from .numtheory import is_prime
from .sequences import ZcParams, zc_time
from .verify import VerifyConfig, run_all

# 17 significant decimal digits round-trip any binary64 value exactly, so
# files can stand in for in-memory arrays in cross-checks.
_FMT = "{:.17g}"


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _sequence_text(args, samples: np.ndarray) -> str:
    if args.format == "json":
        payload = {
            "p": args.p,
            "u": args.u,
            "ts": args.ts,
            "samples": [[float(v.real), float(v.imag)] for v in samples],
        }
        return json.dumps(payload) + "\n"
    lines = ["k,re,im"]
    lines.extend(
        f"{k},{_FMT.format(v.real)},{_FMT.format(v.imag)}" for k, v in enumerate(samples)
    )
    return "\n".join(lines) + "\n"


def _zc_params(parser: argparse.ArgumentParser, args) -> ZcParams:
    if not is_prime(args.p) or args.p < 3 or args.p % 2 == 0:
        parser.error(f"--p must be an odd prime, got {args.p}")
    if not 1 <= args.u <= args.p - 1:
        parser.error(f"--u must be in [1, p-1], got {args.u}")
    if not 0 <= args.ts <= args.p - 1:
        parser.error(f"--ts must be in [0, p-1], got {args.ts}")
    return ZcParams(p=args.p, u=args.u, ts=args.ts)


def cmd_gen(parser, args) -> int:
    params = _zc_params(parser, args)
    _write_text(args.out, _sequence_text(args, zc_time(params)))
    return 0


def cmd_transform(parser, args) -> int:
    params = _zc_params(parser, args)
    direction = transform.DFT if args.command == "dft" else transform.IDFT
    if args.method == "fast":
        out = transform.execute(transform.plan(params, direction))
    elif args.method == "reference":
        if direction == transform.DFT:
            out = transform.dft_reference(params)
        else:
            out = transform.idft_reference(params)
    else:
        x = zc_time(params)
        out = oracle.naive_dft(x) if direction == transform.DFT else oracle.naive_idft(x)
    if direction == transform.IDFT and args.normalize:
        out = out / params.p
    _write_text(args.out, _sequence_text(args, out))
    return 0


_FLIPS = {
    "dft": pattern.flip_dft,
    "idft": pattern.flip_idft,
    "conj": pattern.flip_conjugate,
}


def cmd_pattern(parser, args) -> int:
    params = _zc_params(parser, args)
    pat = pattern.make_pattern(params.p, -params.u, 0, params.ts)
    for name in [f.strip() for f in args.flip.split(",")]:
        if name == "none":
            continue
        if name not in _FLIPS:
            parser.error(f"--flip entries must be none|dft|idft|conj, got {name!r}")
        pat = _FLIPS[name](pat)
    _write_text(args.out, pattern.export_pattern(pat))
    return 0


def cmd_verify(parser, args) -> int:
    if args.pmax < 3:
        parser.error("--pmax must be at least 3")
    cfg = VerifyConfig(
        pmax=args.pmax,
        include_839=args.include_839,
        inject_fault=args.inject_fault,
    )
    results = run_all(cfg)
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failures += not r.passed
        detail = f"  [{r.detail}]" if r.detail else ""
        print(f"[{status}] {r.name:<{width}}  max error {r.max_error:.3e}{detail}")
    print(f"{len(results) - failures}/{len(results)} property families passed")
    return 1 if failures else 0


def _median_ns(fn, reps: int) -> int:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def cmd_bench(parser, args) -> int:
    params = _zc_params(parser, args)
    if args.reps < 1:
        parser.error("--reps must be positive")
    pl = transform.plan(params, transform.DFT)
    x = zc_time(params)
    counters = transform.OpCounters()
    transform.execute(pl, counters)
    report = {
        "p": params.p,
        "u": params.u,
        "reps": args.reps,
        "fast_ns": _median_ns(lambda: transform.execute(pl), args.reps),
        "reference_ns": _median_ns(lambda: transform.dft_reference(params), args.reps),
        "naive_ns": _median_ns(lambda: oracle.naive_dft(x), args.reps),
        "additions": counters.additions,
        "modulo_reductions": counters.modulo_reductions,
        "exp_evaluations": counters.exp_evaluations,
    }
    print(json.dumps(report, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcdft",
        description="Zadoff-Chu sequences and their linear-time DFT/IDFT.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_zc_flags(sp, with_format=True):
        sp.add_argument("--p", type=int, required=True, help="prime sequence length")
        sp.add_argument("--u", type=int, required=True, help="root, in [1, p-1]")
        sp.add_argument("--ts", type=int, default=0, help="cyclic shift, in [0, p-1]")
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        if with_format:
            sp.add_argument("--format", choices=["csv", "json"], default="csv")

    sp = sub.add_parser("gen", help="write the time-domain ZC sequence")
    add_zc_flags(sp)

    for name, blurb in (("dft", "forward transform"), ("idft", "inverse transform")):
        sp = sub.add_parser(name, help=f"write the {blurb} of the ZC sequence")
        add_zc_flags(sp)
        sp.add_argument(
            "--method",
            choices=["fast", "reference", "naive"],
            default="fast",
            help="fast accumulation loop, termwise identity, or brute force",
        )
        if name == "idft":
            sp.add_argument(
                "--normalize", action="store_true", help="divide the output by p"
            )

    sp = sub.add_parser("pattern", help="write the lmFH pattern as CSV")
    add_zc_flags(sp, with_format=False)
    sp.add_argument(
        "--flip",
        default="none",
        help="ordered comma list of flips to apply: none|dft|idft|conj",
    )

    sp = sub.add_parser("verify", help="run the full invariant suite")
    sp.add_argument("--pmax", type=int, default=199, help="largest prime in the grids")
    sp.add_argument(
        "--include-839", action="store_true", help="add p=839 with 32 sampled roots"
    )
    sp.add_argument(
        "--inject-fault",
        action="store_true",
        help="sanity check: perturb one frequency shift; verification must fail",
    )

    sp = sub.add_parser("bench", help="time the fast, reference and naive paths")
    sp.add_argument("--p", type=int, default=839, help="prime sequence length")
    sp.add_argument("--u", type=int, default=25, help="root, in [1, p-1]")
    sp.add_argument("--ts", type=int, default=0, help="cyclic shift, in [0, p-1]")
    sp.add_argument("--reps", type=int, default=100, help="repetitions per path")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        return cmd_gen(parser, args)
    if args.command in ("dft", "idft"):
        return cmd_transform(parser, args)
    if args.command == "pattern":
        return cmd_pattern(parser, args)
    if args.command == "verify":
        return cmd_verify(parser, args)
    if args.command == "bench":
        return cmd_bench(parser, args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
