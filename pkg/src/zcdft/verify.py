"""Self-verification: every library invariant checked against brute force.

Each check covers one property family over a grid of primes controlled by
pmax. Checks are pure and independent; run_all executes them in order and
reports the maximum observed error per family. A deliberate fault can be
injected into the fast DFT comparison to prove the harness is not vacuous.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import oracle, pattern, transform
from .gauss import const_from_qpo, gauss_sum_closed, quasi_phase_offset4
from .numtheory import build_tables, centered, legendre, mod_inverse, odd_primes
from .sequences import LmfhParams, ZcParams, lmfh_symbol, zc_time


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_error: float
    detail: str = ""


@dataclass(frozen=True)
class VerifyConfig:
    pmax: int = 199
    include_839: bool = False
    inject_fault: bool = False

    def primes(self, cap: int) -> list[int]:
        return odd_primes(min(self.pmax, cap))

    def transform_cases(self):
        """(p, roots, shifts) grid for the transform-oracle comparisons."""
        for p in self.primes(self.pmax):
            shifts = sorted({0, 1, (p - 1) // 2})
            yield p, range(1, p), shifts
        if self.include_839:
            p = 839
            step = (p - 1) // 32
            roots = sorted({1 + j * step for j in range(32)})
            yield p, roots, [0, 1, (p - 1) // 2]


def _tol(p: int) -> float:
    # Naive-oracle rounding grows with p; the fast path is more accurate.
    return 1e-9 * np.sqrt(p)


def check_modular_inverse(cfg: VerifyConfig) -> CheckResult:
    worst = 0
    for p in cfg.primes(199):
        tables = build_tables(p)
        for u in range(1, p):
            inv = mod_inverse(u, p)
            worst = max(worst, abs(u * inv % p - 1))
            if tables.inverses[u - 1] != inv or not 1 <= inv <= p - 1:
                return CheckResult("modular-inverse", False, 1.0, f"table mismatch p={p} u={u}")
    return CheckResult("modular-inverse", worst == 0, float(worst))


def check_legendre_symbol(cfg: VerifyConfig) -> CheckResult:
    for p in cfg.primes(199):
        squares = {(a * a) % p for a in range(1, p)}
        residues = 0
        for a in range(0, p):
            expect = 0 if a == 0 else (1 if a in squares else -1)
            if legendre(a, p) != expect:
                return CheckResult("legendre-symbol", False, 1.0, f"p={p} a={a}")
            residues += legendre(a, p) == 1
        if residues != (p - 1) // 2:
            return CheckResult("legendre-symbol", False, 1.0, f"residue count p={p}")
        for a in range(1, p):
            for b in (2, 3, a):
                if legendre(a * b, p) != legendre(a, p) * legendre(b, p):
                    return CheckResult("legendre-symbol", False, 1.0, f"multiplicativity p={p}")
    return CheckResult("legendre-symbol", True, 0.0)


def check_centered_residues(cfg: VerifyConfig) -> CheckResult:
    for p in cfg.primes(199):
        half = (p - 1) // 2
        for x in list(range(-2 * p, 2 * p, max(1, p // 7))) + [7, -56, p, -p]:
            c = centered(x, p)
            if not -half <= c <= half or (c - x) % p != 0:
                return CheckResult("centered-residues", False, 1.0, f"p={p} x={x}")
    return CheckResult("centered-residues", True, 0.0)


def check_constant_amplitude(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(61):
        for u in range(1, p):
            z = zc_time(ZcParams(p=p, u=u, ts=u % p))
            sym = lmfh_symbol(LmfhParams(p=p, s=-u, fs=u, po=0.3))
            worst = max(worst, np.abs(np.abs(z) - 1.0).max(), np.abs(np.abs(sym) - 1.0).max())
    return CheckResult("constant-amplitude", worst <= 1e-12, worst)


def check_lmfh_zc_conjugacy(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(61):
        for u in range(1, p):
            z = zc_time(ZcParams(p=p, u=u))
            worst = max(worst, np.abs(lmfh_symbol(LmfhParams(p=p, s=-u)) - z).max())
            worst = max(worst, np.abs(lmfh_symbol(LmfhParams(p=p, s=u)) - np.conj(z)).max())
    return CheckResult("lmfh-zc-conjugacy", worst <= 1e-12, worst)


def check_zc_autocorrelation(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(61):
        for u in range(1, p, max(1, (p - 1) // 8)):
            z = zc_time(ZcParams(p=p, u=u))
            for d in range(1, p):
                corr = abs(np.vdot(np.roll(z, -d), z))
                worst = max(worst, corr / p)
    return CheckResult("zc-autocorrelation", worst <= 1e-9, worst)


def check_cyclic_shift_rotation(cfg: VerifyConfig) -> CheckResult:
    for p in cfg.primes(61):
        for u in (1, 2, p - 1):
            base = zc_time(ZcParams(p=p, u=u))
            for ts in (1, (p - 1) // 2, p - 1):
                shifted = zc_time(ZcParams(p=p, u=u, ts=ts))
                if not np.array_equal(shifted, np.roll(base, -ts)):
                    return CheckResult("cyclic-shift-rotation", False, 1.0, f"p={p} u={u} ts={ts}")
    return CheckResult("cyclic-shift-rotation", True, 0.0)


def check_gauss_closed_vs_brute(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    branches = set()
    for p in cfg.primes(199):
        tol = _tol(p)
        for u in range(1, p):
            g = gauss_sum_closed(p, u)
            brute = oracle.brute_gauss_sum(ZcParams(p=p, u=u))
            worst = max(worst, abs(g.value - brute) / tol)
            branches.add((p % 4, legendre(2 * u, p)))
    passed = worst <= 1.0 and len(branches) == 4
    return CheckResult(
        "gauss-closed-vs-brute",
        passed,
        worst,
        f"error / (1e-9*sqrt(p)); branches={sorted(branches)}",
    )


def check_gauss_phase_form(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(199):
        for u in range(1, p):
            g = gauss_sum_closed(p, u)
            worst = max(worst, abs(g.value - const_from_qpo(p, g.qpo_times4)))
            worst = max(worst, abs(abs(g.value) - np.sqrt(p)))
            if g.qpo_times4 != quasi_phase_offset4(p, u):
                return CheckResult("gauss-phase-form", False, 1.0, f"p={p} u={u}")
    return CheckResult("gauss-phase-form", worst <= 1e-12 * np.sqrt(199), worst)


def _fast_vs_naive(cfg: VerifyConfig, direction: str) -> CheckResult:
    name = f"fast-{direction}-vs-naive"
    worst_rel = 0.0
    fault_pending = cfg.inject_fault and direction == transform.DFT
    for p, roots, shifts in cfg.transform_cases():
        tol = _tol(p)
        for u in roots:
            for ts in shifts:
                params = ZcParams(p=p, u=u, ts=ts)
                pl = transform.plan(params, direction)
                if fault_pending:
                    pl = dataclasses.replace(pl, fs=(pl.fs + 1) % p)
                    fault_pending = False
                fast = transform.execute(pl)
                x = zc_time(params)
                ref = oracle.naive_dft(x) if direction == transform.DFT else oracle.naive_idft(x)
                err = np.abs(fast - ref).max()
                worst_rel = max(worst_rel, err / tol)
    return CheckResult(name, worst_rel <= 1.0, worst_rel, "error / (1e-9*sqrt(p))")


def check_fast_dft_vs_naive(cfg: VerifyConfig) -> CheckResult:
    return _fast_vs_naive(cfg, transform.DFT)


def check_fast_idft_vs_naive(cfg: VerifyConfig) -> CheckResult:
    return _fast_vs_naive(cfg, transform.IDFT)


def check_reference_path_agreement(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(199):
        tol = 1e-10 * np.sqrt(p)
        for u in range(1, p):
            for ts in (0, (p - 1) // 2):
                params = ZcParams(p=p, u=u, ts=ts)
                d = np.abs(
                    transform.execute(transform.plan(params, transform.DFT))
                    - transform.dft_reference(params)
                ).max()
                i = np.abs(
                    transform.execute(transform.plan(params, transform.IDFT))
                    - transform.idft_reference(params)
                ).max()
                worst = max(worst, d / tol, i / tol)
    return CheckResult("reference-path-agreement", worst <= 1.0, worst, "error / (1e-10*sqrt(p))")


def check_shifted_dft_identity(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(61):
        tol = _tol(p)
        for u in range(1, p):
            for ts in sorted({0, 1, 2, (p - 1) // 2}):
                params = ZcParams(p=p, u=u, ts=ts)
                via_identity = oracle.shifted_dft_identity(params)
                direct = oracle.naive_dft(zc_time(params))
                fast = transform.execute(transform.plan(params, transform.DFT))
                worst = max(
                    worst,
                    np.abs(via_identity - direct).max() / tol,
                    np.abs(via_identity - fast).max() / tol,
                )
    return CheckResult("shifted-dft-identity", worst <= 1.0, worst, "error / (1e-9*sqrt(p))")


def check_transform_round_trip(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(61):
        for u in sorted({1, 2, p - 2, p - 1}):
            params = ZcParams(p=p, u=u)
            spectrum = transform.execute(transform.plan(params, transform.DFT))
            back = oracle.naive_idft(spectrum)
            worst = max(worst, np.abs(back - p * zc_time(params)).max() / (1e-8 * p))
    return CheckResult("transform-round-trip", worst <= 1.0, worst, "error / (1e-8*p)")


def check_spectrum_magnitude(cfg: VerifyConfig) -> CheckResult:
    worst = 0.0
    for p in cfg.primes(199):
        for u in range(1, p, max(1, (p - 1) // 16)):
            out = transform.execute(transform.plan(ZcParams(p=p, u=u), transform.DFT))
            worst = max(worst, np.abs(np.abs(out) - np.sqrt(p)).max())
    return CheckResult("spectrum-magnitude", worst <= 1e-9, worst)


def check_operation_counts(cfg: VerifyConfig) -> CheckResult:
    for p in [13] + ([199] if cfg.pmax >= 199 else []) + ([839] if cfg.include_839 else []):
        for direction in (transform.DFT, transform.IDFT):
            counters = transform.OpCounters()
            transform.execute(transform.plan(ZcParams(p=p, u=2), direction), counters)
            expect = (2 * (p - 1), 2 * (p - 1), p)
            got = (counters.additions, counters.modulo_reductions, counters.exp_evaluations)
            if got != expect:
                return CheckResult("operation-counts", False, 1.0, f"p={p}: {got} != {expect}")
    return CheckResult("operation-counts", True, 0.0)


def check_shift_gap(cfg: VerifyConfig) -> CheckResult:
    for p in cfg.primes(199):
        half = (p + 1) // 2
        for u in range(1, p):
            iu = mod_inverse(u, p)
            eq_dft_form = (half * (1 - iu)) % p
            eq_idft_form = (((p - 1) // 2) * (iu + 1)) % p
            if (eq_dft_form - eq_idft_form) % p != 1:
                return CheckResult("dft-idft-shift-gap", False, 1.0, f"p={p} u={u}")
            fwd = transform.plan(ZcParams(p=p, u=u), transform.DFT)
            inv = transform.plan(ZcParams(p=p, u=u), transform.IDFT)
            if (inv.fs - fwd.fs) % p != 1:
                return CheckResult("dft-idft-shift-gap", False, 1.0, f"plan gap p={p} u={u}")
            shared = (fwd.iu, fwd.ell, fwd.qpo_times4, fwd.const_factor) == (
                inv.iu,
                inv.ell,
                inv.qpo_times4,
                inv.const_factor,
            )
            if not shared or not np.array_equal(fwd.twiddles, inv.twiddles):
                return CheckResult("dft-idft-shift-gap", False, 1.0, f"plan share p={p} u={u}")
    return CheckResult("dft-idft-shift-gap", True, 0.0)


def check_pattern_flips(cfg: VerifyConfig) -> CheckResult:
    for p in cfg.primes(61):
        for u in range(1, p):
            pat = pattern.make_pattern(p, -u)
            for flip in (pattern.flip_dft, pattern.flip_idft, pattern.flip_conjugate):
                twice = flip(flip(pat))
                once = flip(pat)
                if twice != pat or once.orientation == pat.orientation:
                    return CheckResult("pattern-flip-involution", False, 1.0, f"p={p} u={u}")
            mirrored = sorted((p - 1 - t, -f) for t, f in pattern.flip_dft(pat).points)
            if mirrored != sorted(pattern.flip_idft(pat).points):
                return CheckResult("pattern-flip-involution", False, 1.0, f"mirror p={p} u={u}")
            fs = {f for _, f in pat.points}
            if fs != set(range(-(p - 1) // 2, (p - 1) // 2 + 1)):
                return CheckResult("pattern-flip-involution", False, 1.0, f"bijection p={p}")
    return CheckResult("pattern-flip-involution", True, 0.0)


def check_pattern_slope_inversion(cfg: VerifyConfig) -> CheckResult:
    for p in cfg.primes(61):
        for u in range(1, p):
            got = pattern.read_slope(pattern.flip_dft(pattern.make_pattern(p, -u)))
            if got != (-mod_inverse(u, p)) % p:
                return CheckResult("pattern-slope-inversion", False, 1.0, f"p={p} u={u}")
            generic = pattern.read_slope(pattern.flip_dft(pattern.make_pattern(p, u)))
            if generic != mod_inverse(u, p):
                return CheckResult("pattern-slope-inversion", False, 1.0, f"s-inverse p={p} u={u}")
    return CheckResult("pattern-slope-inversion", True, 0.0)


def check_pattern_shift_extraction(cfg: VerifyConfig) -> CheckResult:
    for p in cfg.primes(61):
        for u in range(1, p):
            for ts in (0, 1, (p - 1) // 2):
                pat = pattern.make_pattern(p, -u, 0, ts)
                for direction, flip in (
                    (transform.DFT, pattern.flip_dft),
                    (transform.IDFT, pattern.flip_idft),
                ):
                    extracted = pattern.read_shift(flip(pat))
                    planned = transform.plan(ZcParams(p=p, u=u, ts=ts), direction).fs
                    if (planned + extracted) % p != 0:
                        return CheckResult(
                            "pattern-shift-extraction",
                            False,
                            1.0,
                            f"p={p} u={u} ts={ts} {direction}: {extracted} vs plan {planned}",
                        )
                base = pattern.read_shift(pattern.flip_dft(pattern.make_pattern(p, -u)))
                with_ts = pattern.read_shift(pattern.flip_dft(pat))
                if (with_ts - base) % p != ts % p:
                    return CheckResult("pattern-shift-extraction", False, 1.0, f"ts offset p={p}")
    return CheckResult("pattern-shift-extraction", True, 0.0)


def check_oracle_adjointness(cfg: VerifyConfig) -> CheckResult:
    rng = np.random.default_rng(20260808)
    worst = 0.0
    for p in [13, 31, 61]:
        x = rng.normal(size=p) + 1j * rng.normal(size=p)
        y = rng.normal(size=p) + 1j * rng.normal(size=p)
        x /= np.linalg.norm(x)
        y /= np.linalg.norm(y)
        lhs = np.vdot(y, oracle.naive_dft(x))
        rhs = np.vdot(oracle.naive_idft(y), x)
        worst = max(worst, abs(lhs - rhs) / (1e-9 * p))
        rt = np.abs(oracle.naive_idft(oracle.naive_dft(x)) - p * x).max()
        worst = max(worst, rt / (1e-8 * p))
    return CheckResult("oracle-adjointness", worst <= 1.0, worst, "error / tolerance")


ALL_CHECKS: list[Callable[[VerifyConfig], CheckResult]] = [
    check_modular_inverse,
    check_legendre_symbol,
    check_centered_residues,
    check_constant_amplitude,
    check_lmfh_zc_conjugacy,
    check_zc_autocorrelation,
    check_cyclic_shift_rotation,
    check_gauss_closed_vs_brute,
    check_gauss_phase_form,
    check_fast_dft_vs_naive,
    check_fast_idft_vs_naive,
    check_reference_path_agreement,
    check_shifted_dft_identity,
    check_transform_round_trip,
    check_spectrum_magnitude,
    check_operation_counts,
    check_shift_gap,
    check_pattern_flips,
    check_pattern_slope_inversion,
    check_pattern_shift_extraction,
    check_oracle_adjointness,
]


def run_all(cfg: VerifyConfig) -> list[CheckResult]:
    return [check(cfg) for check in ALL_CHECKS]
