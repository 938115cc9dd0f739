"""Brute-force ground truth used to validate every fast path.

These are test-only reference implementations: quadratic-time transforms
with compensated summation, direct summation of the Gauss constant, and the
index-remapping identity for the DFT of a cyclically shifted sequence.
Accuracy beats speed here on purpose; the oracle must be at least as
accurate as the device under test.
"""

from __future__ import annotations

import math

import numpy as np

from .numtheory import mod_inverse
from .sequences import ZcParams, zc_time


def _compensated_transform(x: np.ndarray, sign: int) -> np.ndarray:
    """O(p^2) DFT (sign=-1) or unnormalized IDFT (sign=+1), Kahan-summed.

    Twiddle arguments are reduced as integers (n*k mod p) so every factor is
    an exact table entry; the accumulation across the p terms of each bin is
    compensated so rounding does not grow with p.
    """
    x = np.asarray(x, dtype=np.complex128)
    p = len(x)
    table = np.exp(sign * 2j * np.pi * np.arange(p) / p)
    k = np.arange(p)
    acc = np.zeros(p, dtype=np.complex128)
    comp = np.zeros(p, dtype=np.complex128)
    for n in range(p):
        term = x[n] * table[(n * k) % p]
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
    return acc


def naive_dft(x: np.ndarray) -> np.ndarray:
    """X[k] = sum_n x[n] * exp(-i*2*pi*n*k/p), by direct summation."""
    return _compensated_transform(x, -1)


def naive_idft(x: np.ndarray) -> np.ndarray:
    """X[k] = sum_n x[n] * exp(+i*2*pi*n*k/p), unnormalized."""
    return _compensated_transform(x, +1)


def brute_gauss_sum(params: ZcParams) -> complex:
    """Direct sum of the unshifted ZC samples, correctly rounded per component.

    Requires ts = 0; the cumulative-sum constant is a property of the base
    sequence (the DC bin of the shifted sequence equals it anyway).
    """
    if params.ts != 0:
        raise ValueError("brute_gauss_sum requires ts=0")
    z = zc_time(params)
    return complex(math.fsum(z.real), math.fsum(z.imag))


def shifted_dft_identity(params: ZcParams) -> np.ndarray:
    """DFT of a shifted ZC sequence via index remapping into the base sequence.

    F(k) = conj(Z(iu*k + ts)) * Z(ts) * F(0), with Z the unshifted sequence
    evaluated at arguments reduced mod p and F(0) from brute_gauss_sum. An
    independent route to the same spectrum as naive_dft(zc_time(params)).
    """
    p, u, ts = params.p, params.u, params.ts
    iu = mod_inverse(u, p)
    base = zc_time(ZcParams(p=p, u=u, ts=0))
    idx = (iu * np.arange(p) + ts) % p
    f0 = brute_gauss_sum(ZcParams(p=p, u=u, ts=0))
    return np.conj(base[idx]) * base[ts % p] * f0
