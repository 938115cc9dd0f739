"""Closed-form cumulative sum of a ZC sequence (generalized quadratic Gauss sum).

The sum F(0) = sum_n Z(n) of a prime-length ZC sequence has magnitude
sqrt(p) and a phase determined exactly by the root and the residue class of
p mod 4:

    F(0) = sqrt(p) * l_2u * eta_p * exp(i*2*pi*u*(inv2**3 mod p)/p)

where inv2 = (p+1)/2 is the inverse of 2 mod p, l_2u the Legendre symbol of
2u, and eta_p = 1 for p = 1 (mod 4), -i for p = 3 (mod 4). Folding the three
phase factors into one rational angle gives the quasi phase offset QPo with
F(0) = sqrt(p) * exp(i*2*pi*QPo/p); QPo takes quarter-integer values, so it
is stored exactly as the integer 4*QPo.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numtheory import legendre, require_odd_prime


@dataclass(frozen=True)
class GaussSumResult:
    """Exact description of the cumulative-sum constant.

    magnitude is always sqrt(p); qpo_times4 is the exact integer 4*QPo; value
    is the complex constant itself.
    """

    magnitude: float
    qpo_times4: int
    value: complex


def _check_root(p: int, u: int) -> None:
    require_odd_prime(p)
    if not 1 <= u <= p - 1:
        raise ValueError(f"root must satisfy 1 <= u <= p-1, got u={u}")


def quasi_phase_offset4(p: int, u: int) -> int:
    """4*QPo = ((3 - 2*l_2u - (p mod 4))*p + u*(p+1)**3) / 2, an exact integer.

    (p+1)**3 is divisible by 8 and the leading coefficient is even for every
    odd prime, so the division by 2 is exact; this is asserted rather than
    assumed. Python integers are arbitrary precision, so u*(p+1)**3 needs no
    widening tricks even at p near 2**31.
    """
    _check_root(p, u)
    ell = legendre(2 * u, p)
    num = (3 - 2 * ell - (p % 4)) * p + u * (p + 1) ** 3
    if num % 2 != 0:
        raise AssertionError(f"4*QPo not integral for p={p}, u={u}")
    return num // 2


def gauss_sum_closed(p: int, u: int) -> GaussSumResult:
    """Closed-form evaluation of sum_n exp(-i*pi*u*n*(n+1)/p).

    The phase integer u*inv2**3 is reduced mod p before conversion, so the
    only floating-point steps are one sqrt and one complex exponential of a
    small angle.
    """
    _check_root(p, u)
    ell = legendre(2 * u, p)
    eta = 1.0 if p % 4 == 1 else -1.0j
    inv2 = (p + 1) // 2
    phase = (u * pow(inv2, 3, p)) % p
    magnitude = float(np.sqrt(p))
    value = magnitude * ell * eta * np.exp(2j * np.pi * phase / p)
    return GaussSumResult(
        magnitude=magnitude,
        qpo_times4=quasi_phase_offset4(p, u),
        value=complex(value),
    )


def const_from_qpo(p: int, qpo_times4: int) -> complex:
    """sqrt(p) * exp(i*2*pi*QPo/p) computed from the exact integer 4*QPo.

    Reduces 4*QPo mod 4p first, keeping the trig argument in [0, 2*pi).
    """
    q4 = qpo_times4 % (4 * p)
    return complex(np.sqrt(p) * np.exp(2j * np.pi * q4 / (4 * p)))
