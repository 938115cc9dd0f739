"""Prime-length Zadoff-Chu sequences and their linear-time DFT/IDFT.

The transform of a ZC sequence is computed in O(p) by accumulating integer
frequency points mod p and looking the phases up in a table of p-th roots of
unity, with the first-bin constant supplied in closed form by a generalized
quadratic Gauss sum. Quadratic-time oracles and the classical termwise
identities are included for verification.
"""

from .gauss import GaussSumResult, gauss_sum_closed, quasi_phase_offset4
from .numtheory import (
    LookupTables,
    build_tables,
    centered,
    is_prime,
    legendre,
    mod_inverse,
    odd_primes,
)
from .oracle import brute_gauss_sum, naive_dft, naive_idft, shifted_dft_identity
from .pattern import (
    OBVERSE,
    REVERSE,
    LmfhPattern,
    export_pattern,
    flip_conjugate,
    flip_dft,
    flip_idft,
    make_pattern,
    read_shift,
    read_slope,
)
from .sequences import LmfhParams, ZcParams, frequency_track, lmfh_symbol, zc_time
from .transform import (
    DFT,
    IDFT,
    OpCounters,
    TransformPlan,
    dft_reference,
    execute,
    idft_reference,
    plan,
)

__version__ = "0.1.0"

__all__ = [
    "DFT",
    "IDFT",
    "OBVERSE",
    "REVERSE",
    "GaussSumResult",
    "LmfhParams",
    "LmfhPattern",
    "LookupTables",
    "OpCounters",
    "TransformPlan",
    "ZcParams",
    "brute_gauss_sum",
    "build_tables",
    "centered",
    "dft_reference",
    "execute",
    "export_pattern",
    "flip_conjugate",
    "flip_dft",
    "flip_idft",
    "frequency_track",
    "gauss_sum_closed",
    "idft_reference",
    "is_prime",
    "legendre",
    "lmfh_symbol",
    "make_pattern",
    "mod_inverse",
    "naive_dft",
    "naive_idft",
    "odd_primes",
    "plan",
    "quasi_phase_offset4",
    "read_shift",
    "read_slope",
    "shifted_dft_identity",
    "zc_time",
]
