"""Exact weight spectra by exhaustive Gray-order codebook enumeration,
minimum distance, and the union-bound frame error estimate."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .gf2 import BitVec
from .polar import RateProfile, row_weight

DEFAULT_GUARD_K = 30
_BATCH_STEPS = 1 << 20


@dataclass(frozen=True)
class WeightSpectrum:
    """Map from Hamming weight d to codeword count A_d."""

    counts: Dict[int, int]
    N: int
    K: int

    def __post_init__(self) -> None:
        total = sum(self.counts.values())
        if total != 1 << self.K:
            raise ValueError(f"counts sum to {total}, expected 2^{self.K}")
        if any(d < 0 or d > self.N for d in self.counts):
            raise ValueError("weight outside [0, N]")

    def count(self, d: int) -> int:
        return self.counts.get(d, 0)


def _pack_rows(gen: Sequence[BitVec]) -> Tuple[np.ndarray, int]:
    N = gen[0].length
    if any(g.length != N for g in gen):
        raise ValueError("generator rows must share one length")
    words = (N + 63) // 64
    rows = np.zeros((len(gen), words), dtype=np.uint64)
    for k, g in enumerate(gen):
        v = g.value
        for w in range(words):
            rows[k, w] = (v >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return rows, N


def _chunk_counts(rows: np.ndarray, N: int, p: int, chunk: int) -> np.ndarray:
    """Weight histogram of the sub-codebook with the top p data bits fixed
    to `chunk`, Gray-enumerating the remaining bits (one row XOR per step)."""
    K = rows.shape[0]
    counts = np.zeros(N + 1, dtype=np.int64)
    carry = np.zeros(rows.shape[1], dtype=np.uint64)
    for j in range(p):
        if (chunk >> j) & 1:
            carry ^= rows[j]
    counts[int(np.bitwise_count(carry).sum())] += 1
    steps = (1 << (K - p)) - 1
    start = 1
    while start <= steps:
        stop = min(start + _BATCH_STEPS, steps + 1)
        j = np.arange(start, stop, dtype=np.int64)
        flip_idx = np.log2((j & -j).astype(np.float64)).astype(np.int64) + p
        block = rows[flip_idx]
        np.bitwise_xor.accumulate(block, axis=0, out=block)
        block ^= carry
        weights = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
        counts += np.bincount(weights, minlength=N + 1)
        carry = block[-1].copy()
        start = stop
    return counts


def weight_spectrum(
    gen: Sequence[BitVec],
    guard_k: int = DEFAULT_GUARD_K,
    chunks: int = 1,
) -> WeightSpectrum:
    """Exact counts over all 2^K codewords spanned by the generator rows.

    The enumeration walks the codebook in reflected-binary order so each
    step XORs exactly one row; `chunks` (a power of two) fixes that many
    prefixes of the top data bits, each enumerated independently.
    """
    K = len(gen)
    if K < 1:
        raise ValueError("need at least one generator row")
    if K > guard_k:
        raise ValueError(
            f"K={K} exceeds guard {guard_k}; pass a larger guard_k to confirm "
            f"a 2^{K}-codeword enumeration is intended"
        )
    p = chunks.bit_length() - 1
    if chunks < 1 or (1 << p) != chunks or p > K:
        raise ValueError(f"chunks must be a power of two in [1, 2^K], got {chunks}")
    rows, N = _pack_rows(gen)
    counts = np.zeros(N + 1, dtype=np.int64)
    for chunk in range(chunks):
        counts += _chunk_counts(rows, N, p, chunk)
    return WeightSpectrum(
        counts={d: int(c) for d, c in enumerate(counts) if c},
        N=N,
        K=K,
    )


def min_distance(spectrum: WeightSpectrum) -> Tuple[int, int]:
    """Smallest nonzero weight with a positive count, and that count."""
    nonzero = [d for d in spectrum.counts if d > 0]
    if not nonzero:
        raise ValueError("spectrum has no nonzero codewords")
    d_min = min(nonzero)
    return d_min, spectrum.counts[d_min]


def dmin_lower_bound(profile: RateProfile) -> int:
    """Minimum row weight of the polar transform over the profile indices."""
    return min(row_weight(i, profile.dim) for i in profile.A)


def q_function(x: float) -> float:
    """Gaussian tail probability."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def union_bound(spectrum: WeightSpectrum, rate: float, ebn0_db: float) -> float:
    """Sum over d > 0 of A_d * Q(sqrt(2 d rate Eb/N0)); may exceed 1 at
    low SNR."""
    if not 0.0 < rate <= 1.0:
        raise ValueError(f"rate must be in (0, 1], got {rate}")
    ebn0 = 10.0 ** (ebn0_db / 10.0)
    return sum(
        a * q_function(math.sqrt(2.0 * d * rate * ebn0))
        for d, a in spectrum.counts.items()
        if d > 0
    )


def spectrum_csv_lines(spectrum: WeightSpectrum) -> List[str]:
    """CSV body: header then weight,count rows sorted by weight."""
    lines = ["weight,count"]
    lines += [f"{d},{spectrum.counts[d]}" for d in sorted(spectrum.counts)]
    return lines
