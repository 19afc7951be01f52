"""BPSK over AWGN with reproducible counter-based noise streams."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gf2 import BitVec


@dataclass(frozen=True)
class ChannelConfig:
    """Eb/N0 operating point; sigma is derived from the code rate."""

    ebn0_db: float
    rate: float

    def __post_init__(self) -> None:
        if not 0.0 < self.rate <= 1.0:
            raise ValueError(f"rate must be in (0, 1], got {self.rate}")

    @property
    def sigma(self) -> float:
        return math.sqrt(1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0)))


@dataclass(frozen=True)
class RngStream:
    """One reproducible substream of a master seed. Philox is counter
    based, so (master_seed, stream_index) pins the sample sequence
    bit-exactly regardless of how many streams run concurrently."""

    master_seed: int
    stream_index: int

    def generator(self) -> np.random.Generator:
        key = np.array(
            [self.master_seed & 0xFFFFFFFFFFFFFFFF, self.stream_index & 0xFFFFFFFFFFFFFFFF],
            dtype=np.uint64,
        )
        return np.random.Generator(np.random.Philox(key=key))


def modulate(x: BitVec) -> np.ndarray:
    """BPSK: bit 0 -> +1, bit 1 -> -1."""
    bits = np.fromiter(x, dtype=np.float64, count=x.length)
    return 1.0 - 2.0 * bits


def transmit(s: np.ndarray, cfg: ChannelConfig, rng: RngStream) -> np.ndarray:
    """Add white Gaussian noise of standard deviation cfg.sigma."""
    gen = rng.generator()
    return s + cfg.sigma * gen.standard_normal(s.shape)


def llr(y: np.ndarray, cfg: ChannelConfig) -> np.ndarray:
    """Channel LLRs 2y/sigma^2; positive favors bit 0."""
    return 2.0 * y / (cfg.sigma**2)
