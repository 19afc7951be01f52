"""End-to-end PAC encoding: data insertion -> convolution -> polar transform."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple

from .conv import ConnectionPolynomial, conv_encode
from .gf2 import BitVec
from .polar import PolarDim, RateProfile, polar_encode


@dataclass(frozen=True)
class PacCode:
    """A PAC code (N, K, A, T) given by dimension, profile, and polynomial."""

    dim: PolarDim
    profile: RateProfile
    poly: ConnectionPolynomial

    def __post_init__(self) -> None:
        if self.profile.dim != self.dim:
            raise ValueError("profile dimension does not match code dimension")
        if self.poly.m > self.dim.N - 1:
            raise ValueError(f"memory {self.poly.m} >= block length {self.dim.N}")

    @property
    def N(self) -> int:
        return self.dim.N

    @property
    def K(self) -> int:
        return self.profile.K

    @property
    def rate(self) -> float:
        return self.K / self.N


class EncodeTrace(NamedTuple):
    """Intermediate wires of the encoding chain."""

    v: BitVec
    u: BitVec
    x: BitVec


def insert_data(d: BitVec, profile: RateProfile) -> BitVec:
    """Place the K data bits at the profile indices (increasing order),
    zeros elsewhere."""
    if d.length != profile.K:
        raise ValueError(f"data length {d.length} != K {profile.K}")
    value = 0
    for bit, pos in zip(d, profile.A):
        value |= bit << (pos - 1)
    return BitVec(profile.dim.N, value)


def extract_data(v: BitVec, profile: RateProfile) -> BitVec:
    """Read the carrier back at the profile indices."""
    if v.length != profile.dim.N:
        raise ValueError(f"carrier length {v.length} != N {profile.dim.N}")
    value = 0
    for k, pos in enumerate(profile.A):
        value |= v.bit(pos) << k
    return BitVec(profile.K, value)


def encode_trace(d: BitVec, code: PacCode) -> EncodeTrace:
    """Encode and expose the intermediate carrier v and conv output u."""
    v = insert_data(d, code.profile)
    u = conv_encode(v, code.poly)
    x = polar_encode(u, code.dim)
    return EncodeTrace(v, u, x)


def pac_encode(d: BitVec, code: PacCode) -> BitVec:
    """x = insert_data(d) . T . F^{(x)n}."""
    return encode_trace(d, code).x


def effective_generator(code: PacCode) -> List[BitVec]:
    """Rows pac_encode(e_k); they span the PAC codebook."""
    return [pac_encode(BitVec.unit(k, code.K), code) for k in range(1, code.K + 1)]
