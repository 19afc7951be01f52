"""Rows and action of the polar transform F^{(x)n}, and rate profiles."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Union

from .gf2 import BitVec


class ProfileError(ValueError):
    """Base class for rate-profile file problems."""


class ProfileFormatError(ProfileError):
    """File does not match the profile schema."""


class ProfileIndexError(ProfileError):
    """An index is out of range for the declared N."""


class ProfileDuplicateError(ProfileError):
    """The same index is listed more than once."""


@dataclass(frozen=True)
class PolarDim:
    """Block length N = 2^n of the polar transform."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def N(self) -> int:
        return 1 << self.n

    @classmethod
    def from_block_length(cls, N: int) -> "PolarDim":
        n = N.bit_length() - 1
        if N < 2 or (1 << n) != N:
            raise ValueError(f"N must be a power of two >= 2, got {N}")
        return cls(n)


@dataclass(frozen=True)
class RateProfile:
    """Ordered data index set A of size K inside {1..N}."""

    dim: PolarDim
    A: tuple = field(default=())

    def __post_init__(self) -> None:
        a = tuple(sorted(self.A))
        if not a:
            raise ValueError("profile must contain at least one index")
        if len(set(a)) != len(a):
            raise ProfileDuplicateError(f"duplicate indices in profile: {self.A}")
        if a[0] < 1 or a[-1] > self.dim.N:
            raise ProfileIndexError(f"profile index out of range 1..{self.dim.N}")
        object.__setattr__(self, "A", a)

    @property
    def K(self) -> int:
        return len(self.A)


def kron_row(i: int, dim: PolarDim) -> BitVec:
    """Row i (1-based) of F^{(x)n}: column j is 1 iff the bit pattern of
    j-1 is covered by that of i-1."""
    N = dim.N
    if not 1 <= i <= N:
        raise ValueError(f"row index {i} out of range 1..{N}")
    m = i - 1
    # enumerate all submasks of m
    value = 1  # submask 0
    s = m
    while s:
        value |= 1 << s
        s = (s - 1) & m
    return BitVec(N, value)


def row_weight(i: int, dim: PolarDim) -> int:
    """Hamming weight of row i: 2^popcount(i-1)."""
    if not 1 <= i <= dim.N:
        raise ValueError(f"row index {i} out of range 1..{dim.N}")
    return 1 << (i - 1).bit_count()


@lru_cache(maxsize=None)
def _stage_masks(n: int) -> tuple:
    """For each stage s = 2^t, the bit mask selecting positions i (0-based)
    with i & s == 0."""
    N = 1 << n
    masks = []
    for t in range(n):
        s = 1 << t
        mask = 0
        for i in range(N):
            if not i & s:
                mask |= 1 << i
        masks.append((s, mask))
    return tuple(masks)


def polar_encode_value(value: int, dim: PolarDim) -> int:
    """Butterfly transform on a packed int (bit k = position k+1)."""
    for s, mask in _stage_masks(dim.n):
        value ^= (value >> s) & mask
    return value


def polar_encode(u: BitVec, dim: PolarDim) -> BitVec:
    """u -> u F^{(x)n}, computed as n stages of pairwise XOR."""
    if u.length != dim.N:
        raise ValueError(f"length mismatch: vector {u.length}, N {dim.N}")
    return BitVec(dim.N, polar_encode_value(u.value, dim))


def rm_profile(dim: PolarDim, K: int) -> RateProfile:
    """The K indices with largest row weight; ties prefer the larger index."""
    N = dim.N
    if not 1 <= K <= N:
        raise ValueError(f"K {K} out of range 1..{N}")
    order = sorted(range(1, N + 1), key=lambda i: ((i - 1).bit_count(), i), reverse=True)
    return RateProfile(dim, tuple(order[:K]))


def bhattacharyya_profile(dim: PolarDim, K: int, design_erasure: float) -> RateProfile:
    """K indices with smallest Bhattacharyya parameter under the erasure
    recursion Z_upper = 2Z - Z^2, Z_lower = Z^2; ties prefer the larger index."""
    N = dim.N
    if not 1 <= K <= N:
        raise ValueError(f"K {K} out of range 1..{N}")
    if not 0.0 < design_erasure < 1.0:
        raise ValueError(f"design erasure must be in (0,1), got {design_erasure}")
    z = [design_erasure]
    for _ in range(dim.n):
        z = [2.0 * x - x * x for x in z] + [x * x for x in z]
    order = sorted(range(1, N + 1), key=lambda i: (z[i - 1], -i))
    return RateProfile(dim, tuple(sorted(order[:K])))


def load_profile(path: Union[str, Path]) -> RateProfile:
    """Read a profile file: first line "N=<int>", second line 1-based indices."""
    text = Path(path).read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("N="):
        raise ProfileFormatError(f"{path}: expected 'N=<int>' then an index line")
    try:
        N = int(lines[0][2:])
    except ValueError as exc:
        raise ProfileFormatError(f"{path}: bad block length {lines[0]!r}") from exc
    try:
        dim = PolarDim.from_block_length(N)
    except ValueError as exc:
        raise ProfileFormatError(f"{path}: {exc}") from exc
    try:
        indices = [int(tok) for tok in " ".join(lines[1:]).split()]
    except ValueError as exc:
        raise ProfileFormatError(f"{path}: non-integer index") from exc
    if len(set(indices)) != len(indices):
        raise ProfileDuplicateError(f"{path}: duplicate indices")
    if any(i < 1 or i > N for i in indices):
        raise ProfileIndexError(f"{path}: index out of range 1..{N}")
    return RateProfile(dim, tuple(indices))


def save_profile(profile: RateProfile, path: Union[str, Path]) -> None:
    """Write a profile in the load_profile schema."""
    Path(path).write_text(
        f"N={profile.dim.N}\n" + " ".join(str(i) for i in profile.A) + "\n"
    )
