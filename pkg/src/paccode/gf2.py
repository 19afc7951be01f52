"""Bit-packed GF(2) vectors, cyclic shifts, and shift-set sums.

Vectors are stored as Python ints: bit ``p - 1`` of the int holds
position ``p`` of the vector (positions are 1-based throughout the
public API; shift amounts are 0-based).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class BitVec:
    """Immutable fixed-length binary vector over GF(2)."""

    length: int
    value: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("value has bits outside the declared length")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVec":
        """Build from an iterable of 0/1, position 1 first."""
        value = 0
        length = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            value |= b << length
            length += 1
        return cls(length, value)

    @classmethod
    def from_string(cls, s: str) -> "BitVec":
        """Parse a bit string, leftmost character = position 1."""
        return cls.from_bits(int(ch) for ch in s)

    @classmethod
    def zeros(cls, length: int) -> "BitVec":
        return cls(length, 0)

    @classmethod
    def unit(cls, position: int, length: int) -> "BitVec":
        """Unit vector e_position (1-based)."""
        if not 1 <= position <= length:
            raise ValueError(f"position {position} out of range 1..{length}")
        return cls(length, 1 << (position - 1))

    def bit(self, position: int) -> int:
        """Element at 1-based position."""
        if not 1 <= position <= self.length:
            raise ValueError(f"position {position} out of range 1..{self.length}")
        return (self.value >> (position - 1)) & 1

    def __iter__(self) -> Iterator[int]:
        v = self.value
        for _ in range(self.length):
            yield v & 1
            v >>= 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")
        return BitVec(self.length, self.value ^ other.value)

    def to_string(self) -> str:
        """Comma-free bit string, leftmost character = position 1."""
        return "".join(str(b) for b in self)

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class ShiftSet:
    """A set of clockwise cyclic shift amounts naming a GF(2) sum of
    shift matrices (sum over l of C_L^l)."""

    shifts: frozenset
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "shifts", frozenset(self.shifts))
        for l in self.shifts:
            if not 0 <= l <= self.length - 1:
                raise ValueError(f"shift {l} out of range 0..{self.length - 1}")

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.shifts))

    def __len__(self) -> int:
        return len(self.shifts)


def _rotate(value: int, j: int, length: int) -> int:
    """Rotate the packed value so output bit k = input bit (k - j) mod length."""
    j %= length
    if j == 0:
        return value
    mask = (1 << length) - 1
    return ((value << j) | (value >> (length - j))) & mask


def cyclic_shift(v: BitVec, j: int) -> BitVec:
    """Clockwise cyclic shift by j places: output position p holds input
    position ((p - 1 - j) mod L) + 1. Equivalent to multiplying the
    polynomial view by x^j mod x^L - 1."""
    if j < 0:
        raise ValueError(f"shift must be non-negative, got {j}")
    return BitVec(v.length, _rotate(v.value, j, v.length))


def apply_shift_set(v: BitVec, s: ShiftSet) -> BitVec:
    """XOR of cyclic_shift(v, l) over l in s; empty set gives zero."""
    if s.length != v.length:
        raise ValueError(f"length mismatch: shift set {s.length}, vector {v.length}")
    acc = 0
    for l in s.shifts:
        acc ^= _rotate(v.value, l, v.length)
    return BitVec(v.length, acc)


def hamming_weight(v: BitVec) -> int:
    """Number of ones."""
    return v.value.bit_count()
