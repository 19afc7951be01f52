"""The cyclic-shift equivalence machinery: shift sets read off rows of the
polar transform, the equivalent inner-cyclic/outer-polar encoder, and
machine verifiers for the row identities and the weight monotonicity."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .codec import PacCode, insert_data, pac_encode
from .conv import ConnectionPolynomial, d_decomposition
from .gf2 import BitVec, ShiftSet, _rotate, apply_shift_set
from .polar import PolarDim, kron_row, polar_encode, row_weight

EXHAUSTIVE_WEIGHT_CHECK_LIMIT = 8


@dataclass(frozen=True)
class RowSumSpec:
    """Row i of the polar transform XORed with a masked subset of the
    rows below it."""

    i: int
    mask: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "mask", tuple(self.mask))
        if any(b not in (0, 1) for b in self.mask):
            raise ValueError("mask entries must be 0 or 1")


@dataclass
class VerifyReport:
    """Outcome of an identity sweep; empty violations means the sweep passed."""

    name: str
    checks: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        state = "PASS" if self.ok else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {self.checks} checks, {state}"


def row_sum(spec: RowSumSpec, dim: PolarDim) -> BitVec:
    """g_i XOR the masked rows g_{i+1} .. g_N."""
    N = dim.N
    if not 1 <= spec.i <= N:
        raise ValueError(f"row index {spec.i} out of range 1..{N}")
    if len(spec.mask) != N - spec.i:
        raise ValueError(f"mask length {len(spec.mask)} != N - i = {N - spec.i}")
    acc = kron_row(spec.i, dim).value
    for offset, bit in enumerate(spec.mask, start=1):
        if bit:
            acc ^= kron_row(spec.i + offset, dim).value
    return BitVec(N, acc)


def shift_set(m: int, dim: PolarDim) -> ShiftSet:
    """Shift amounts equating D^m with cyclic shifts: the support of row
    m+1 of the polar transform at positions 2..N, read as 0-based shifts.
    m = 0 maps to {0} (both sides are the identity)."""
    N = dim.N
    if not 0 <= m <= N - 1:
        raise ValueError(f"m {m} out of range 0..{N - 1}")
    if m == 0:
        return ShiftSet(frozenset({0}), N)
    row = kron_row(m + 1, dim).value
    return ShiftSet(frozenset(l for l in range(1, N) if (row >> l) & 1), N)


def total_shift_set(c: ConnectionPolynomial, dim: PolarDim) -> ShiftSet:
    """Mod-2 reduction of the shift sets over the two-diagonal decomposition
    of T: shifts appearing an even number of times cancel."""
    if c.m > dim.N - 1:
        raise ValueError(f"memory {c.m} >= block length {dim.N}")
    total: set = set()
    for m in d_decomposition(c):
        total ^= shift_set(m, dim).shifts
    return ShiftSet(frozenset(total), dim.N)


def equiv_encode(d: BitVec, code: PacCode) -> BitVec:
    """Outer polar encoding of the carrier followed by the inner cyclic
    shift-set sum; equals pac_encode for every data word."""
    outer = polar_encode(insert_data(d, code.profile), code.dim)
    return apply_shift_set(outer, total_shift_set(code.poly, code.dim))


def verify_theorem(dim: PolarDim) -> VerifyReport:
    """Check, for every m in [0, N-1] and row k, that applying shift_set(m)
    to g_k yields g_k XOR g_{k+m} when k+m <= N and g_k itself otherwise
    (for m = 0 both readings are g_k)."""
    N = dim.N
    report = VerifyReport(name=f"theorem n={dim.n}")
    rows = [kron_row(i, dim).value for i in range(1, N + 1)]
    for m in range(N):
        s = shift_set(m, dim)
        for k in range(1, N + 1):
            lhs = apply_shift_set(BitVec(N, rows[k - 1]), s).value
            if m == 0 or k + m > N:
                expected = rows[k - 1]
            else:
                expected = rows[k - 1] ^ rows[k + m - 1]
            report.checks += 1
            if lhs != expected:
                report.violations.append(f"m={m} k={k}: {lhs:0{N}b} != {expected:0{N}b}")
    return report


def _odd_subsets(N: int):
    for bits in range(1 << N):
        if bits.bit_count() % 2 == 1:
            yield [l for l in range(N) if (bits >> l) & 1]


def verify_prop1_exhaustive(dim: PolarDim) -> VerifyReport:
    """Enumerate every (row, below-row mask, odd shift set) triple and check
    that the shifted row sum never drops below the base row weight."""
    N = dim.N
    if N > EXHAUSTIVE_WEIGHT_CHECK_LIMIT:
        raise ValueError(f"exhaustive mode limited to N <= {EXHAUSTIVE_WEIGHT_CHECK_LIMIT}")
    report = VerifyReport(name=f"prop1 exhaustive N={N}")
    rows = [kron_row(i, dim).value for i in range(1, N + 1)]
    odd_sets = list(_odd_subsets(N))
    for i in range(1, N + 1):
        base_weight = row_weight(i, dim)
        for mask_bits in range(1 << (N - i)):
            g = rows[i - 1]
            for offset in range(N - i):
                if (mask_bits >> offset) & 1:
                    g ^= rows[i + offset]
            for shifts in odd_sets:
                acc = 0
                for l in shifts:
                    acc ^= _rotate(g, l, N)
                report.checks += 1
                if acc.bit_count() < base_weight:
                    report.violations.append(
                        f"i={i} mask={mask_bits:b} shifts={shifts}: "
                        f"w={acc.bit_count()} < {base_weight}"
                    )
    return report


def verify_prop1_randomized(dim: PolarDim, samples: int, seed: int) -> VerifyReport:
    """Sample (row, mask, odd shift set) uniformly: row index uniform,
    mask uniform, shift-set size uniform over the odd sizes then a uniform
    subset of that size."""
    N = dim.N
    rng = random.Random(seed)
    report = VerifyReport(name=f"prop1 randomized N={N} samples={samples} seed={seed}")
    rows = [kron_row(i, dim).value for i in range(1, N + 1)]
    odd_sizes = list(range(1, N + 1, 2))
    for _ in range(samples):
        i = rng.randint(1, N)
        g = rows[i - 1]
        if i < N:
            mask_bits = rng.getrandbits(N - i)
            for offset in range(N - i):
                if (mask_bits >> offset) & 1:
                    g ^= rows[i + offset]
        size = rng.choice(odd_sizes)
        shifts = rng.sample(range(N), size)
        acc = 0
        for l in shifts:
            acc ^= _rotate(g, l, N)
        report.checks += 1
        if acc.bit_count() < row_weight(i, dim):
            report.violations.append(
                f"i={i} shifts={sorted(shifts)}: w={acc.bit_count()} < {row_weight(i, dim)}"
            )
    return report


def verify_prop1(
    dim: PolarDim,
    mode: str = "exhaustive",
    samples: int = 100_000,
    seed: int = 42,
) -> VerifyReport:
    if mode == "exhaustive":
        return verify_prop1_exhaustive(dim)
    if mode == "randomized":
        return verify_prop1_randomized(dim, samples, seed)
    raise ValueError(f"unknown mode {mode!r}")


def verify_equivalence(
    code: PacCode,
    samples: Optional[int] = None,
    seed: int = 42,
) -> VerifyReport:
    """Check equiv_encode == pac_encode, exhaustively over the codebook when
    samples is None (requires K <= 20), else on random data words."""
    K = code.K
    report = VerifyReport(name=f"equivalence N={code.N} K={K} poly={code.poly.to_octal()}")
    if samples is None:
        if K > 20:
            raise ValueError("exhaustive equivalence check limited to K <= 20")
        words = (BitVec(K, w) for w in range(1 << K))
    else:
        rng = random.Random(seed)
        words = (BitVec(K, rng.getrandbits(K)) for _ in range(samples))
    for d in words:
        report.checks += 1
        if pac_encode(d, code) != equiv_encode(d, code):
            report.violations.append(f"d={d}")
    return report
