"""Fano sequential decoding over the rate-profile tree, with node-visit
accounting, plus a brute-force maximum-likelihood oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .codec import PacCode, extract_data, pac_encode
from .gf2 import BitVec
from .polar import polar_encode_value, PolarDim

METRIC_FLOOR = -1.0e4
_LN2 = math.log(2.0)

ML_ORACLE_MAX_K = 16


@dataclass(frozen=True)
class DecoderConfig:
    """Fano search knobs. bias=None uses the code rate K/N; max_visits=None
    uses 10^6 * N. anv_per_data_bit switches the ANV denominator to K."""

    delta: float = 2.0
    bias: Optional[float] = None
    max_visits: Optional[int] = None
    llr_domain: str = "exact"
    anv_per_data_bit: bool = False

    def __post_init__(self) -> None:
        if self.delta <= 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if self.llr_domain not in ("exact", "minsum"):
            raise ValueError(f"llr_domain must be exact or minsum, got {self.llr_domain!r}")

    def resolved_bias(self, code: PacCode) -> float:
        return code.rate if self.bias is None else self.bias

    def resolved_max_visits(self, code: PacCode) -> int:
        mv = 1_000_000 * code.N if self.max_visits is None else self.max_visits
        if mv < code.N:
            raise ValueError(f"max_visits {mv} < N {code.N}")
        return mv


@dataclass(frozen=True)
class DecodeResult:
    v_hat: BitVec
    d_hat: BitVec
    forward_visits: int
    anv: float
    timed_out: bool


def branch_metric(lmbda: float, u_bit: int, bias: float) -> float:
    """Fano branch metric 1 - log2(1 + exp(-(1-2u) * lambda)) - bias,
    clipped at METRIC_FLOOR."""
    z = -(1.0 - 2.0 * u_bit) * lmbda
    if z > 60.0:
        softplus = z  # log(1+e^z) ~ z
    else:
        softplus = math.log1p(math.exp(z))
    gamma = 1.0 - softplus / _LN2 - bias
    return max(gamma, METRIC_FLOOR)


def _f_exact(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # boxplus: 2 atanh(tanh(a/2) tanh(b/2)), in a form stable for large LLRs
    return (
        np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))
        + np.log1p(np.exp(-np.abs(a + b)))
        - np.log1p(np.exp(-np.abs(a - b)))
    )


def _f_minsum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))


def path_llr(llrs: Sequence[float], u_prefix: Sequence[int], domain: str = "exact") -> float:
    """LLR of bit position len(u_prefix)+1 given channel LLRs and the
    decided transform-input prefix (successive-cancellation recursion)."""
    alpha = np.asarray(llrs, dtype=np.float64)
    n_bits = alpha.size.bit_length() - 1
    if alpha.size != 1 << n_bits:
        raise ValueError(f"LLR length {alpha.size} is not a power of two")
    if len(u_prefix) >= alpha.size:
        raise ValueError("prefix must be shorter than the block")
    f = _f_exact if domain == "exact" else _f_minsum
    u = list(u_prefix)
    while alpha.size > 1:
        half = alpha.size // 2
        a, b = alpha[:half], alpha[half:]
        if len(u) < half:
            alpha = f(a, b)
        else:
            beta_val = sum(bit << k for k, bit in enumerate(u[:half]))
            if half > 1:
                beta_val = polar_encode_value(beta_val, PolarDim.from_block_length(half))
            beta = np.fromiter(
                ((beta_val >> k) & 1 for k in range(half)), dtype=np.float64, count=half
            )
            alpha = b + (1.0 - 2.0 * beta) * a
            u = u[half:]
    return float(alpha[0])


def _conv_bit(poly_taps: Sequence[int], v: List[int], t: int) -> int:
    """Convolution output at 0-based position t from taps with degree >= 1."""
    bit = 0
    for j in poly_taps:
        if j <= t:
            bit ^= v[t - j]
    return bit


def fano_decode(llrs: Sequence[float], code: PacCode, cfg: DecoderConfig) -> DecodeResult:
    """Classic Fano threshold search over the rate-profile tree.

    Frozen positions have a single branch (v=0, but the convolution output
    still depends on the register), profile positions have two. The
    threshold moves in steps of delta; forward_visits counts forward moves.
    """
    N = code.N
    alpha = np.asarray(llrs, dtype=np.float64)
    if alpha.size != N:
        raise ValueError(f"LLR length {alpha.size} != N {N}")
    bias = cfg.resolved_bias(code)
    max_visits = cfg.resolved_max_visits(code)
    info = set(code.profile.A)
    taps = [t for t in code.poly.support if t > 0]

    threshold = 0.0
    visits = 0
    timed_out = False
    v: List[int] = []
    u: List[int] = []
    mu = [0.0]  # path metric per depth, root included
    next_rank = [0] * (N + 1)
    rank_taken: List[int] = []
    lam: List[Optional[float]] = [None] * N

    def candidates(depth: int):
        """Branches out of the node at `depth`, best metric first."""
        if lam[depth] is None:
            lam[depth] = path_llr(alpha, u, cfg.llr_domain)
        lmbda = lam[depth]
        u_base = _conv_bit(taps, v, depth)
        if depth + 1 in info:
            cands = [
                (branch_metric(lmbda, u_base ^ vb, bias), vb, u_base ^ vb) for vb in (0, 1)
            ]
            cands.sort(key=lambda c: (-c[0], c[1]))
            return cands
        return [(branch_metric(lmbda, u_base, bias), 0, u_base)]

    depth = 0
    while depth < N:
        cands = candidates(depth)
        rank = next_rank[depth]
        if rank < len(cands) and mu[depth] + cands[rank][0] >= threshold:
            # forward move
            gamma, vbit, ubit = cands[rank]
            came_from_new = mu[depth] < threshold + cfg.delta
            v.append(vbit)
            u.append(ubit)
            mu.append(mu[depth] + gamma)
            rank_taken.append(rank)
            depth += 1
            next_rank[depth] = 0
            visits += 1
            if came_from_new:
                threshold += cfg.delta * math.floor((mu[depth] - threshold) / cfg.delta)
            if visits >= max_visits and depth < N:
                timed_out = True
                break
        elif depth > 0 and mu[depth - 1] >= threshold:
            # backward move
            v.pop()
            u.pop()
            mu.pop()
            depth -= 1
            next_rank[depth] = rank_taken.pop() + 1
            for d in range(depth + 1, N):
                lam[d] = None
        else:
            threshold -= cfg.delta
            next_rank[depth] = 0

    v_full = v + [0] * (N - len(v))
    v_hat = BitVec.from_bits(v_full)
    d_hat = extract_data(v_hat, code.profile)
    denom = code.K if cfg.anv_per_data_bit else N
    return DecodeResult(
        v_hat=v_hat,
        d_hat=d_hat,
        forward_visits=visits,
        anv=visits / denom,
        timed_out=timed_out,
    )


def ml_decode_oracle(llrs: Sequence[float], code: PacCode) -> BitVec:
    """Exhaustive maximum-likelihood decoding: the data word whose codeword
    maximizes the BPSK correlation. Ties resolve to the lowest data value."""
    if code.K > ML_ORACLE_MAX_K:
        raise ValueError(f"K {code.K} too large for exhaustive ML (max {ML_ORACLE_MAX_K})")
    alpha = np.asarray(llrs, dtype=np.float64)
    best_d = None
    best_score = -math.inf
    for w in range(1 << code.K):
        d = BitVec(code.K, w)
        x = pac_encode(d, code)
        s = np.fromiter(x, dtype=np.float64, count=code.N)
        score = float(np.dot(1.0 - 2.0 * s, alpha))
        if score > best_score:
            best_score = score
            best_d = d
    return best_d
