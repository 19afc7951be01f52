"""Shared helpers: independent oracles kept deliberately naive."""

from __future__ import annotations

import random
from typing import Dict, List, Sequence

import numpy as np
import pytest

from paccode.codec import PacCode, pac_encode
from paccode.conv import ConnectionPolynomial
from paccode.gf2 import BitVec
from paccode.polar import PolarDim, RateProfile


def naive_spectrum(gen: Sequence[BitVec]) -> Dict[int, int]:
    """Encode every data word independently (no Gray stepping)."""
    k = len(gen)
    counts: Dict[int, int] = {}
    for w in range(1 << k):
        cw = 0
        for j in range(k):
            if (w >> j) & 1:
                cw ^= gen[j].value
        d = cw.bit_count()
        counts[d] = counts.get(d, 0) + 1
    return counts


def matrix_of(code: PacCode) -> np.ndarray:
    """Dense 0/1 generator matrix T.G restricted to the profile rows,
    built by explicit matrix products."""
    N = code.N
    G = np.zeros((N, N), dtype=np.int64)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            # column j of row i of the Kronecker power
            G[i - 1, j - 1] = int(((j - 1) & ~(i - 1)) == 0)
    T = np.zeros((N, N), dtype=np.int64)
    for r in range(N):
        for s in range(r, min(r + code.poly.m + 1, N)):
            T[r, s] = code.poly.coeffs[s - r]
    TG = (T @ G) % 2
    return TG[[a - 1 for a in code.profile.A], :]


def encode_by_matrix(d: BitVec, code: PacCode) -> BitVec:
    rows = matrix_of(code)
    acc = (np.array(list(d), dtype=np.int64) @ rows) % 2
    return BitVec.from_bits(int(b) for b in acc)


def sc_hard_decisions(llrs, info_positions, n) -> List[int]:
    """Plain successive-cancellation hard decoding (frozen bits forced to 0),
    written as a direct recursion independent of the package internals."""

    def rec(alpha: List[float], offset: int) -> (List[int], List[int]):
        # returns (u decisions, re-encoded bits beta)
        if len(alpha) == 1:
            if offset + 1 in info_positions:
                u = 0 if alpha[0] >= 0 else 1
            else:
                u = 0
            return [u], [u]
        half = len(alpha) // 2
        a, b = alpha[:half], alpha[half:]
        import math

        def f(x, y):
            return 2.0 * math.atanh(
                max(min(math.tanh(x / 2.0) * math.tanh(y / 2.0), 1 - 1e-12), -1 + 1e-12)
            )

        left_alpha = [f(x, y) for x, y in zip(a, b)]
        u_left, beta_left = rec(left_alpha, offset)
        right_alpha = [y + (1 - 2 * bl) * x for x, y, bl in zip(a, b, beta_left)]
        u_right, beta_right = rec(right_alpha, offset + half)
        beta = [bl ^ br for bl, br in zip(beta_left, beta_right)] + beta_right
        return u_left + u_right, beta

    u, _ = rec(list(llrs), 0)
    return u


def random_code(rng: random.Random, n: int, max_k: int = 16) -> PacCode:
    """A random (profile, polynomial) pair at dimension n."""
    dim = PolarDim(n)
    N = dim.N
    k = rng.randint(1, min(max_k, N))
    profile = RateProfile(dim, tuple(rng.sample(range(1, N + 1), k)))
    m = rng.randint(0, min(10, N - 1))
    if m == 0:
        coeffs = (1,)
    else:
        coeffs = (1,) + tuple(rng.randint(0, 1) for _ in range(m - 1)) + (1,)
    return PacCode(dim, profile, ConnectionPolynomial(coeffs))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(2718281828)
