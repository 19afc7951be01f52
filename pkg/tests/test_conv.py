import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paccode.conv import (
    ConnectionPolynomial,
    IDENTITY_POLY,
    conv_decode,
    conv_encode,
    d_decomposition,
    parse_octal,
    toeplitz,
)
from paccode.gf2 import BitVec

# the two T matrices displayed in full in the source material
T_151 = [
    "11010010",
    "01101001",
    "00110100",
    "00011010",
    "00001101",
    "00000110",
    "00000011",
    "00000001",
]
T_133 = [
    "10110110",
    "01011011",
    "00101101",
    "00010110",
    "00001011",
    "00000101",
    "00000010",
    "00000001",
]


def polys(max_m=12):
    return st.integers(0, max_m).flatmap(
        lambda m: st.integers(0, max(0, (1 << max(m - 1, 0)) - 1)).map(
            lambda mid: ConnectionPolynomial(
                (1,) if m == 0 else (1,) + tuple((mid >> t) & 1 for t in range(m - 1)) + (1,)
            )
        )
    )


class TestParseOctal:
    def test_151(self):
        assert parse_octal("151").coeffs == (1, 1, 0, 1, 0, 0, 1)

    def test_133(self):
        assert parse_octal("133").coeffs == (1, 0, 1, 1, 0, 1, 1)

    def test_identity(self):
        assert parse_octal("1").coeffs == (1,)

    def test_rejects_bad_digit(self):
        with pytest.raises(ValueError):
            parse_octal("18")

    def test_rejects_trailing_zero_coeff(self):
        # 2 octal = binary 10: c_m would be 0
        with pytest.raises(ValueError):
            parse_octal("2")

    def test_octal_round_trip(self):
        for s in ("151", "133", "3211", "1"):
            assert parse_octal(s).to_octal() == s


class TestToeplitz:
    @pytest.mark.parametrize("octal,rows", [("151", T_151), ("133", T_133)])
    def test_displayed_matrices(self, octal, rows):
        T = toeplitz(parse_octal(octal), 8)
        assert [T.row(r).to_string() for r in range(1, 9)] == rows

    def test_identity_poly(self):
        T = toeplitz(IDENTITY_POLY, 5)
        for r in range(1, 6):
            assert T.row(r) == BitVec.unit(r, 5)

    def test_memory_too_large(self):
        with pytest.raises(ValueError):
            toeplitz(parse_octal("151"), 4)


class TestConvEncode:
    def test_unit_vector_picks_row(self):
        c = parse_octal("151")
        assert conv_encode(BitVec.unit(4, 8), c).to_string() == "00011010"

    def test_zero(self):
        assert conv_encode(BitVec.zeros(8), parse_octal("133")).value == 0

    def test_first_row_133(self):
        assert conv_encode(BitVec.from_string("10000000"), parse_octal("133")).to_string() == "10110110"

    def test_identity_poly_is_identity(self):
        v = BitVec.from_string("1011001")
        assert conv_encode(v, IDENTITY_POLY) == v

    def test_matches_matrix_product_exhaustively_n8(self):
        for octal in ("151", "133", "7", "1"):
            c = parse_octal(octal)
            T = toeplitz(c, 8)
            rows = [T.row(r).value for r in range(1, 9)]
            for w in range(256):
                expected = 0
                for r in range(8):
                    if (w >> r) & 1:
                        expected ^= rows[r]
                assert conv_encode(BitVec(8, w), c).value == expected

    @given(polys(), st.integers(0, (1 << 32) - 1))
    def test_matches_matrix_product_randomized_n32(self, c, w):
        T = toeplitz(c, 32)
        expected = 0
        for r in range(32):
            if (w >> r) & 1:
                expected ^= T.row(r + 1).value
        assert conv_encode(BitVec(32, w), c).value == expected

    @given(polys(), st.integers(0, (1 << 32) - 1))
    def test_invertible_round_trip(self, c, w):
        v = BitVec(32, w)
        assert conv_decode(conv_encode(v, c), c) == v


class TestDDecomposition:
    def test_133(self):
        assert d_decomposition(parse_octal("133")) == frozenset({0, 2, 3, 5, 6})

    def test_151(self):
        assert d_decomposition(parse_octal("151")) == frozenset({1, 3, 6})

    def test_identity(self):
        assert d_decomposition(IDENTITY_POLY) == frozenset({0})

    @given(polys(max_m=10), st.integers(4, 6).map(lambda n: 1 << n))
    def test_sum_of_d_matrices_equals_t(self, c, N):
        # D^m has ones on the main diagonal and the m-th superdiagonal
        mask = (1 << N) - 1
        rows = [0] * N
        for m in d_decomposition(c):
            for r in range(N):
                d_row = (1 << r) | ((1 << (r + m)) if r + m < N else 0)
                if m == 0:
                    d_row = 1 << r
                rows[r] ^= d_row & mask
        T = toeplitz(c, N)
        assert rows == [T.row(r + 1).value for r in range(N)]
