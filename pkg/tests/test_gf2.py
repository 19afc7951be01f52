import pytest
from hypothesis import given
from hypothesis import strategies as st

from paccode.gf2 import BitVec, ShiftSet, apply_shift_set, cyclic_shift, hamming_weight


def bitvecs(max_len=64):
    return st.integers(1, max_len).flatmap(
        lambda L: st.integers(0, (1 << L) - 1).map(lambda v: BitVec(L, v))
    )


class TestBitVec:
    def test_string_round_trip(self):
        v = BitVec.from_string("11001100")
        assert v.to_string() == "11001100"
        assert v.bit(1) == 1 and v.bit(3) == 0

    def test_length_immutable_and_validated(self):
        with pytest.raises(ValueError):
            BitVec(4, 0b10000)
        with pytest.raises(ValueError):
            BitVec(0, 0)

    def test_xor_length_mismatch(self):
        with pytest.raises(ValueError):
            BitVec(4, 1) ^ BitVec(8, 1)


class TestCyclicShift:
    def test_paper_g6_shift3(self):
        v = BitVec.from_string("11001100")
        assert cyclic_shift(v, 3).to_string() == "10011001"

    def test_zero_shift_identity(self):
        v = BitVec.from_string("1011")
        assert cyclic_shift(v, 0) == v

    def test_full_rotation_identity(self):
        v = BitVec.from_string("10110010")
        assert cyclic_shift(v, 8) == v

    @given(bitvecs(), st.integers(0, 200), st.integers(0, 200))
    def test_composition(self, v, a, b):
        assert cyclic_shift(cyclic_shift(v, a), b) == cyclic_shift(v, (a + b) % v.length)

    @given(bitvecs(), st.integers(0, 200))
    def test_weight_preserved(self, v, j):
        assert hamming_weight(cyclic_shift(v, j)) == hamming_weight(v)


class TestApplyShiftSet:
    def test_empty_set_is_zero(self):
        v = BitVec.from_string("1111")
        assert apply_shift_set(v, ShiftSet(frozenset(), 4)).value == 0

    def test_singleton_zero_is_identity(self):
        v = BitVec.from_string("1010")
        assert apply_shift_set(v, ShiftSet(frozenset({0}), 4)) == v

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            apply_shift_set(BitVec(4, 1), ShiftSet(frozenset({1}), 8))

    def test_shift_out_of_range(self):
        with pytest.raises(ValueError):
            ShiftSet(frozenset({8}), 8)

    @given(bitvecs(32), bitvecs(32), st.sets(st.integers(0, 31)))
    def test_linearity(self, a, b, shifts):
        if a.length != b.length:
            b = BitVec(a.length, b.value & ((1 << a.length) - 1))
        s = ShiftSet(frozenset(l for l in shifts if l < a.length), a.length)
        assert apply_shift_set(a ^ b, s) == apply_shift_set(a, s) ^ apply_shift_set(b, s)


class TestHammingWeight:
    @pytest.mark.parametrize(
        "s,w", [("10011001", 4), ("00000000", 0), ("11111111", 8)]
    )
    def test_examples(self, s, w):
        assert hamming_weight(BitVec.from_string(s)) == w
