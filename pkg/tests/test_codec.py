import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hillperm import presets
from hillperm.codec import decode_block, encode_block, from_bits, hamming, to_bits
from hillperm.exceptions import BadLength, DimensionMismatch, NonAsciiCharacter


def bits_oracle(block):
    """Bit matrix via string formatting."""
    return [[int(ch) for ch in format(int(a), "07b") + format(int(b), "07b")] for a, b in block]


blocks = st.integers(1, 8).flatmap(
    lambda n: arrays(np.int64, (n, 2), elements=st.integers(0, 127)))
ascii_text = st.integers(1, 8).flatmap(
    lambda n: st.text(alphabet=st.characters(max_codepoint=127), min_size=2 * n, max_size=2 * n))


class TestEncode:
    def test_published_plaintext(self):
        P = encode_block(presets.PLAINTEXT_K2, 8)
        assert np.array_equal(P, presets.PLAINTEXT_K2_CODES)
        assert P[0, 0] == 84 and P[0, 1] == 108

    def test_two_chars(self):
        assert encode_block("AB", 1).tolist() == [[65, 66]]

    def test_bad_length(self):
        with pytest.raises(BadLength):
            encode_block("x" * 17, 8)
        # The published plaintext lacks its trailing space.
        with pytest.raises(BadLength):
            encode_block("The development", 8)

    def test_non_ascii(self):
        with pytest.raises(NonAsciiCharacter) as exc:
            encode_block("abéd", 2)
        assert exc.value.position == 2


class TestDecode:
    def test_published(self):
        assert decode_block(presets.PLAINTEXT_K2_CODES) == "The development "

    def test_trivial(self):
        assert decode_block([[65, 66]]) == "AB"
        assert decode_block(np.zeros((3, 2), int)) == "\0" * 6

    @settings(max_examples=1000, deadline=None)
    @given(ascii_text)
    def test_round_trip(self, text):
        n = len(text) // 2
        assert decode_block(encode_block(text, n)) == text


class TestBits:
    def test_first_product_row(self):
        bits = to_bits(presets.FIRST_PRODUCT_PRINTED)
        assert bits[0].tolist() == [0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0]

    def test_published_split_matrices(self):
        bits = to_bits(presets.FIRST_PRODUCT_PRINTED)
        assert np.array_equal(bits[:, :7], presets.CSHC_E)
        assert np.array_equal(bits[:, 7:], presets.CSHC_F)

    def test_extremes(self):
        assert to_bits([[0, 0]]).tolist() == [[0] * 14]
        assert to_bits([[127, 127]]).tolist() == [[1] * 14]

    def test_from_bits_published_row(self):
        row = [int(c) for c in "0110001" + "1011010"]
        assert from_bits([row]).tolist() == [[49, 90]]
        assert from_bits([[0] * 14]).tolist() == [[0, 0]]

    @settings(max_examples=1000, deadline=None)
    @given(blocks)
    def test_round_trip_and_oracle(self, block):
        bits = to_bits(block)
        assert bits.tolist() == bits_oracle(block)
        assert np.array_equal(from_bits(bits), block)


class TestHamming:
    def test_examples(self):
        P = presets.PLAINTEXT_K2_CODES
        assert hamming(P, P) == 0
        Q = P.copy()
        Q[0, 0] = 85
        assert hamming(P, Q) == 1
        assert hamming(np.zeros((8, 2), int), np.full((8, 2), 127)) == 112 == 14 * 8

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            hamming(np.zeros((2, 2), int), np.zeros((4, 2), int))

    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_metric(self, data):
        n = data.draw(st.integers(1, 8))
        a, b, c = (data.draw(arrays(np.int64, (n, 2), elements=st.integers(0, 127))) for _ in range(3))
        assert hamming(a, b) == hamming(b, a)
        assert (hamming(a, b) == 0) == np.array_equal(a, b)
        assert hamming(a, c) <= hamming(a, b) + hamming(b, c)
        oracle = sum(x != y for x, y in zip(np.ravel(bits_oracle(a)), np.ravel(bits_oracle(b))))
        assert hamming(a, b) == oracle
