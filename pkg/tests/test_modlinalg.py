from itertools import permutations as iperms
from math import gcd, prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hillperm import presets
from hillperm.exceptions import DimensionMismatch, HillError, NotInvertible
from hillperm.modlinalg import (
    KeyMatrix,
    adjugate,
    det_exact,
    identity,
    is_invertible_mod,
    mat_inv_mod,
    mat_mul_mod,
    mod_inverse,
)

from conftest import random_invertible


def leibniz_det(A):
    """Determinant by the permutation expansion; independent of elimination."""
    A = [[int(v) for v in row] for row in A]
    n = len(A)
    total = 0
    for perm in iperms(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(A[i][perm[i]] for i in range(n))
    return total


def naive_matmul_mod(A, B, N):
    return [[sum(int(A[i][k]) * int(B[k][j]) for k in range(len(B))) % N
             for j in range(len(B[0]))] for i in range(len(A))]


class TestModInverse:
    def test_examples(self):
        assert mod_inverse(7, 26) == 15
        assert mod_inverse(1, 128) == 1

    def test_not_invertible_reports_gcd(self):
        with pytest.raises(NotInvertible) as exc:
            mod_inverse(2, 26)
        assert exc.value.gcd == 2

    @pytest.mark.parametrize("N", [26, 128])
    def test_agrees_with_brute_force(self, N):
        for a in range(1, N):
            scan = [x for x in range(1, N) if a * x % N == 1]
            if gcd(a, N) == 1:
                assert mod_inverse(a, N) == scan[0]
            else:
                assert scan == []
                with pytest.raises(NotInvertible):
                    mod_inverse(a, N)


class TestMatMul:
    def test_published_pair(self):
        Y = mat_mul_mod(presets.ATTACK_KEY, presets.ATTACK_X1, 26)
        assert Y.tolist() == [[2, 1], [5, 11]]

    def test_identity(self, rng):
        A = rng.integers(0, 128, (5, 5))
        assert np.array_equal(mat_mul_mod(identity(5), A, 128), A)

    def test_amended_key_gives_first_product(self):
        P = presets.PLAINTEXT_K2_CODES
        got = mat_mul_mod(presets.K2_AMENDED, P, 128)
        assert np.array_equal(got, presets.FIRST_PRODUCT_PRINTED)
        assert got[0, 0] == 27

    def test_published_key_differs_only_in_row_four(self):
        got = mat_mul_mod(presets.K2, presets.PLAINTEXT_K2_CODES, 128)
        diff = np.argwhere(got != presets.FIRST_PRODUCT_PRINTED)
        assert diff.tolist() == [[3, 0], [3, 1]]
        assert got[3].tolist() == [108, 41]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mat_mul_mod(np.ones((2, 3), int), np.ones((2, 2), int), 26)

    def test_matches_naive(self, rng):
        for _ in range(50):
            A = rng.integers(0, 128, (8, 8))
            B = rng.integers(0, 128, (8, 2))
            assert mat_mul_mod(A, B, 128).tolist() == naive_matmul_mod(A, B, 128)

    def test_huge_modulus_is_exact(self):
        N = 2**61 + 1
        A = np.array([[N - 1, N - 2], [3, N - 1]], dtype=object)
        assert mat_mul_mod(A, A, N).tolist() == naive_matmul_mod(A, A, N)

    def test_associative(self, rng):
        for N in (26, 128):
            for _ in range(30):
                A, B, C = (rng.integers(0, N, (4, 4)) for _ in range(3))
                left = mat_mul_mod(mat_mul_mod(A, B, N), C, N)
                right = mat_mul_mod(A, mat_mul_mod(B, C, N), N)
                assert np.array_equal(left, right)


class TestDeterminant:
    def test_examples(self):
        assert det_exact([[12, 3], [5, 4]]) == 33
        assert det_exact(identity(8)) == 1
        assert det_exact([[1, 2, 3], [4, 5, 6], [1, 2, 3]]) == 0

    def test_matches_leibniz(self, rng):
        for n in range(1, 6):
            for _ in range(20):
                A = rng.integers(-50, 128, (n, n))
                assert det_exact(A) == leibniz_det(A)

    def test_zero_pivot_needs_row_swap(self):
        A = [[0, 1, 2], [3, 0, 1], [1, 1, 0]]
        assert det_exact(A) == leibniz_det(A)

    def test_multiplicative(self, rng):
        for n in range(1, 5):
            for _ in range(20):
                A = rng.integers(0, 128, (n, n))
                B = rng.integers(0, 128, (n, n))
                AB = A.astype(object) @ B.astype(object)
                assert det_exact(AB) == det_exact(A) * det_exact(B)

    def test_adjugate_identity(self, rng):
        A = rng.integers(0, 128, (4, 4))
        lhs = A.astype(object) @ adjugate(A)
        assert lhs.tolist() == (np.eye(4, dtype=object) * det_exact(A)).tolist()


class TestInverse:
    def test_published_inverse(self):
        inv = mat_inv_mod(presets.ATTACK_PRINTED_KEY, 26)
        assert inv.tolist() == [[13, 4], [12, 11]]

    def test_identity(self):
        assert np.array_equal(mat_inv_mod(identity(8), 128), identity(8))

    def test_not_invertible(self):
        with pytest.raises(NotInvertible) as exc:
            mat_inv_mod([[2, 0], [0, 1]], 26)
        assert exc.value.gcd == 2

    def test_not_square(self):
        with pytest.raises(DimensionMismatch):
            mat_inv_mod(np.ones((2, 3), int), 26)

    @pytest.mark.parametrize("n", [2, 4, 8])
    @pytest.mark.parametrize("N", [26, 128])
    def test_random_inverse(self, rng, n, N):
        for _ in range(100):
            A = random_invertible(rng, n, N)
            assert np.array_equal(mat_mul_mod(A, mat_inv_mod(A, N), N), identity(n))


class TestInvertibility:
    def test_k1_is_invertible(self):
        assert det_exact(presets.K1) % 2 == 1
        assert is_invertible_mod(presets.K1, 128)

    def test_k2_is_not(self):
        assert det_exact(presets.K2) % 2 == 0
        assert not is_invertible_mod(presets.K2, 128)
        assert not is_invertible_mod(presets.K2_AMENDED, 128)

    def test_trivial(self):
        assert is_invertible_mod(identity(3), 26)
        assert not is_invertible_mod(np.zeros((3, 3), int), 26)


class TestKeyMatrix:
    def test_text_round_trip(self):
        key = KeyMatrix(presets.K1, 128)
        text = key.to_text()
        assert text.splitlines()[0] == "8 128"
        assert KeyMatrix.from_text(text) == key

    def test_read_only(self):
        key = KeyMatrix(presets.K1, 128)
        with pytest.raises(ValueError):
            key.entries[0, 0] = 1

    def test_rejects_out_of_range(self):
        with pytest.raises(HillError):
            KeyMatrix([[26, 0], [0, 1]], 26)

    @pytest.mark.parametrize("text", ["", "2\n1 0\n0 1\n", "2 26\n1 0\n", "2 26\n1 x\n0 1\n"])
    def test_malformed_text(self, text):
        with pytest.raises(HillError):
            KeyMatrix.from_text(text)

    def test_inverse_and_with_entry(self):
        key = KeyMatrix(presets.ATTACK_KEY, 26)
        assert key.is_invertible
        assert np.array_equal(mat_mul_mod(key.entries, key.inverse().entries, 26), identity(2))
        changed = key.with_entry(0, 0, 46)
        assert changed.entries[0, 0] == 20
        assert key.entries[0, 0] == 19


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 127), st.sampled_from([26, 128]))
def test_mod_inverse_property(a, N):
    a %= N
    if a == 0:
        return
    if gcd(a, N) == 1:
        assert a * mod_inverse(a, N) % N == 1
