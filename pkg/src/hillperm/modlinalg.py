"""Exact matrix arithmetic over the residue ring Z_N.

N is composite in every case of interest (26, 128), so nothing here relies on
Z_N being a field. Inverses go through the integer adjugate and a scalar
inverse of the determinant instead of elimination modulo N.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .exceptions import DimensionMismatch, HillError, NotInvertible
from .validation import check_matrix, check_modulus, check_residues, int_dtype_for


def mod_inverse(a, modulus):
    """Return ``x`` in ``[0, modulus)`` with ``a * x = 1 (mod modulus)``.

    Raises
    ------
    NotInvertible
        If ``gcd(a, modulus) != 1``; the gcd is attached to the exception.
    """
    modulus = check_modulus(modulus)
    a = int(a) % modulus
    g = gcd(a, modulus)
    if g != 1:
        raise NotInvertible(g, modulus)
    return pow(a, -1, modulus)


def mat_mul_mod(A, B, modulus):
    """Product ``A @ B`` reduced into ``[0, modulus)`` without overflow."""
    modulus = check_modulus(modulus)
    A = check_residues(A, modulus, name="A")
    B = check_residues(B, modulus, name="B")
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    dtype = int_dtype_for(A.shape[1], modulus)
    prod = A.astype(dtype) @ B.astype(dtype)
    return prod % modulus


def det_exact(A):
    """Exact integer determinant by Bareiss fraction-free elimination."""
    M = [[int(v) for v in row] for row in check_matrix(A, name="A", square=True).tolist()]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division is guaranteed by Sylvester's identity.
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def adjugate(A):
    """Integer adjugate (transposed cofactor matrix) as an object ndarray."""
    A = check_matrix(A, name="A", square=True)
    n = A.shape[0]
    adj = np.empty((n, n), dtype=object)
    if n == 1:
        adj[0, 0] = 1
        return adj
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(A, i, axis=0), j, axis=1)
            adj[j, i] = (-1) ** (i + j) * det_exact(minor)
    return adj


def is_invertible_mod(A, modulus):
    modulus = check_modulus(modulus)
    A = check_residues(A, modulus, name="A", square=True)
    return gcd(det_exact(A), modulus) == 1


def mat_inv_mod(A, modulus):
    """Inverse of ``A`` modulo ``modulus`` via ``det^-1 * adj(A)``.

    Raises
    ------
    NotInvertible
        When ``gcd(det(A), modulus) != 1``.
    DimensionMismatch
        When ``A`` is not square.
    """
    modulus = check_modulus(modulus)
    A = check_residues(A, modulus, name="A", square=True)
    det = det_exact(A)
    g = gcd(det, modulus)
    if g != 1:
        raise NotInvertible(g, modulus, what="matrix")
    inv_det = pow(det % modulus, -1, modulus)
    inv = (adjugate(A) * inv_det) % modulus
    return inv.astype(int_dtype_for(A.shape[0], modulus))


def identity(n):
    return np.eye(n, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class KeyMatrix:
    """A square key matrix with entries in ``[0, modulus)``.

    The entries are stored as a read-only array; build a new instance to
    change a key.
    """

    entries: np.ndarray
    modulus: int

    def __post_init__(self):
        modulus = check_modulus(self.modulus)
        arr = check_matrix(self.entries, name="key", square=True)
        if arr.size and (arr.min() < 0 or arr.max() >= modulus):
            raise HillError(f"key entries must lie in [0, {modulus})")
        arr = np.array(arr, dtype=int_dtype_for(arr.shape[0], modulus))
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "modulus", modulus)

    @property
    def order(self):
        return self.entries.shape[0]

    @property
    def det(self):
        return det_exact(self.entries)

    @property
    def is_invertible(self):
        return gcd(self.det, self.modulus) == 1

    def inverse(self):
        return KeyMatrix(mat_inv_mod(self.entries, self.modulus), self.modulus)

    def with_entry(self, row, col, value):
        """Copy with entry ``(row, col)`` (0-based) replaced by ``value mod N``."""
        arr = self.entries.copy()
        arr[row, col] = int(value) % self.modulus
        return KeyMatrix(arr, self.modulus)

    def __eq__(self, other):
        if not isinstance(other, KeyMatrix):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.modulus, tuple(map(int, self.entries.flat))))

    def __repr__(self):
        return f"KeyMatrix(order={self.order}, modulus={self.modulus}, entries={self.entries.tolist()})"

    # Text format: "n N" on the first line, then n rows of n integers.
    def to_text(self):
        lines = [f"{self.order} {self.modulus}"]
        lines += [" ".join(str(int(v)) for v in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = [line.split() for line in text.splitlines() if line.strip()]
        if not rows or len(rows[0]) != 2:
            raise HillError("key file must start with a line 'n N'")
        try:
            n, modulus = int(rows[0][0]), int(rows[0][1])
            body = [[int(v) for v in row] for row in rows[1:]]
        except ValueError as exc:
            raise HillError(f"malformed key file: {exc}") from None
        if len(body) != n or any(len(row) != n for row in body):
            raise HillError(f"key file must contain {n} rows of {n} integers")
        return cls(np.array(body, dtype=object), modulus)
