"""Input validation helpers, in the spirit of ``sklearn.utils.validation``.

Every public entry point funnels its array arguments through one of these so
that the numeric core can assume clean, integer, correctly shaped input.
"""

import numpy as np

from .exceptions import BadLength, ConfigError, DimensionMismatch, OddOrder

# n * (N - 1)**2 must stay below this for int64 accumulation to be exact.
_INT64_SAFE = 2**62


def check_modulus(modulus):
    modulus = int(modulus)
    if modulus < 2:
        raise ConfigError(f"modulus must be > 1, got {modulus}")
    return modulus


def int_dtype_for(n, modulus):
    """int64 when a length-``n`` dot product of residues cannot overflow, else object."""
    if n * (modulus - 1) ** 2 < _INT64_SAFE:
        return np.int64
    return object


def check_matrix(A, name="matrix", square=False):
    """Return ``A`` as a 2-D integer ndarray (int64 or Python-int object)."""
    arr = np.asarray(A)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {arr.shape}")
    if square and arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {arr.shape}")
    if arr.dtype == object:
        if not all(isinstance(v, (int, np.integer)) for v in arr.flat):
            raise ConfigError(f"{name} must contain integers")
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        if np.issubdtype(arr.dtype, np.floating) and np.all(np.mod(arr, 1) == 0):
            return arr.astype(np.int64)
        raise ConfigError(f"{name} must contain integers, got dtype {arr.dtype}")
    return arr.astype(np.int64, copy=False)


def check_residues(A, modulus, name="matrix", square=False):
    """Like :func:`check_matrix` but also reduces every entry into ``[0, modulus)``."""
    arr = check_matrix(A, name=name, square=square)
    return arr % modulus


def check_block(block, n=None, modulus=128):
    """Validate an ``n x 2`` plaintext/ciphertext block of codes in ``[0, modulus)``."""
    arr = check_matrix(block, name="block")
    if arr.shape[1] != 2:
        raise DimensionMismatch(f"block must have 2 columns, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise DimensionMismatch(f"block must have {n} rows, got {arr.shape[0]}")
    if arr.size and (arr.min() < 0 or arr.max() >= modulus):
        raise ConfigError(f"block entries must lie in [0, {modulus})")
    return arr


def check_bits(bits, width=14):
    """Validate a binary ``n x width`` matrix."""
    arr = np.asarray(bits)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise DimensionMismatch(f"bit matrix must have shape (n, {width}), got {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ConfigError("bit matrix entries must be 0 or 1")
    return arr.astype(np.uint8, copy=False)


def check_even_order(n):
    if n % 2:
        raise OddOrder(f"order must be even, got {n}")
    return n


def check_blocks(X, n, modulus=128):
    """Coerce ``X`` into a stack of blocks with shape ``(k, n, 2)``.

    Accepts a single ``(n, 2)`` block, a ``(k, n, 2)`` stack or a flat
    sequence of ``2 * n * k`` codes laid out block by block, column-major
    inside each block.
    """
    arr = np.asarray(X)
    if arr.ndim == 2:
        arr = arr[None, ...]
    elif arr.ndim == 1:
        if arr.size % (2 * n):
            raise BadLength(f"{arr.size} codes is not a multiple of the block size {2 * n}")
        arr = arr.reshape(-1, 2, n).transpose(0, 2, 1)
    if arr.ndim != 3 or arr.shape[1:] != (n, 2):
        raise DimensionMismatch(f"expected blocks of shape ({n}, 2), got {arr.shape}")
    return np.stack([check_block(b, n, modulus) for b in arr]) if len(arr) else arr.astype(np.int64)
