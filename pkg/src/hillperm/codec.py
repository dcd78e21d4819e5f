"""Text <-> block <-> bit-matrix conversions.

A block is an ``n x 2`` matrix of 7-bit codes filled column-major from the
text: characters ``1..n`` go down column 1, ``n+1..2n`` down column 2. Its
bit view is ``n x 14``: row ``j`` holds the MSB-first 7-bit code of
``P[j, 0]`` followed by that of ``P[j, 1]``.
"""

import numpy as np

from .exceptions import BadLength, DimensionMismatch, NonAsciiCharacter
from .validation import check_bits, check_block

CODE_BITS = 7
ROW_BITS = 2 * CODE_BITS


def encode_block(text, n):
    """Encode ``2n`` ASCII characters as an ``n x 2`` block of codes."""
    if len(text) != 2 * n:
        raise BadLength(f"a block of order {n} needs {2 * n} characters, got {len(text)}")
    codes = []
    for pos, ch in enumerate(text):
        code = ord(ch)
        if code >= 128:
            raise NonAsciiCharacter(pos, ch)
        codes.append(code)
    return np.array(codes, dtype=np.int64).reshape(2, n).T.copy()


def decode_block(block):
    block = check_block(block)
    return "".join(chr(int(c)) for c in block.T.ravel())


def codes_to_bits(codes, width=CODE_BITS):
    """MSB-first bit expansion along a new trailing axis."""
    codes = np.asarray(codes, dtype=np.int64)
    shifts = np.arange(width - 1, -1, -1)
    return ((codes[..., None] >> shifts) & 1).astype(np.uint8)


def bits_to_codes(bits):
    bits = np.asarray(bits, dtype=np.int64)
    width = bits.shape[-1]
    weights = 1 << np.arange(width - 1, -1, -1)
    return bits @ weights


def to_bits(block):
    block = check_block(block)
    return codes_to_bits(block).reshape(block.shape[0], ROW_BITS)


def from_bits(bits):
    bits = check_bits(bits, ROW_BITS)
    return bits_to_codes(bits.reshape(bits.shape[0], 2, CODE_BITS))


def hamming(a, b):
    """Number of differing bits between two blocks of the same order."""
    a = check_block(a)
    b = check_block(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot compare blocks of shape {a.shape} and {b.shape}")
    diff = np.bitwise_xor(a, b)
    return int(sum(bin(int(v)).count("1") for v in diff.flat))
