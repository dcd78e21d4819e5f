"""Bit-level permutations and their inverses.

Every permutation is a 1-based *gather* vector: ``out[i] = in[gather[i]]``.
The fixed shuffles of the iterated ciphers (interlace, interweave, column
swap) are available both as direct matrix transforms and as gather vectors
over the row-major flattening of the ``n x 14`` bit matrix; the cipher uses
the gather form so that inversion is uniform.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .codec import CODE_BITS, ROW_BITS
from .exceptions import InvalidIndices, InvalidPermutation, LengthMismatch
from .validation import check_bits, check_even_order


@dataclass(frozen=True)
class Permutation:
    """1-based gather vector over ``{1..L}``."""

    gather: tuple

    def __post_init__(self):
        gather = tuple(int(g) for g in self.gather)
        if sorted(gather) != list(range(1, len(gather) + 1)):
            raise InvalidPermutation(f"gather vector is not a bijection on 1..{len(gather)}")
        object.__setattr__(self, "gather", gather)

    def __len__(self):
        return len(self.gather)

    @classmethod
    def identity(cls, length):
        return cls(tuple(range(1, length + 1)))

    @property
    def index(self):
        """0-based gather indices as an ndarray."""
        return np.asarray(self.gather, dtype=np.intp) - 1

    @property
    def is_identity(self):
        return self.gather == tuple(range(1, len(self) + 1))

    def apply(self, v):
        return apply_permutation(v, self)

    def inverse(self):
        return invert_permutation(self)

    def to_text(self):
        return ",".join(map(str, self.gather)) + "\n"


@dataclass(frozen=True)
class BitLabelSpec:
    """Output bit order written as bit labels, MSB position first.

    ``BitLabelSpec((6, 4, 5, 3, 2, 1, 0))`` on a 7-bit code swaps ``b5`` and
    ``b4``; ``(6, 5, 4, 3, 2, 1, 0)`` is the identity.
    """

    labels: tuple
    width: int = CODE_BITS

    def __post_init__(self):
        labels = tuple(int(v) for v in self.labels)
        if len(labels) != self.width or sorted(labels) != list(range(self.width)):
            raise InvalidPermutation(f"bit labels {labels} are not a bijection on 0..{self.width - 1}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def parse(cls, text, width=None):
        """Parse ``"6453210"`` or ``"6,4,5,3,2,1,0"``."""
        text = text.strip()
        parts = text.split(",") if "," in text else list(text)
        labels = tuple(int(p) for p in parts)
        return cls(labels, width if width is not None else len(labels))

    def __str__(self):
        return ",".join(map(str, self.labels))


def _coerce(p):
    return p if isinstance(p, Permutation) else Permutation(tuple(p))


def apply_permutation(v, p):
    """Return ``out`` with ``out[i] = v[p.gather[i]]`` (1-based)."""
    p = _coerce(p)
    v = np.asarray(v)
    if v.shape[-1] != len(p):
        raise LengthMismatch(f"vector of length {v.shape[-1]} vs permutation of length {len(p)}")
    return v[..., p.index]


def invert_permutation(p):
    p = _coerce(p)
    inv = [0] * len(p)
    for i, g in enumerate(p.gather, start=1):
        inv[g - 1] = i
    return Permutation(tuple(inv))


def bitlabels_to_permutation(spec):
    """Gather form of a bit-label spec: position 1 is the MSB ``b_{w-1}``."""
    return Permutation(tuple(spec.width - label for label in spec.labels))


def transposition(length, a, b):
    """Gather vector swapping 1-based positions ``a`` and ``b``."""
    gather = list(range(1, length + 1))
    gather[a - 1], gather[b - 1] = gather[b - 1], gather[a - 1]
    return Permutation(tuple(gather))


# -- direct transforms on n x 14 bit matrices --------------------------------

def interlace(bits):
    """Interleave each row's two 7-bit halves and refill two rows per stream.

    The stream ``b1 d1 b2 d2 ... b7 d7`` of input row ``k`` fills output rows
    ``2k-1, 2k`` of the left half for the first ``n/2`` rows and of the right
    half for the rest.
    """
    bits = check_bits(bits)
    n = check_even_order(bits.shape[0])
    half = n // 2
    streams = np.empty_like(bits)
    streams[:, 0::2] = bits[:, :CODE_BITS]
    streams[:, 1::2] = bits[:, CODE_BITS:]
    left = streams[:half].reshape(n, CODE_BITS)
    right = streams[half:].reshape(n, CODE_BITS)
    return np.hstack([left, right])


def interlace_inverse(bits):
    bits = check_bits(bits)
    n = check_even_order(bits.shape[0])
    half = n // 2
    streams = np.vstack([
        bits[:, :CODE_BITS].reshape(half, ROW_BITS),
        bits[:, CODE_BITS:].reshape(half, ROW_BITS),
    ])
    return np.hstack([streams[:, 0::2], streams[:, 1::2]])


def interweave(bits):
    """Rotate odd columns (1-based) up by one, then even rows left by one."""
    out = check_bits(bits).copy()
    out[:, 0::2] = np.roll(out[:, 0::2], -1, axis=0)
    out[1::2, :] = np.roll(out[1::2, :], -1, axis=1)
    return out


def interweave_inverse(bits):
    out = check_bits(bits).copy()
    out[1::2, :] = np.roll(out[1::2, :], 1, axis=1)
    out[:, 0::2] = np.roll(out[:, 0::2], 1, axis=0)
    return out


_SWAP_COLS = np.array([1, 3, 5])  # 0-based columns 2, 4, 6 of each 7-bit half


def column_swap(bits):
    """Exchange columns 2, 4, 6 between the left and right 7-bit halves. Self-inverse."""
    out = check_bits(bits).copy()
    left = out[:, _SWAP_COLS].copy()
    out[:, _SWAP_COLS] = out[:, _SWAP_COLS + CODE_BITS]
    out[:, _SWAP_COLS + CODE_BITS] = left
    return out


# -- gather forms over the row-major flattening ------------------------------

@lru_cache(maxsize=None)
def interlace_permutation(n):
    check_even_order(n)
    half = n // 2
    gather = []
    for r in range(n):
        for c in range(ROW_BITS):
            k = (r // 2) + (0 if c < CODE_BITS else half)
            s = (r % 2) * CODE_BITS + c % CODE_BITS
            src_col = s // 2 + (CODE_BITS if s % 2 else 0)
            gather.append(k * ROW_BITS + src_col + 1)
    return Permutation(tuple(gather))


@lru_cache(maxsize=None)
def interweave_permutation(n):
    def after_columns(r, c):
        return ((r + 1) % n, c) if c % 2 == 0 else (r, c)

    gather = []
    for r in range(n):
        for c in range(ROW_BITS):
            src_r, src_c = (r, (c + 1) % ROW_BITS) if r % 2 else (r, c)
            src_r, src_c = after_columns(src_r, src_c)
            gather.append(src_r * ROW_BITS + src_c + 1)
    return Permutation(tuple(gather))


@lru_cache(maxsize=None)
def column_swap_permutation(n):
    gather = []
    for r in range(n):
        for c in range(ROW_BITS):
            src = c
            if c % CODE_BITS in (1, 3, 5):
                src = c + CODE_BITS if c < CODE_BITS else c - CODE_BITS
            gather.append(r * ROW_BITS + src + 1)
    return Permutation(tuple(gather))


def element_selection_permutation(n, selections):
    """Length-14n permutation applying a bit-label spec to chosen block elements.

    ``selections`` is an iterable of ``(row, column, BitLabelSpec)`` with
    1-based ``row`` in ``1..n`` and ``column`` in ``{1, 2}``. Bits outside the
    selected 7-bit fields stay in place.
    """
    gather = list(range(1, n * ROW_BITS + 1))
    seen = set()
    for row, col, spec in selections:
        if not (1 <= row <= n and col in (1, 2)):
            raise InvalidPermutation(f"element ({row}, {col}) is outside an order-{n} block")
        if (row, col) in seen:
            raise InvalidPermutation(f"element ({row}, {col}) selected twice")
        if spec.width != CODE_BITS:
            raise InvalidPermutation(f"element permutations must be {CODE_BITS} bits wide")
        seen.add((row, col))
        start = (row - 1) * ROW_BITS + (col - 1) * CODE_BITS
        for offset, g in enumerate(bitlabels_to_permutation(spec).gather):
            gather[start + offset] = start + g
    return Permutation(tuple(gather))


def permute_bits(bits, p):
    """Apply a length-``14n`` gather permutation to an ``n x 14`` bit matrix."""
    bits = check_bits(bits)
    flat = apply_permutation(bits.reshape(-1), p)
    return flat.reshape(bits.shape)


def permute_value(x, p):
    """Apply a ``width``-long gather permutation to the MSB-first bits of ``x``."""
    width = len(p)
    src = [(int(x) >> (width - 1 - i)) & 1 for i in range(width)]
    out = 0
    for g in p.gather:
        out = (out << 1) | src[g - 1]
    return out


def swap_bits(x, i, j):
    """Swap bits ``i`` and ``j`` (0 = least significant) of the integer ``x``."""
    if ((x >> i) ^ (x >> j)) & 1:
        x ^= (1 << i) | (1 << j)
    return x


def nonlinearity_witness(width, i, j):
    """Two numbers on which the ``(i, j)`` bit transposition is not additive mod ``2**width``.

    Bits ``j..i`` of ``b1`` read ``0 0..0 1`` and of ``b2`` read ``0 1..1 1``;
    bit ``j-1`` is 0 in both. Remaining free bits: every bit below ``j-1`` is
    set in both numbers, every bit above ``i`` only in ``b1``. The carry out
    of bit ``j`` then runs differently before and after swapping.

    Returns
    -------
    tuple
        ``(b1, b2, lhs, rhs)`` with ``lhs = P((b1 + b2) mod 2**w)`` and
        ``rhs = (P(b1) + P(b2)) mod 2**w``.
    """
    if not 0 <= j < i < width:
        raise InvalidIndices(f"need 0 <= j < i < width, got width={width}, i={i}, j={j}")
    if j < 1:
        raise InvalidIndices("the construction needs a zero bit below bit j (j >= 1)")
    middle = sum(1 << b for b in range(j + 1, i))
    low = sum(1 << b for b in range(0, j - 1))
    high = sum(1 << b for b in range(i + 1, width))
    b1 = high | (1 << j) | low
    b2 = middle | (1 << j) | low
    mask = (1 << width) - 1
    lhs = swap_bits((b1 + b2) & mask, i, j)
    rhs = (swap_bits(b1, i, j) + swap_bits(b2, i, j)) & mask
    assert lhs != rhs
    return b1, b2, lhs, rhs


# -- permutation file format -------------------------------------------------

def parse_permutation_text(text):
    """Parse a permutation file.

    Either a single line of comma-separated 1-based gather indices, or a
    ``bits:W:l1,l2,...`` line holding a :class:`BitLabelSpec`.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise InvalidPermutation("permutation file must hold exactly one non-empty line")
    line = lines[0]
    try:
        if line.startswith("bits:"):
            _, width, labels = line.split(":", 2)
            return BitLabelSpec.parse(labels, int(width))
        return Permutation(tuple(int(v) for v in line.split(",")))
    except ValueError as exc:
        if isinstance(exc, InvalidPermutation):
            raise
        raise InvalidPermutation(f"malformed permutation line {line!r}") from None


def format_bitlabel_text(spec):
    return f"bits:{spec.width}:{spec}\n"
