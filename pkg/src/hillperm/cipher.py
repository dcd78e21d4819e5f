"""Hill cipher and its permutation-strengthened iterated variants.

Variants
--------
``hc``
    Plain Hill: ``C = K P mod N``.
``hcml`` / ``hcmw``
    ``m`` rounds of multiply-then-interlace / multiply-then-interweave,
    followed by one more key multiplication when ``ad`` is set.
``cshc``
    Same loop with the column swap as the round permutation.
``aphc``
    Same loop with a caller-chosen permutation: either a full length-``14n``
    gather vector or per-element bit-label specs.

These are study ciphers. None of them is secure.
"""

import warnings
from dataclasses import dataclass, field, replace

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils import check_random_state
from sklearn.utils.validation import check_is_fitted

from .codec import ROW_BITS, bits_to_codes, codes_to_bits, decode_block, encode_block
from .exceptions import BoundTooSmall, ConfigError, DimensionMismatch, MissingPermutation
from .modlinalg import KeyMatrix, is_invertible_mod, mat_inv_mod
from .permutations import (
    BitLabelSpec,
    Permutation,
    column_swap_permutation,
    element_selection_permutation,
    interlace_permutation,
    interweave_permutation,
)
from .validation import check_block, check_blocks, check_modulus

VARIANTS = ("hc", "hcml", "hcmw", "cshc", "aphc")

# m and AD when the caller does not choose them.
DEFAULT_ITERATIONS = {"hc": 0, "hcml": 16, "hcmw": 16, "cshc": 1, "aphc": 1}

HCML_MAX_ENTRY = 64


@dataclass(frozen=True)
class CipherConfig:
    variant: str = "hcmw"
    n: int = 8
    modulus: int = 128
    m: int = None
    ad: bool = True
    permutation: Permutation = None
    element_selection: tuple = None
    _round: Permutation = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        variant = str(self.variant).lower()
        if variant not in VARIANTS:
            raise ConfigError(f"unknown variant {self.variant!r}; choose from {VARIANTS}")
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "modulus", check_modulus(self.modulus))
        if self.n < 1:
            raise ConfigError(f"order must be positive, got {self.n}")
        m = DEFAULT_ITERATIONS[variant] if self.m is None else int(self.m)
        if m < 0:
            raise ConfigError(f"iteration count must be >= 0, got {m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "ad", bool(self.ad))
        if self.element_selection is not None:
            sel = tuple((int(r), int(c), s if isinstance(s, BitLabelSpec) else BitLabelSpec(tuple(s)))
                        for r, c, s in self.element_selection)
            object.__setattr__(self, "element_selection", sel)
        if variant != "hc" and self.modulus != 128:
            # Bit permutations are bijections on 7-bit codes only when N = 2**7.
            raise ConfigError(f"{variant} permutes 7-bit codes and needs modulus 128")
        object.__setattr__(self, "_round", self._build_round())

    def _build_round(self):
        if self.variant == "hc":
            return None
        if self.variant == "aphc":
            has_perm = self.permutation is not None
            has_sel = self.element_selection is not None
            if has_perm == has_sel:
                raise MissingPermutation("aphc needs exactly one of permutation or element_selection")
            if has_perm:
                perm = self.permutation
                if not isinstance(perm, Permutation):
                    perm = Permutation(tuple(perm))
                    object.__setattr__(self, "permutation", perm)
                if len(perm) != ROW_BITS * self.n:
                    raise DimensionMismatch(
                        f"aphc permutation must have length {ROW_BITS * self.n}, got {len(perm)}")
                return perm
            return element_selection_permutation(self.n, self.element_selection)
        if self.permutation is not None or self.element_selection is not None:
            raise ConfigError(f"{self.variant} uses a fixed permutation; do not pass one")
        if self.variant == "hcml":
            return interlace_permutation(self.n)
        if self.variant == "hcmw":
            return interweave_permutation(self.n)
        return column_swap_permutation(self.n)

    @property
    def round_permutation(self):
        """Length-``14n`` gather permutation applied after every multiplication."""
        return self._round

    def with_iterations(self, m, ad=None):
        return replace(self, m=m, ad=self.ad if ad is None else ad)


def _check_key(cfg, key):
    if not isinstance(key, KeyMatrix):
        key = KeyMatrix(np.asarray(key), cfg.modulus)
    if key.modulus != cfg.modulus:
        raise ConfigError(f"key modulus {key.modulus} differs from config modulus {cfg.modulus}")
    if key.order != cfg.n:
        raise DimensionMismatch(f"key order {key.order} differs from block order {cfg.n}")
    if cfg.variant == "hcml" and key.entries.max(initial=0) >= HCML_MAX_ENTRY:
        warnings.warn("hcml keys conventionally have entries below 64", stacklevel=3)
    return key


def _mul(K, P, modulus):
    return (K @ P) % modulus


def _permute_codes(P, perm):
    bits = codes_to_bits(P).reshape(-1)
    bits = bits[perm.index]
    return bits_to_codes(bits.reshape(P.shape[0], 2, -1))


def _work_dtype(cfg):
    return np.int64 if cfg.n * (cfg.modulus - 1) ** 2 < 2**62 else object


def rounds(cfg, key, plain):
    """Yield ``P^0, P^1, ..., P^m`` for inspection of intermediate states."""
    key = _check_key(cfg, key)
    P = check_block(plain, cfg.n, cfg.modulus).astype(_work_dtype(cfg))
    K = key.entries.astype(P.dtype)
    yield P
    if cfg.variant == "hc":
        return
    perm = cfg.round_permutation
    for _ in range(cfg.m):
        P = _permute_codes(_mul(K, P, cfg.modulus), perm).astype(K.dtype)
        yield P


def encrypt(cfg, key, plain):
    """Encrypt a single ``n x 2`` block."""
    key = _check_key(cfg, key)
    K = key.entries.astype(_work_dtype(cfg))
    if cfg.variant == "hc":
        P = check_block(plain, cfg.n, cfg.modulus).astype(K.dtype)
        return _mul(K, P, cfg.modulus).astype(np.int64)
    *_, P = rounds(cfg, key, plain)
    if cfg.ad:
        P = _mul(K, P, cfg.modulus)
    return np.asarray(P).astype(np.int64)


def decrypt(cfg, key, cipher, key_inverse=None):
    """Invert :func:`encrypt`: undo the final multiplication, then each round in reverse."""
    key = _check_key(cfg, key)
    if key_inverse is None:
        key_inverse = mat_inv_mod(key.entries, cfg.modulus)
    Kinv = np.asarray(key_inverse).astype(_work_dtype(cfg))
    C = check_block(cipher, cfg.n, cfg.modulus).astype(Kinv.dtype)
    if cfg.variant == "hc":
        return _mul(Kinv, C, cfg.modulus).astype(np.int64)
    P = _mul(Kinv, C, cfg.modulus) if cfg.ad else C
    inv = cfg.round_permutation.inverse()
    for _ in range(cfg.m):
        P = _mul(Kinv, _permute_codes(P, inv).astype(Kinv.dtype), cfg.modulus)
    return np.asarray(P).astype(np.int64)


def keygen(n, modulus, max_entry=None, seed=None, max_tries=10_000):
    """Draw a uniformly random key with entries below ``max_entry`` that is invertible mod ``modulus``.

    Raises
    ------
    BoundTooSmall
        If no invertible matrix exists under the bound, or none was found in
        ``max_tries`` draws.
    """
    modulus = check_modulus(modulus)
    max_entry = modulus if max_entry is None else int(max_entry)
    if not 1 <= max_entry <= modulus:
        raise ConfigError(f"max_entry must lie in [1, {modulus}], got {max_entry}")
    if max_entry == 1:
        # Only the zero matrix is available.
        raise BoundTooSmall("max_entry=1 admits only the zero matrix")
    rng = check_random_state(seed)
    for _ in range(max_tries):
        A = rng.randint(0, max_entry, size=(n, n))
        if is_invertible_mod(A, modulus):
            return KeyMatrix(A, modulus)
    raise BoundTooSmall(f"no invertible {n}x{n} matrix found with entries < {max_entry} in {max_tries} draws")


class HillCipher(TransformerMixin, BaseEstimator):
    """Scikit-learn style front end to the cipher family.

    ``fit`` fixes the key (the one passed in, or a freshly generated one),
    ``transform`` encrypts and ``inverse_transform`` decrypts. Inputs can be
    a string of ``2n * k`` ASCII characters, a single ``(n, 2)`` block or a
    ``(k, n, 2)`` stack of blocks; output is always a ``(k, n, 2)`` stack.

    Parameters
    ----------
    variant : {"hc", "hcml", "hcmw", "cshc", "aphc"}
    n : int
        Block order; a block carries ``2n`` characters.
    modulus : int
    m : int or None
        Number of multiply-and-permute rounds. ``None`` picks 16 for hcml and
        hcmw and 1 for cshc and aphc.
    ad : bool
        Apply the final key multiplication after the rounds.
    permutation : Permutation or sequence of int, optional
        aphc only: length-``14n`` gather vector.
    element_selection : sequence of (row, col, BitLabelSpec), optional
        aphc only: per-element bit permutations.
    key : array-like or KeyMatrix, optional
        Fixed key. When omitted ``fit`` draws one using ``random_state``.
    max_entry : int, optional
        Entry bound for generated keys (64 is the hcml convention).
    random_state : int, RandomState or None
    """

    def __init__(self, variant="hcmw", n=8, modulus=128, m=None, ad=True, permutation=None,
                 element_selection=None, key=None, max_entry=None, random_state=None):
        self.variant = variant
        self.n = n
        self.modulus = modulus
        self.m = m
        self.ad = ad
        self.permutation = permutation
        self.element_selection = element_selection
        self.key = key
        self.max_entry = max_entry
        self.random_state = random_state

    def fit(self, X=None, y=None):
        self.config_ = CipherConfig(self.variant, self.n, self.modulus, self.m, self.ad,
                                    self.permutation, self.element_selection)
        if self.key is None:
            bound = self.max_entry
            if bound is None and self.config_.variant == "hcml":
                bound = HCML_MAX_ENTRY
            self.key_ = keygen(self.n, self.modulus, bound, self.random_state)
        else:
            self.key_ = _check_key(self.config_, self.key)
        # Encryption works with any key; only decryption needs the inverse.
        self.key_inverse_ = (mat_inv_mod(self.key_.entries, self.modulus)
                             if self.key_.is_invertible else None)
        return self

    def _blocks(self, X):
        if isinstance(X, str):
            if len(X) % (2 * self.n):
                raise ConfigError(f"text length {len(X)} is not a multiple of {2 * self.n}; pad it first")
            step = 2 * self.n
            return np.stack([encode_block(X[i:i + step], self.n) for i in range(0, len(X), step)])
        return check_blocks(X, self.n, self.modulus)

    def transform(self, X):
        check_is_fitted(self, "key_")
        return np.stack([encrypt(self.config_, self.key_, b) for b in self._blocks(X)])

    def inverse_transform(self, X):
        check_is_fitted(self, "key_")
        if self.key_inverse_ is None:
            mat_inv_mod(self.key_.entries, self.modulus)  # raises NotInvertible with the gcd
        return np.stack([decrypt(self.config_, self.key_, b, self.key_inverse_)
                         for b in self._blocks(X)])

    def encrypt_text(self, text):
        return self.transform(text)

    def decrypt_text(self, blocks):
        return "".join(decode_block(b) for b in self.inverse_transform(blocks))
