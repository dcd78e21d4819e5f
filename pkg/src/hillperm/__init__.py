"""Hill cipher variants strengthened with bit-level permutations, plus avalanche and attack tooling.

The ciphers here are teaching and research artifacts, not secure encryption.
"""

from .attack import attack_demo, keyspace_note, solve_key
from .avalanche import AvalancheReport, Perturbation, character_sweep, measure_avalanche, sweep_m
from .cipher import CipherConfig, HillCipher, decrypt, encrypt, keygen
from .codec import decode_block, encode_block, from_bits, hamming, to_bits
from .exceptions import (
    BadLength,
    BoundTooSmall,
    ConfigError,
    DimensionMismatch,
    HillError,
    InvalidIndices,
    InvalidPermutation,
    LengthMismatch,
    MissingPermutation,
    NonAsciiCharacter,
    NotInvertible,
    OddOrder,
)
from .modlinalg import KeyMatrix, det_exact, is_invertible_mod, mat_inv_mod, mat_mul_mod, mod_inverse
from .permutations import (
    BitLabelSpec,
    Permutation,
    apply_permutation,
    bitlabels_to_permutation,
    column_swap,
    interlace,
    interlace_inverse,
    interweave,
    interweave_inverse,
    invert_permutation,
    nonlinearity_witness,
)

__version__ = "0.1.0"
