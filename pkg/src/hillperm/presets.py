"""Published keys, plaintexts, worked examples and avalanche tables, as plain data.

Matrices are stored exactly as printed, misprints included, so tests can
compare recomputed values against them. Where a printed value is known to
disagree with a recomputation, that is noted next to the constant.
"""

import numpy as np

from .permutations import BitLabelSpec

# Key used with "The World Bank h" (entries < 64).
K1 = np.array([
    [53, 62, 24, 33, 49, 18, 17, 43],
    [45, 12, 63, 29, 60, 35, 58, 11],
    [8, 41, 46, 30, 48, 32, 5, 51],
    [47, 9, 38, 42, 2, 59, 27, 61],
    [57, 20, 6, 31, 16, 26, 22, 25],
    [56, 37, 13, 52, 3, 54, 15, 21],
    [36, 40, 44, 10, 19, 39, 55, 4],
    [14, 1, 23, 50, 34, 0, 7, 28],
])

# Key used with "The development " (entries < 128). Its determinant is even,
# so it is not invertible mod 128: fine for encryption and avalanche runs,
# unusable for decryption.
K2 = np.array([
    [53, 62, 124, 33, 49, 118, 107, 43],
    [45, 112, 63, 29, 60, 35, 58, 11],
    [88, 41, 46, 30, 48, 32, 105, 51],
    [47, 99, 38, 42, 112, 59, 27, 61],
    [57, 20, 6, 31, 106, 126, 22, 125],
    [56, 37, 113, 52, 3, 54, 105, 21],
    [36, 40, 43, 100, 119, 39, 55, 94],
    [14, 81, 23, 50, 34, 70, 7, 28],
])

# K2 with entry (4, 3) = 36 instead of 38. With it, K2 @ PLAINTEXT_K2_CODES
# reproduces FIRST_PRODUCT_PRINTED in full and the column-swap sweep
# reproduces both published "original key" columns. Still not invertible.
K2_AMENDED = K2.copy()
K2_AMENDED[3, 2] = 36

PLAINTEXT_K1 = "The World Bank h"
# Printed without its trailing space; the 8x2 code matrix ends in 32.
PLAINTEXT_K2 = "The development "

PLAINTEXT_K2_CODES = np.array([
    [84, 108], [104, 111], [101, 112], [32, 109],
    [100, 101], [101, 110], [118, 116], [101, 32],
])

# Printed K2 @ PLAINTEXT_K2_CODES mod 128. Row 4 is printed as (34, 73); the
# product of the printed operands is (108, 41).
FIRST_PRODUCT_PRINTED = np.array([
    [27, 112], [17, 83], [83, 113], [34, 73],
    [37, 25], [38, 86], [86, 77], [127, 11],
])

# Column-swap walk-through starting from FIRST_PRODUCT_PRINTED.
CSHC_E = np.array([
    [0, 0, 1, 1, 0, 1, 1], [0, 0, 1, 0, 0, 0, 1], [1, 0, 1, 0, 0, 1, 1], [0, 1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 1, 0, 1], [0, 1, 0, 0, 1, 1, 0], [1, 0, 1, 0, 1, 1, 0], [1, 1, 1, 1, 1, 1, 1],
])
CSHC_F = np.array([
    [1, 1, 1, 0, 0, 0, 0], [1, 0, 1, 0, 0, 1, 1], [1, 1, 1, 0, 0, 0, 1], [1, 0, 0, 1, 0, 0, 1],
    [0, 0, 1, 1, 0, 0, 1], [1, 0, 1, 0, 1, 1, 0], [1, 0, 0, 1, 1, 0, 1], [0, 0, 0, 1, 0, 1, 1],
])
CSHC_E_SWAPPED = np.array([
    [0, 1, 1, 0, 0, 0, 1], [0, 0, 1, 0, 0, 1, 1], [1, 1, 1, 0, 0, 0, 1], [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 1], [0, 0, 0, 0, 1, 1, 0], [1, 0, 1, 1, 1, 0, 0], [1, 0, 1, 1, 1, 1, 1],
])
CSHC_F_SWAPPED = np.array([
    [1, 0, 1, 1, 0, 1, 0], [1, 0, 1, 0, 0, 0, 1], [1, 0, 1, 0, 0, 1, 1], [1, 1, 0, 0, 0, 1, 1],
    [0, 1, 1, 0, 0, 0, 1], [1, 1, 1, 0, 1, 1, 0], [1, 0, 0, 0, 1, 1, 1], [0, 1, 0, 1, 0, 1, 1],
])
CSHC_FIRST_ROUND = np.array([
    [49, 90], [19, 81], [113, 83], [8, 99],
    [13, 49], [6, 118], [92, 71], [95, 43],
])

# Arbitrary-permutation walk-through: labels applied to element (1, 1) only.
APHC_EXAMPLE_SPEC = BitLabelSpec((6, 5, 4, 3, 0, 2, 1))
APHC_EXAMPLE_ELEMENT = (1, 1)
# Rows 4 and 7 differ from FIRST_PRODUCT_PRINTED by more than a permutation of
# element (1, 1) allows; only row 1 is a checkable consequence.
APHC_FIRST_ROUND_PRINTED = np.array([
    [29, 112], [17, 83], [83, 113], [108, 41],
    [37, 25], [38, 86], [59, 61], [127, 11],
])

# Known-plaintext attack example, modulus 26.
ATTACK_MODULUS = 26
ATTACK_KEY = np.array([[19, 12], [21, 13]])
ATTACK_X1 = np.array([[12, 3], [5, 4]])
ATTACK_Y1 = np.array([[2, 1], [5, 11]])
ATTACK_X2 = np.array([[4, 2], [12, 3]])
ATTACK_Y1_PERMUTED = np.array([[2, 1], [3, 11]])
ATTACK_Y2_PERMUTED = np.array([[12, 22], [6, 3]])
# Swap b2 and b1 of a 5-bit value, applied to element (2, 1).
ATTACK_BIT_SPEC = BitLabelSpec((4, 3, 1, 2, 0), width=5)
ATTACK_ELEMENT = (2, 1)
# The key printed as recovered. It does not map X1 to Y1'; the consistent
# solution is [[19, 12], [5, 25]]. Its inverse is printed correctly.
ATTACK_PRINTED_KEY = np.array([[19, 12], [10, 13]])
ATTACK_PRINTED_KEY_INVERSE = np.array([[13, 4], [12, 11]])
ATTACK_PRINTED_PREDICTION = np.array([[24, 12], [2, 11]])

# Avalanche perturbations: (1-based character index, 1-based key element).
ITERATION_SETUPS = {
    "hcml": {"key": K1, "plaintext": PLAINTEXT_K1, "char": 1, "key_element": (3, 3)},
    "hcmw": {"key": K2, "plaintext": PLAINTEXT_K2, "char": 9, "key_element": (3, 6)},
}

ITERATION_M = tuple(range(1, 21)) + (50, 100)

# m -> (hcml plaintext, hcmw plaintext, hcml key, hcmw key)
ITERATION_AVALANCHE = {
    1: (56, 64, 30, 51), 2: (52, 59, 55, 61), 3: (53, 54, 57, 59), 4: (56, 53, 58, 55),
    5: (53, 40, 56, 56), 6: (62, 61, 58, 56), 7: (57, 59, 59, 48), 8: (61, 54, 62, 61),
    9: (44, 63, 61, 62), 10: (62, 62, 47, 60), 11: (53, 64, 51, 54), 12: (56, 60, 60, 56),
    13: (57, 50, 49, 66), 14: (52, 54, 57, 64), 15: (60, 62, 61, 57), 16: (65, 43, 55, 57),
    17: (51, 60, 66, 56), 18: (51, 60, 53, 62), 19: (68, 53, 62, 50), 20: (59, 59, 57, 53),
    50: (58, 63, 56, 49), 100: (59, 53, 58, 61),
}

# Column-swap cipher, K2, "The development ", AD on. Rows follow the
# non-space characters in order: 1-based character index ->
# (m=1 original key, m=2 original key, m=1 changed key, m=2 changed key).
CSHC_CHAR_AVALANCHE = {
    1: (44, 44, 46, 64), 2: (42, 55, 60, 61), 3: (40, 55, 59, 49), 5: (60, 60, 61, 66),
    6: (56, 45, 51, 61), 7: (55, 50, 55, 52), 8: (56, 45, 49, 49), 9: (51, 51, 56, 62),
    10: (48, 51, 56, 56), 11: (49, 47, 64, 65), 12: (51, 58, 53, 57), 13: (47, 54, 60, 57),
    14: (53, 44, 65, 55), 15: (45, 42, 63, 50),
}

# z -> (bit labels, selected 1-based elements)
APHC_SWAP_PRESETS = {
    2: ("6453210", ((1, 1), (3, 1))),
    3: ("6543021", ((3, 2), (7, 1))),
    4: ("6234510", ((7, 2), (1, 2))),
    5: ("2345160", ((7, 2), (5, 2))),
    6: ("1234560", ((6, 2), (4, 1))),
    7: ("0123456", ((3, 2), (1, 2))),
}

# z -> averages: plaintext (m1 AD off, m1 AD on, m2 AD off), key (m1 AD on, m1 AD off, m2 AD on),
# column labels as printed.
APHC_AVERAGES = {
    2: (36.6, 45.1, 50.1, 9.41, 57.5, 58.8),
    3: (35.8, 45.5, 50.8, 10.6, 56.7, 60.1),
    4: (36.0, 39.8, 49.8, 11.3, 55.2, 63.1),
    5: (37.1, 38.0, 51.1, 11.0, 55.1, 63.1),
    6: (36.8, 43.0, 48.3, 10.7, 60.5, 55.5),
    7: (36.6, 44.2, 49.2, 14.8, 55.2, 56.5),
}


def swap_preset_selection(z):
    """Element selection (for ``CipherConfig.element_selection``) of a swap preset."""
    labels, elements = APHC_SWAP_PRESETS[z]
    spec = BitLabelSpec.parse(labels)
    return tuple((r, c, spec) for r, c in elements)
