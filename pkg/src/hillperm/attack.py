"""Known-plaintext key recovery for the plain Hill cipher, and how a bit swap breaks it."""

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from . import presets
from .modlinalg import mat_inv_mod, mat_mul_mod
from .permutations import BitLabelSpec, bitlabels_to_permutation, permute_value
from .validation import check_modulus, check_residues


def solve_key(X, Y, modulus):
    """Recover ``K`` with ``K X = Y (mod N)`` from ``n`` known plaintext columns.

    Raises :class:`~hillperm.exceptions.NotInvertible` when ``X`` is singular
    mod ``N``; the attacker then needs a different set of known blocks.
    """
    modulus = check_modulus(modulus)
    X = check_residues(X, modulus, name="X", square=True)
    Y = check_residues(Y, modulus, name="Y")
    return mat_mul_mod(Y, mat_inv_mod(X, modulus), modulus)


def bit_width(modulus):
    """Bits needed to write every residue mod ``modulus``."""
    return max(1, (modulus - 1).bit_length())


def permute_element(Y, element, spec):
    """Copy of ``Y`` with the bit-label ``spec`` applied to 1-based ``element``."""
    Y = np.array(Y, copy=True)
    r, c = element
    Y[r - 1, c - 1] = permute_value(Y[r - 1, c - 1], bitlabels_to_permutation(spec))
    return Y


@dataclass
class AttackReport:
    modulus: int
    key: np.ndarray
    element: tuple
    spec: BitLabelSpec
    X_train: np.ndarray
    X_test: np.ndarray
    Y_train: np.ndarray
    Y_test: np.ndarray
    Y_train_permuted: np.ndarray
    Y_test_permuted: np.ndarray
    recovered_key: np.ndarray
    prediction: np.ndarray
    reference: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return "match" if np.array_equal(self.prediction, self.X_test) else "mismatch"

    def render(self):
        def mat(name, A):
            rows = [" ".join(f"{int(v):>4d}" for v in row) for row in np.asarray(A)]
            return "\n".join([f"{name}:"] + ["  " + r for r in rows])

        labels = "".join(map(str, self.spec.labels))
        parts = [
            f"modulus: {self.modulus}",
            f"bit permutation: ({labels}) on element {self.element}, width {self.spec.width}",
            mat("K", self.key),
            mat("X_train", self.X_train),
            mat("Y_train = K X_train", self.Y_train),
            mat("Y_train' (permuted)", self.Y_train_permuted),
            mat("X_test", self.X_test),
            mat("Y_test = K X_test", self.Y_test),
            mat("Y_test' (permuted)", self.Y_test_permuted),
            mat("K' = Y_train' X_train^-1 (recovered)", self.recovered_key),
            mat("K'^-1 Y_test' (prediction)", self.prediction),
        ]
        if self.reference:
            ref = self.reference
            parts += [
                mat("published recovered key K1", ref["key"]),
                ("note: K1 X_train = Y_train' holds" if ref["consistent"] else
                 f"note: K1 X_train != Y_train' (mod {self.modulus}); K' above is the consistent solution"),
                mat("published K1^-1", ref["key_inverse"]),
                mat("K1^-1 Y_test' (published prediction)", ref["prediction"]),
                f"published prediction equals X_test: {'yes' if ref['matches'] else 'no'}",
            ]
        parts.append(f"keyspace factor for a secret permutation of this element: {keyspace_note(self.spec.width)}")
        parts.append(f"verdict: {self.verdict}")
        return "\n".join(parts) + "\n"


def attack_demo(key, spec, element, X_train, X_test, modulus, reference_key=None, reference_key_inverse=None):
    """Run the known-plaintext attack against a cipher that bit-permutes one ciphertext element.

    The attacker solves for the key from ``(X_train, Y_train')`` as if the
    cipher were plain Hill, then decrypts ``Y_test'``. The verdict is
    ``match`` only if that reproduces ``X_test``.
    """
    modulus = check_modulus(modulus)
    key = check_residues(key, modulus, name="key", square=True)
    Y_train = mat_mul_mod(key, X_train, modulus)
    Y_test = mat_mul_mod(key, X_test, modulus)
    Yp_train = permute_element(Y_train, element, spec)
    Yp_test = permute_element(Y_test, element, spec)
    recovered = solve_key(X_train, Yp_train, modulus)
    prediction = mat_mul_mod(mat_inv_mod(recovered, modulus), Yp_test, modulus)
    reference = {}
    if reference_key is not None:
        ref_inv = (mat_inv_mod(reference_key, modulus) if reference_key_inverse is None
                   else np.asarray(reference_key_inverse))
        ref_pred = mat_mul_mod(ref_inv, Yp_test, modulus)
        reference = {
            "key": np.asarray(reference_key),
            "key_inverse": ref_inv,
            "consistent": bool(np.array_equal(mat_mul_mod(reference_key, X_train, modulus),
                                              Yp_train % modulus)),
            "prediction": ref_pred,
            "matches": bool(np.array_equal(ref_pred, np.asarray(X_test) % modulus)),
        }
    return AttackReport(modulus, key, tuple(element), spec,
                        np.asarray(X_train) % modulus, np.asarray(X_test) % modulus,
                        Y_train, Y_test, Yp_train, Yp_test, recovered, prediction, reference)


def published_example():
    """The worked 2x2, mod-26 example, with the published recovered key alongside."""
    return attack_demo(presets.ATTACK_KEY, presets.ATTACK_BIT_SPEC, presets.ATTACK_ELEMENT,
                       presets.ATTACK_X1, presets.ATTACK_X2, presets.ATTACK_MODULUS,
                       reference_key=presets.ATTACK_PRINTED_KEY,
                       reference_key_inverse=presets.ATTACK_PRINTED_KEY_INVERSE)


def keyspace_note(length):
    """``length!``, the number of secret permutations of ``length`` bits."""
    return factorial(int(length))
