"""Command-line front end.

Exit status is 0 on success, 2 on usage errors (bad flags) and 1 on domain
errors (malformed files, non-invertible keys, bad permutations).
"""

import argparse
import random
import sys
from pathlib import Path

import numpy as np

from . import presets
from .attack import attack_demo, bit_width, published_example
from .avalanche import Perturbation, sweep_m
from .cipher import VARIANTS, CipherConfig, decrypt, encrypt, keygen
from .codec import decode_block, encode_block
from .exceptions import ConfigError, HillError
from .modlinalg import KeyMatrix, is_invertible_mod, mat_inv_mod
from .permutations import BitLabelSpec, Permutation, nonlinearity_witness, parse_permutation_text

PRESET_KEYS = {"k1": presets.K1, "k2": presets.K2, "k2-amended": presets.K2_AMENDED}
PRESET_TEXTS = {"world-bank": presets.PLAINTEXT_K1, "development": presets.PLAINTEXT_K2}
PAD = " "
CT_MAGIC = "# hillperm-ciphertext"


def parse_m_list(text):
    """``"1..20,50,100"`` -> ``[1, 2, ..., 20, 50, 100]``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("m-list is empty")
    return out


def _m_list(text):
    try:
        return parse_m_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed m-list {text!r}") from None


def _perturbation(text):
    try:
        return Perturbation.parse(text)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_elements(text):
    """``"1,1;3,1"`` -> ``[(1, 1), (3, 1)]``."""
    out = []
    for chunk in text.replace(" ", ";").split(";"):
        if chunk:
            r, c = chunk.split(",")
            out.append((int(r), int(c)))
    return out


def _elements(text):
    try:
        return parse_elements(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed element list {text!r}") from None


# -- ciphertext file format ---------------------------------------------------

def format_ciphertext(blocks, length):
    lines = [f"{CT_MAGIC} n={blocks.shape[1]} length={length}"]
    for block in blocks:
        lines += [f"{int(a)} {int(b)}" for a, b in block]
        lines.append("")
    return "\n".join(lines)


def parse_ciphertext(text, n):
    rows, length = [], None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for field in line.split()[1:]:
                if field.startswith("length="):
                    length = int(field.split("=", 1)[1])
                elif field.startswith("n=") and int(field[2:]) != n:
                    raise HillError(f"ciphertext was written for order {field[2:]}, key has order {n}")
            continue
        try:
            a, b = (int(v) for v in line.split())
        except ValueError:
            raise HillError(f"malformed ciphertext row {line!r}") from None
        rows.append((a, b))
    if len(rows) % n:
        raise HillError(f"ciphertext has {len(rows)} rows, not a multiple of the order {n}")
    blocks = np.array(rows, dtype=np.int64).reshape(-1, n, 2)
    return blocks, length


# -- shared helpers -----------------------------------------------------------

def _load_key(args):
    if args.preset_key:
        return KeyMatrix(PRESET_KEYS[args.preset_key], 128)
    if not args.key:
        raise HillError("give --key FILE or --preset-key")
    return KeyMatrix.from_text(Path(args.key).read_text())


def _build_config(args, n, modulus):
    permutation = element_selection = None
    if args.perm:
        parsed = parse_permutation_text(Path(args.perm).read_text())
        if isinstance(parsed, Permutation):
            permutation = parsed
        else:
            if parsed.width != 7:
                raise HillError("element bit permutations must be 7 bits wide")
            elements = args.elements or [(r, c) for r in range(1, n + 1) for c in (1, 2)]
            element_selection = tuple((r, c, parsed) for r, c in elements)
    elif args.bits:
        spec = BitLabelSpec.parse(args.bits)
        elements = args.elements or [(r, c) for r in range(1, n + 1) for c in (1, 2)]
        element_selection = tuple((r, c, spec) for r, c in elements)
    return CipherConfig(args.variant, n, modulus, args.m, args.ad, permutation, element_selection)


def _write(args, text):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------

def cmd_keygen(args):
    key = keygen(args.n, args.modulus, args.max_entry, args.seed)
    _write(args, key.to_text())


def cmd_encrypt(args):
    key = _load_key(args)
    cfg = _build_config(args, key.order, key.modulus)
    if args.text is not None:
        message = args.text
    else:
        message = Path(args.inp).read_bytes().decode("ascii")
    step = 2 * key.order
    length = len(message)
    padded = message + PAD * (-length % step)
    if not padded:
        padded = PAD * step
    blocks = np.stack([encrypt(cfg, key, encode_block(padded[i:i + step], key.order))
                       for i in range(0, len(padded), step)])
    _write(args, format_ciphertext(blocks, length))


def cmd_decrypt(args):
    key = _load_key(args)
    cfg = _build_config(args, key.order, key.modulus)
    text = Path(args.inp).read_text() if args.inp else sys.stdin.read()
    blocks, length = parse_ciphertext(text, key.order)
    key_inv = mat_inv_mod(key.entries, key.modulus)
    message = "".join(decode_block(decrypt(cfg, key, b, key_inv)) for b in blocks)
    if length is not None:
        message = message[:length]
    data = message.encode("ascii")
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(message)


def cmd_avalanche(args):
    key = _load_key(args)
    cfg = _build_config(args, key.order, key.modulus)
    text = PRESET_TEXTS[args.preset_plaintext] if args.preset_plaintext else args.plaintext
    if text is None:
        raise HillError("give --plaintext or --preset-plaintext")
    plain = encode_block(text, key.order)
    pperts = [p for p in args.perturb if p.target == "plaintext"]
    kperts = [p for p in args.perturb if p.target == "key"]
    if len(pperts) > 1 or len(kperts) > 1:
        raise HillError("at most one plaintext and one key perturbation")
    if not args.perturb:
        raise HillError("give at least one --perturb")
    report = sweep_m(cfg, key, plain, args.m_list,
                     pperts[0] if pperts else None, kperts[0] if kperts else None, n_jobs=args.jobs)
    _write(args, report.to_csv(echo_config=args.echo_config))


def cmd_attack_demo(args):
    if args.builtin_paper_example:
        _write(args, published_example().render())
        return
    modulus = args.modulus
    rng = random.Random(args.seed)
    width = bit_width(modulus)
    matches = 0
    lines = []
    for t in range(args.trials):
        key = _random_invertible(rng, 2, modulus)
        X_train = _random_invertible(rng, 2, modulus)
        X_test = np.array([[rng.randrange(modulus) for _ in range(2)] for _ in range(2)])
        i, j = rng.sample(range(width), 2)
        labels = list(range(width - 1, -1, -1))
        pi, pj = labels.index(i), labels.index(j)
        labels[pi], labels[pj] = labels[pj], labels[pi]
        element = (rng.randint(1, 2), rng.randint(1, 2))
        try:
            report = attack_demo(key, BitLabelSpec(tuple(labels), width), element, X_train, X_test, modulus)
        except HillError as exc:
            # Permuted ciphertext can make the training block singular mod N.
            lines.append(f"trial {t}: skipped ({exc})")
            continue
        if report.verdict == "match":
            matches += 1
            lines.append(f"trial {t}: match (swap b{i},b{j} on element {element})")
    lines.append(f"trials: {args.trials}, matches: {matches}")
    lines.append(f"verdict: {'match' if matches == args.trials else 'mismatch'}")
    _write(args, "\n".join(lines) + "\n")


def _random_invertible(rng, n, modulus):
    while True:
        A = np.array([[rng.randrange(modulus) for _ in range(n)] for _ in range(n)])
        if is_invertible_mod(A, modulus):
            return A


def cmd_witness(args):
    b1, b2, lhs, rhs = nonlinearity_witness(args.width, args.i, args.j)
    w = args.width
    mod = 1 << w
    _write(args, (
        f"transposition of bits {args.i} and {args.j} on {w}-bit numbers\n"
        f"b1={b1} ({b1:0{w}b})\n"
        f"b2={b2} ({b2:0{w}b})\n"
        f"b1+b2 mod {mod}={(b1 + b2) % mod}\n"
        f"P(b1+b2)={lhs} ({lhs:0{w}b})\n"
        f"P(b1)+P(b2) mod {mod}={rhs} ({rhs:0{w}b})\n"
        f"linear: {'yes' if lhs == rhs else 'no'}\n"
    ))


def build_parser():
    parser = argparse.ArgumentParser(prog="hillperm", description="Hill cipher variants with bit permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate an invertible key matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, default=128)
    p.add_argument("--max-entry", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_keygen)

    def cipher_flags(p):
        p.add_argument("--variant", choices=VARIANTS, default="hc")
        p.add_argument("--key")
        p.add_argument("--preset-key", choices=sorted(PRESET_KEYS))
        p.add_argument("--m", type=int)
        p.add_argument("--ad", action=argparse.BooleanOptionalAction, default=True)
        p.add_argument("--perm", help="permutation file (gather line or bits:W:labels)")
        p.add_argument("--bits", help="bit labels for aphc element permutations, e.g. 6453210")
        p.add_argument("--elements", type=_elements, help="1-based elements, e.g. '1,1;3,1' (default: all)")
        p.add_argument("--out")

    p = sub.add_parser("encrypt", help="encrypt a message (space-padded to whole blocks)")
    cipher_flags(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="inp")
    src.add_argument("--text")
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    cipher_flags(p)
    p.add_argument("--in", dest="inp")
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("avalanche", help="avalanche counts over a list of iteration counts, as CSV")
    cipher_flags(p)
    p.add_argument("--plaintext")
    p.add_argument("--preset-plaintext", choices=sorted(PRESET_TEXTS))
    p.add_argument("--m-list", type=_m_list, default=presets.ITERATION_M)
    p.add_argument("--perturb", type=_perturbation, action="append", default=[],
                   help="target:pos:delta, e.g. plaintext:1:+1 or key:3,3:+1")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--echo-config", action="store_true", help="prefix the CSV with '# key=value' lines")
    p.set_defaults(func=cmd_avalanche)

    p = sub.add_parser("attack-demo", help="known-plaintext attack against a bit-swapped Hill cipher")
    p.add_argument("--modulus", type=int, default=26)
    p.add_argument("--builtin-paper-example", action="store_true")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_attack_demo)

    p = sub.add_parser("witness", help="counterexample to additivity of a bit transposition")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (HillError, OSError, UnicodeError) as exc:
        print(f"hillperm {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
