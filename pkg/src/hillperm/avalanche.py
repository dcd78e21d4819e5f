"""Avalanche measurements: perturb one plaintext character or key entry, count flipped ciphertext bits."""

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .cipher import CipherConfig, _check_key, encrypt
from .codec import ROW_BITS, decode_block, hamming
from .exceptions import ConfigError
from .modlinalg import KeyMatrix
from .validation import check_block

CSV_HEADER = ("m", "plaintext_bits", "key_bits", "total_bits")


@dataclass(frozen=True)
class Perturbation:
    """Add ``delta`` (mod N) to one plaintext or key element.

    ``position`` is 1-based: a character index or ``(row, col)`` for the
    plaintext, ``(row, col)`` for the key.
    """

    target: str
    position: object
    delta: int = 1

    def __post_init__(self):
        if self.target not in ("plaintext", "key"):
            raise ConfigError(f"perturbation target must be 'plaintext' or 'key', got {self.target!r}")
        pos = self.position
        if self.target == "key" and not (isinstance(pos, tuple) and len(pos) == 2):
            raise ConfigError("key perturbations need a (row, col) position")
        object.__setattr__(self, "position", pos if isinstance(pos, tuple) else int(pos))

    @classmethod
    def parse(cls, text):
        """Parse ``plaintext:1:+1``, ``plaintext:2,1:+1`` or ``key:3,3:+1``."""
        try:
            target, pos, delta = text.split(":")
            coords = tuple(int(v) for v in pos.split(","))
            position = coords if len(coords) == 2 else coords[0]
            return cls(target, position, int(delta))
        except ValueError:
            raise ConfigError(f"malformed perturbation {text!r}; expected target:pos:delta") from None

    def element(self, n):
        """0-based ``(row, col)`` of the perturbed element in an order-``n`` block or key."""
        if isinstance(self.position, tuple):
            r, c = self.position
            return r - 1, c - 1
        idx = self.position - 1
        if not 0 <= idx < 2 * n:
            raise ConfigError(f"character index {self.position} outside a {2 * n}-character block")
        return idx % n, idx // n

    def apply(self, key, plain, modulus):
        """Return ``(key', plain')`` with exactly one element changed."""
        n = plain.shape[0]
        r, c = self.element(n)
        if self.target == "plaintext":
            plain = plain.copy()
            plain[r, c] = (plain[r, c] + self.delta) % modulus
            return key, plain
        if not (0 <= r < key.order and 0 <= c < key.order):
            raise ConfigError(f"key element {self.position} outside an order-{key.order} key")
        return key.with_entry(r, c, int(key.entries[r, c]) + self.delta), plain


def measure_avalanche(cfg, key, plain, pert):
    """Ciphertext bits that differ after applying ``pert``."""
    key = _check_key(cfg, key)
    plain = check_block(plain, cfg.n, cfg.modulus)
    key2, plain2 = pert.apply(key, plain, cfg.modulus)
    return hamming(encrypt(cfg, key, plain), encrypt(cfg, key2, plain2))


@dataclass
class AvalancheReport:
    config: dict
    rows: list = field(default_factory=list)
    total_bits: int = 112

    def to_csv(self, echo_config=False):
        buf = io.StringIO()
        if echo_config:
            for k, v in self.config.items():
                buf.write(f"# {k}={v}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for m, pbits, kbits in self.rows:
            writer.writerow((m, "" if pbits is None else pbits, "" if kbits is None else kbits, self.total_bits))
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text):
        lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
        reader = csv.reader(lines)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ConfigError(f"unexpected avalanche CSV header {header}")
        rows, total = [], ROW_BITS * 8
        for m, p, k, total in reader:
            rows.append((int(m), int(p) if p else None, int(k) if k else None))
        return cls({}, rows, int(total))


def _config_echo(cfg):
    echo = {"variant": cfg.variant, "n": cfg.n, "modulus": cfg.modulus, "ad": cfg.ad}
    if cfg.element_selection is not None:
        echo["element_selection"] = ";".join(f"{r},{c}:{s}" for r, c, s in cfg.element_selection)
    return echo


def sweep_m(cfg, key, plain, m_list, plaintext_pert=None, key_pert=None, n_jobs=None):
    """One report row per iteration count in ``m_list``, in the given order."""
    m_list = list(m_list)
    if not m_list:
        raise ConfigError("m_list must not be empty")
    if plaintext_pert is None and key_pert is None:
        raise ConfigError("give at least one perturbation")
    key = _check_key(cfg, key)
    plain = check_block(plain, cfg.n, cfg.modulus)

    def row(m):
        c = cfg.with_iterations(m)
        pbits = None if plaintext_pert is None else measure_avalanche(c, key, plain, plaintext_pert)
        kbits = None if key_pert is None else measure_avalanche(c, key, plain, key_pert)
        return m, pbits, kbits

    if n_jobs and n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            rows = list(pool.map(row, m_list))
    else:
        rows = [row(m) for m in m_list]
    return AvalancheReport(_config_echo(cfg), rows, ROW_BITS * cfg.n)


def character_sweep(cfg, key, plain, delta=1):
    """``[(index, char, bits)]`` for every 1-based character index incremented by ``delta``."""
    plain = check_block(plain, cfg.n, cfg.modulus)
    text = decode_block(plain)
    return [
        (i, text[i - 1], measure_avalanche(cfg, key, plain, Perturbation("plaintext", i, delta)))
        for i in range(1, 2 * cfg.n + 1)
    ]


def selection_average(cfg, key, plain, pert, selections):
    """Mean avalanche of an aphc config over several element selections."""
    selections = list(selections)
    if not selections:
        raise ConfigError("need at least one element selection")
    counts = [
        measure_avalanche(CipherConfig("aphc", cfg.n, cfg.modulus, cfg.m, cfg.ad, element_selection=sel),
                          key, plain, pert)
        for sel in selections
    ]
    return float(np.mean(counts))


def as_key(key, modulus):
    return key if isinstance(key, KeyMatrix) else KeyMatrix(np.asarray(key), modulus)
