import numpy as np
import pytest

from hillperm import presets
from hillperm.avalanche import (
    CSV_HEADER,
    AvalancheReport,
    Perturbation,
    character_sweep,
    measure_avalanche,
    selection_average,
    sweep_m,
)
from hillperm.cipher import CipherConfig, encrypt
from hillperm.codec import encode_block, hamming
from hillperm.exceptions import ConfigError
from hillperm.modlinalg import KeyMatrix

P_WORLD = encode_block(presets.PLAINTEXT_K1, 8)
P_DEV = encode_block(presets.PLAINTEXT_K2, 8)


class TestPerturbation:
    def test_parse(self):
        assert Perturbation.parse("plaintext:1:+1") == Perturbation("plaintext", 1, 1)
        assert Perturbation.parse("key:3,3:+1") == Perturbation("key", (3, 3), 1)
        assert Perturbation.parse("plaintext:2,1:-1") == Perturbation("plaintext", (2, 1), -1)

    @pytest.mark.parametrize("text", ["plaintext:1", "foo:1:+1", "key:3:+1", "key:a,b:+1"])
    def test_parse_errors(self, text):
        with pytest.raises(ConfigError):
            Perturbation.parse(text)

    def test_character_positions_are_column_major(self):
        assert Perturbation("plaintext", 1).element(8) == (0, 0)
        assert Perturbation("plaintext", 9).element(8) == (0, 1)
        assert Perturbation("plaintext", 16).element(8) == (7, 1)
        with pytest.raises(ConfigError):
            Perturbation("plaintext", 17).element(8)

    def test_published_perturbations(self):
        _, plain = Perturbation("plaintext", 1).apply(None, P_WORLD, 128)
        assert chr(plain[0, 0]) == "U"
        _, plain = Perturbation("plaintext", 9).apply(None, P_DEV, 128)
        assert chr(plain[0, 1]) == "m"
        key, _ = Perturbation("key", (3, 3)).apply(KeyMatrix(presets.K1, 128), P_WORLD, 128)
        assert presets.K1[2, 2] == 46 and key.entries[2, 2] == 47
        key, _ = Perturbation("key", (3, 6)).apply(KeyMatrix(presets.K2, 128), P_DEV, 128)
        assert presets.K2[2, 5] == 32 and key.entries[2, 5] == 33

    def test_wraps(self):
        _, plain = Perturbation("plaintext", 1, 1).apply(None, np.full((2, 2), 127), 128)
        assert plain[0, 0] == 0


class TestMeasure:
    def test_hcml_sixteen_rounds(self):
        cfg = CipherConfig("hcml", m=16)
        assert measure_avalanche(cfg, presets.K1, P_WORLD, Perturbation("plaintext", 1)) == 65

    def test_zero_delta(self, rng):
        for variant in ("hc", "hcml", "hcmw", "cshc"):
            cfg = CipherConfig(variant, m=2)
            assert measure_avalanche(cfg, presets.K1, P_WORLD, Perturbation("plaintext", 3, 0)) == 0
            assert measure_avalanche(cfg, presets.K1, P_WORLD, Perturbation("key", (1, 1), 0)) == 0

    def test_matches_direct_computation(self):
        cfg = CipherConfig("cshc", m=2)
        Q = P_DEV.copy()
        Q[3, 1] += 1
        direct = hamming(encrypt(cfg, presets.K2, P_DEV), encrypt(cfg, presets.K2, Q))
        assert measure_avalanche(cfg, presets.K2, P_DEV, Perturbation("plaintext", (4, 2))) == direct

    @pytest.mark.parametrize("z", sorted(presets.APHC_SWAP_PRESETS))
    def test_weak_key_diffusion_without_final_multiplication(self, z):
        sel = presets.swap_preset_selection(z)
        weak = CipherConfig("aphc", m=1, ad=False, element_selection=sel)
        strong = CipherConfig("aphc", m=1, ad=True, element_selection=sel)
        pert = Perturbation("key", (3, 6))
        for key in (presets.K2, presets.K2_AMENDED):
            w = measure_avalanche(weak, key, P_DEV, pert)
            assert w <= 16
            # Only row 3 of K P changes, so every flipped bit sits in ciphertext row 3.
            C1 = encrypt(weak, key, P_DEV)
            k2, _ = pert.apply(KeyMatrix(key, 128), P_DEV, 128)
            C2 = encrypt(weak, k2, P_DEV)
            assert set(np.argwhere(C1 != C2)[:, 0]) <= {2}
            assert measure_avalanche(strong, key, P_DEV, pert) > 35


class TestSweep:
    @pytest.mark.parametrize("variant, column", [("hcml", 0)])
    def test_iteration_study_reproduced(self, variant, column):
        setup = presets.ITERATION_SETUPS[variant]
        report = sweep_m(CipherConfig(variant), setup["key"], encode_block(setup["plaintext"], 8),
                         presets.ITERATION_M, Perturbation("plaintext", setup["char"]),
                         Perturbation("key", setup["key_element"]))
        assert [r[0] for r in report.rows] == list(presets.ITERATION_M)
        for m, p, k in report.rows:
            published = presets.ITERATION_AVALANCHE[m]
            assert (p, k) == (published[column], published[column + 2])

    def test_zero_rounds_equals_hill(self):
        report = sweep_m(CipherConfig("hcmw"), presets.K2, P_DEV, [0],
                         Perturbation("plaintext", 9), Perturbation("key", (3, 6)))
        hc = CipherConfig("hc")
        expected = (measure_avalanche(hc, presets.K2, P_DEV, Perturbation("plaintext", 9)),
                    measure_avalanche(hc, presets.K2, P_DEV, Perturbation("key", (3, 6))))
        assert report.rows == [(0, *expected)]

    def test_bounds_and_determinism(self):
        args = (CipherConfig("hcmw"), presets.K2, P_DEV, [1, 5, 3, 20])
        kw = dict(plaintext_pert=Perturbation("plaintext", 9), key_pert=Perturbation("key", (3, 6)))
        a = sweep_m(*args, **kw)
        b = sweep_m(*args, n_jobs=4, **kw)
        assert a.rows == b.rows
        assert [r[0] for r in b.rows] == [1, 5, 3, 20]
        assert all(0 <= v <= 112 for r in a.rows for v in r[1:])

    def test_errors(self):
        with pytest.raises(ConfigError):
            sweep_m(CipherConfig("hcmw"), presets.K2, P_DEV, [], Perturbation("plaintext", 1))
        with pytest.raises(ConfigError):
            sweep_m(CipherConfig("hcmw"), presets.K2, P_DEV, [1])


class TestReportCsv:
    def test_header_and_round_trip(self):
        report = AvalancheReport({"variant": "hcml"}, [(1, 56, 30), (2, 52, None)], 112)
        text = report.to_csv()
        assert text.splitlines()[0] == ",".join(CSV_HEADER) == "m,plaintext_bits,key_bits,total_bits"
        assert text.splitlines()[2] == "2,52,,112"
        back = AvalancheReport.from_csv(text)
        assert back.rows == report.rows and back.total_bits == 112

    def test_config_echo(self):
        text = AvalancheReport({"variant": "hcml"}, [(1, 1, 1)]).to_csv(echo_config=True)
        assert text.startswith("# variant=hcml\nm,plaintext_bits")
        assert AvalancheReport.from_csv(text).rows == [(1, 1, 1)]

    def test_bad_header(self):
        with pytest.raises(ConfigError):
            AvalancheReport.from_csv("a,b,c,d\n")


class TestCharacterSweep:
    @pytest.mark.parametrize("m", [1, 2])
    def test_column_swap_original_key_columns(self, m):
        sweep = character_sweep(CipherConfig("cshc", m=m, ad=True), presets.K2_AMENDED, P_DEV)
        assert [c for _, c, _ in sweep] == list(presets.PLAINTEXT_K2)
        got = {i: bits for i, _, bits in sweep}
        for idx, published in presets.CSHC_CHAR_AVALANCHE.items():
            assert got[idx] == published[m - 1]

    def test_first_character(self):
        sweep = character_sweep(CipherConfig("cshc", m=1), presets.K2_AMENDED, P_DEV)
        assert sweep[0] == (1, "T", 44)

    def test_zero_delta_and_bounds(self):
        cfg = CipherConfig("cshc", m=2)
        assert all(b == 0 for *_, b in character_sweep(cfg, presets.K2, P_DEV, delta=0))
        assert all(0 <= b <= 112 for *_, b in character_sweep(cfg, presets.K2, P_DEV))


def test_selection_average():
    cfg = CipherConfig("aphc", m=1, ad=False, element_selection=presets.swap_preset_selection(2))
    sels = [presets.swap_preset_selection(z) for z in sorted(presets.APHC_SWAP_PRESETS)]
    pert = Perturbation("key", (3, 6))
    avg = selection_average(cfg, presets.K2, P_DEV, pert, sels)
    singles = [measure_avalanche(CipherConfig("aphc", m=1, ad=False, element_selection=s), presets.K2, P_DEV, pert)
               for s in sels]
    assert avg == pytest.approx(sum(singles) / len(singles))
    with pytest.raises(ConfigError):
        selection_average(cfg, presets.K2, P_DEV, pert, [])
