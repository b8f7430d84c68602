import json

import numpy as np
import pytest

from iz4codes import cli, codegen, codeset, stats


@pytest.fixture(scope="module")
def screened():
    return codegen.build_iz4_2s()


def test_binary_round_trip(tmp_path, screened):
    path = tmp_path / "set.txt"
    codeset.store_codeset(screened, path)
    back = codeset.load_codeset(path)
    assert back.kind == "IZ4_2S"
    assert len(back) == len(screened)
    for a, b in zip(screened.codes, back.codes):
        assert a.label == b.label
        assert a.index == b.index and a.phase == b.phase
        assert np.array_equal(a.bits, b.bits)
    # byte-identical on re-store
    path2 = tmp_path / "again.txt"
    codeset.store_codeset(back, path2)
    assert path.read_bytes() == path2.read_bytes()


def test_quaternary_round_trip(tmp_path):
    fam = codegen.build_family("MFD2")
    path = tmp_path / "mfd2.txt"
    codeset.store_codeset(fam, path)
    back = codeset.load_codeset(path)
    header = json.loads(path.read_text().splitlines()[0])
    assert header["bits_per_symbol"] == 2
    assert header["count"] == 512
    assert header["symbols_per_code"] == 2046
    assert "version" in header and "ordering" in header
    assert header["m_alpha"] == [1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1]
    assert header["theta_alpha_power"] == 323
    for a, b in zip(fam.codes, back.codes):
        assert a.index == b.index
        assert np.array_equal(a.symbols, b.symbols)


def test_malformed_codeset(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("not json\n")
    with pytest.raises(ValueError):
        codeset.load_codeset(p)
    p.write_text('{"family": "X", "version": "1"}\n')
    with pytest.raises(ValueError):
        codeset.load_codeset(p)


def test_report_round_trip(tmp_path, screened):
    prof = stats.family_profile(screened)
    rp = tmp_path / "report.json"
    codeset.write_report(prof, rp, {"source": "unit test"})
    rep = codeset.load_report(rp)
    # every dB field sits next to its integer magnitude
    for mag_key, db_key in (("even_acr", "even_acr_db"),
                            ("even_ccr", "even_ccr_db"),
                            ("odd_acr", "odd_acr_db"),
                            ("odd_ccr", "odd_ccr_db"),
                            ("max_all", "max_all_db"),
                            ("p99", "p99_db"), ("p999", "p999_db")):
        assert rep["profile"][mag_key] is not None
        assert rep["profile"][db_key] is not None
    assert rep["environment"]["odd_convention"] == "standard"
    assert rep["environment"]["auto_excludes_zero_shift"] is True
    assert rep["environment"]["source"] == "unit test"


def test_cdf_csv(tmp_path, screened):
    prof = stats.family_profile(screened)
    cp = tmp_path / "cdf.csv"
    codeset.write_cdf_csv(prof, cp)
    lines = cp.read_text().splitlines()
    assert lines[0] == "magnitude,percent"
    assert lines[-1] == "%d,100.0000" % prof.max_all
    at80 = [l for l in lines if l.startswith("80,")]
    assert len(at80) == 1
    assert float(at80[0].split(",")[1]) == pytest.approx(96.58, abs=0.3)


def run_cli(*argv):
    return cli.main(list(argv))


def test_cli_generate_deterministic(tmp_path):
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    assert run_cli("generate", "--family", "MFD2", "--out", str(out1)) == 0
    assert run_cli("generate", "--family", "MFD2", "--out", str(out2)) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert len(out1.read_text().splitlines()) == 1 + 512


def test_cli_generate_engines_agree(tmp_path):
    a = tmp_path / "alg.txt"
    s = tmp_path / "sr.txt"
    assert run_cli("generate", "--family", "MFD2", "--out", str(a)) == 0
    assert run_cli("generate", "--family", "MFD2", "--engine", "shiftreg",
                   "--out", str(s)) == 0
    assert a.read_bytes() == s.read_bytes()


def test_cli_generate_iz4_2_line_count(tmp_path):
    out = tmp_path / "iz.txt"
    assert run_cli("generate", "--family", "IZ4_2", "--out", str(out)) == 0
    assert len(out.read_text().splitlines()) == 1 + 1024


def test_cli_verify_fast_suites(capsys):
    assert run_cli("verify", "dual_basis") == 0
    assert run_cli("verify", "graeffe") == 0
    assert run_cli("verify", "value_sets", "--count", "2") == 0
    assert run_cli("verify", "binary_identities", "--count", "2") == 0
    assert run_cli("verify", "theorem1", "--count", "1") == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 5


def test_cli_verify_seed_reproducible(capsys):
    assert run_cli("verify", "value_sets", "--count", "2", "--seed", "7") == 0
    first = capsys.readouterr().out
    assert run_cli("verify", "value_sets", "--count", "2", "--seed", "7") == 0
    assert capsys.readouterr().out == first


def test_cli_profile_and_report(tmp_path, capsys):
    cs = tmp_path / "set.txt"
    rp = tmp_path / "report.json"
    assert run_cli("generate", "--family", "IZ4_2S", "--out", str(cs)) == 0
    assert run_cli("profile", str(cs), "--out", str(rp)) == 0
    out = capsys.readouterr().out
    assert "-29.83 dB" in out and "-20.28 dB" in out and "-33.11 dB" in out
    rep = json.loads(rp.read_text())
    assert rep["profile"]["even_acr"] == 66
    assert rep["environment"]["mode"] == "accelerated"
    csv = (str(rp) + ".cdf.csv")
    assert any(l.startswith("80,96.6") for l in
               open(csv).read().splitlines())


def test_cli_profile_no_odd(tmp_path, capsys):
    cs = tmp_path / "set.txt"
    assert run_cli("generate", "--family", "IZ4_2S", "--out", str(cs)) == 0
    assert run_cli("profile", str(cs), "--no-odd") == 0
    out = capsys.readouterr().out
    assert "Odd" not in out


def test_cli_paircheck(tmp_path, capsys):
    scr = codegen.build_iz4_2s()
    data = codegen.FamilySet("IZ4_2S", scr.codes[:3], dict(scr.metadata))
    data.metadata["count"] = 3
    dp = tmp_path / "data.txt"
    codeset.store_codeset(data, dp)
    pilots = codegen.FamilySet("PILOT", [
        codeset.RawCode("p0", np.repeat(scr.codes[0].bits, 5)),
        codeset.RawCode("p1", np.repeat(scr.codes[1].bits, 5) ^ 1),
        codeset.RawCode("p2", np.repeat(scr.codes[2].bits, 5)),
    ], {"family": "PILOT", "version": "1"})
    pp = tmp_path / "pilot.txt"
    codeset.store_codeset(pilots, pp)
    assert run_cli("paircheck", str(pp), str(dp)) == 1
    out = capsys.readouterr().out
    assert "3 pairs, 3 nonzero" in out
    assert "10230" in out and "-10230" in out
    # count=0 reports an empty result and succeeds
    assert run_cli("paircheck", str(pp), str(dp), "--count", "0") == 0


def test_cli_error_exit_codes(tmp_path):
    assert run_cli("profile", str(tmp_path / "missing.txt")) == 2
    q = tmp_path / "q.txt"
    assert run_cli("generate", "--family", "MFD2", "--out", str(q)) == 0
    assert run_cli("profile", str(q)) == 2   # quaternary set rejected
