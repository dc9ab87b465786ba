"""The batch front-end: subcommands, exit codes, JSON report determinism."""

import json

import pytest

from rankin.cli import main
from rankin.forms import bundled_path


def test_qexp_prints_constant_term(capsys):
    rc = main(["qexp", "--family", "F", "--k", "2", "--alpha", "1/5",
               "--prec", "10"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith("(-1/12)")
    assert out.count("q^") >= 9


def test_verify_norm_relations_core(capsys):
    rc = main(["verify-norm-relations"])
    out = capsys.readouterr().out
    assert rc == 0
    for ident in ("sp-rewrite", "higher-rewrite", "pstab-formula",
                  "A-ell-congruence", "composite-norms-a", "composite-norms-b",
                  "corestriction-specialization", "twist-system"):
        assert f"[PASS] {ident}" in out


def test_verify_single_identity(capsys):
    rc = main(["verify-norm-relations", "--identity", "sp-rewrite"])
    out = capsys.readouterr().out
    assert rc == 0 and out.count("[PASS]") == 1


def test_unknown_identity_is_usage_error(capsys):
    rc = main(["verify-norm-relations", "--identity", "no-such-identity"])
    assert rc == 2


def test_dist_check(capsys):
    rc = main(["dist-check", "--m", "2", "--N", "5", "--c", "7",
               "--prec", "40"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.count("[PASS]") == 3


def test_hecke_check(capsys):
    rc = main(["hecke-check", "--level", "5", "--prime", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "[PASS] hecke-square" in out and "[PASS] iwahori-table" in out


def test_otsuki_check(capsys):
    rc = main(["otsuki-check", "--m", "4", "--ell", "3"])
    assert rc == 0


def test_euler_factor_subcommand(capsys):
    f = str(bundled_path("f11.eigenform"))
    g = str(bundled_path("g26.eigenform"))
    rc = main(["euler-factor", "--f", f, "--g", g, "--prime", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "local factor at 3" in out and "PASS" in out


def test_missing_data_file_exit_3(capsys):
    g = str(bundled_path("g26.eigenform"))
    rc = main(["euler-factor", "--f", "/no/such/file", "--g", g,
               "--prime", "3"])
    assert rc == 3


def test_corrupt_data_file_exit_3(tmp_path, capsys):
    bad = tmp_path / "bad.eigenform"
    bad.write_text("level=11 weight=2 charmod=11 field=t\n1: 1\n2: -2\n"
                   "3: -1\n4: 5\n")
    g = str(bundled_path("g26.eigenform"))
    rc = main(["euler-factor", "--f", str(bad), "--g", g, "--prime", "3"])
    assert rc == 3


def test_json_report_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        rc = main(["verify-norm-relations", "--identity", "sp-rewrite",
                   "--identity", "twist-system", "--json", str(p)])
        assert rc == 0
        capsys.readouterr()
    reports = []
    for p in paths:
        rep = json.loads(p.read_text())
        assert rep["schema"] == 1
        for e in rep["entries"]:
            e.pop("ms")
        reports.append(json.dumps(rep, sort_keys=True))
    assert reports[0] == reports[1]


def test_example_subcommand(capsys):
    rc = main(["example-7-5"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "x^4 + (6/17)x^3 + (-21/17)x^2 + (6/17)x + 1" in out
    assert "scan" in out and "[5]" in out
