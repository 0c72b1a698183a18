import json
import os

import pytest

from minusone import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_list_counts(capsys):
    code, out = run(capsys, "list")
    assert code == 0
    assert "21 entries" in out

    code, out = run(capsys, "list", "--scheme-only")
    assert "15 entries" in out

    code, out = run(capsys, "list", "--format", "json")
    entries = json.loads(out)
    assert isinstance(entries, list) and len(entries) == 21
    assert all("admissible" in e and "anchor" in e for e in entries)


def test_tabulate_hermite(capsys):
    code, out = run(capsys, "tabulate", "--family", "hermite", "--n", "3")
    assert code == 0
    us = [line.split("u_n =")[1].strip() for line in out.splitlines() if "u_n =" in line]
    assert us[0] == "-"
    assert us[1].startswith("0.5")
    assert us[2].startswith("1.0")
    assert us[3].startswith("1.5")


def test_tabulate_chihara_p1(capsys):
    code, out = run(capsys, "tabulate", "--family", "chihara",
                    "--params", "alpha=0.5,beta=1.5,gamma=0.25", "--n", "1")
    assert code == 0
    assert "-0.25, 1.0" in out


def test_tabulate_ccbi_complex(capsys):
    code, out = run(capsys, "tabulate", "--family", "ccbi",
                    "--params", "a1=0.75,b1=0.5,a2=1.25,b2=0.3", "--n", "3")
    assert code == 0
    assert "j" in out      # complex u_n rendered with an explicit imaginary part


def test_tabulate_unknown_family_usage_error(capsys):
    code, _ = run(capsys, "tabulate", "--family", "not-a-family", "--n", "2")
    assert code == cli.EXIT_USAGE


def test_verify_family_hermite(capsys):
    code, out = run(capsys, "verify", "--family", "hermite")
    assert code == 0
    assert "summary:" in out and "0 failed" in out


def test_verify_edge(capsys):
    code, out = run(capsys, "verify", "--edge", "gen-hermite:hermite", "--format", "json",
                    "--no-timestamp")
    assert code == 0
    report = json.loads(out)
    assert report["results"][0]["check"] == "exact"
    assert report["results"][0]["status"] == "pass"
    assert report["results"][0]["anchor"]


def test_verify_unknown_edge_usage(capsys):
    code, _ = run(capsys, "verify", "--edge", "hermite:gegenbauer")
    assert code == cli.EXIT_USAGE


def test_verify_json_deterministic(capsys):
    args = ("verify", "--family", "gegenbauer", "--format", "json", "--no-timestamp",
            "--checks", "closed-form,favard")
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2
    report = json.loads(out1)
    for r in report["results"]:
        assert set(r) == {"id", "check", "status", "residual", "tolerance", "anchor", "notes"}


def test_digits_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("MINUS_ONE_DIGITS", "20")
    code, out = run(capsys, "tabulate", "--family", "hermite", "--n", "1", "--format", "json")
    assert json.loads(out)["digits"] == 20
    code, out = run(capsys, "tabulate", "--family", "hermite", "--n", "1", "--format", "json",
                    "--digits", "30")
    assert json.loads(out)["digits"] == 30


def test_export_dot_and_json(capsys, tmp_path):
    code, out = run(capsys, "export", "--format", "dot")
    assert code == 0
    node_lines = [l for l in out.splitlines() if "[label=" in l and "->" not in l]
    assert len(node_lines) == 15

    path = tmp_path / "scheme.json"
    code, _ = run(capsys, "export", "--format", "json", "--output", str(path))
    payload = json.loads(path.read_text())
    assert len(payload["edges"]) == 34
    assert all("anchor" in e for e in payload["edges"])


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify"])          # missing required scope
    assert exc.value.code == cli.EXIT_USAGE


def test_verification_failure_exit_code(capsys):
    # outside the admissible region the Favard scan legitimately fails
    code, out = run(capsys, "verify", "--family", "gen-gegenbauer",
                    "--params", "alpha=0.6,beta=-1.5", "--checks", "favard")
    assert code == cli.EXIT_FAIL
    assert "FAIL" in out


def test_inconclusive_exit_code(capsys, monkeypatch):
    # a non-converged quadrature must surface as the distinct exit code 2
    from minusone import orthogonality

    real_gram = orthogonality.gram

    def fake_gram(*a, **kw):
        rep = real_gram(*a, **kw)
        rep["converged"] = False
        return rep

    monkeypatch.setattr(cli.orthogonality, "gram", fake_gram)
    code, out = run(capsys, "verify", "--family", "hermite", "--checks", "orthogonality")
    assert code == cli.EXIT_INCONCLUSIVE
    assert "INCONCLUSIVE" in out.upper()
