import json

import pytest

from symm_mp import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_plan_torus_json(capsys):
    code, out = run(["plan", "torus", "--x", "0.3,0.7", "--z", "1.0,2.0"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["domain"] == "D1"
    assert data["ok"] is True
    assert data["start_error"] <= 1e-12


def test_plan_torus_csv(capsys):
    code, out = run(
        ["plan", "torus", "--x", "0.3,0.7", "--z", "1.0,2.0", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,c0,c1"
    assert len(lines) == 102  # header + default 101 samples
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert float(first[1]) == pytest.approx(0.3)


def test_plan_sphere(capsys):
    code, out = run(
        ["plan", "sphere", "--n", "2", "--p", "1,0,0", "--l", "0,0.6,0.8"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["n"] == 2


def test_plan_wrong_arity(capsys):
    code, _ = run(["plan", "torus", "--x", "0.3", "--z", "1,2"], capsys)
    assert code == 2


def test_unparseable_floats_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["plan", "torus", "--x", "a,b", "--z", "1,2"])
    assert e.value.code == 2


def test_cuplength(capsys):
    code, out = run(["cuplength"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["length"] == 3
    assert len(data["witness"]) == 3
    assert data["product"] != "0"


def test_verify_sections(capsys):
    code, out = run(
        ["verify", "--suite", "sections", "--samples", "200", "--seed", "0"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True


def test_verify_identities_sphere(capsys):
    code, out = run(
        [
            "verify",
            "--suite",
            "identities",
            "--space",
            "sphere",
            "--n",
            "3",
            "--samples",
            "50",
        ],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["suite"] == "identities"


def test_identities_subcommand(capsys):
    code, out = run(["identities", "--count", "30", "--seed", "4"], capsys)
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("SYMM_MP_SEED", "123")
    code, out = run(["identities", "--count", "10"], capsys)
    assert code == 0
    assert json.loads(out)["seed"] == 123


def test_output_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    code, out = run(
        ["identities", "--count", "10", "--seed", "1", "--out", str(dest)],
        capsys,
    )
    assert code == 0
    assert out == ""
    assert json.loads(dest.read_text())["passed"] is True


def test_deterministic_output(capsys):
    _, a = run(["verify", "--suite", "sections", "--samples", "100", "--seed", "9"], capsys)
    _, b = run(["verify", "--suite", "sections", "--samples", "100", "--seed", "9"], capsys)
    assert a == b
