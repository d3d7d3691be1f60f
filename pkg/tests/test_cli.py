import json
import subprocess
import sys

import pytest

from oracles import SPOT, TAU
from shellbound import checks
from shellbound.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ptilde_order5(capsys):
    code, out, _ = run(["ptilde", "--order", "5"], capsys)
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[0] == "n,weight,coefficient" and len(rows) == 6
    n, weight, coeff = rows[-1].split(",")
    assert (n, weight) == ("5", "11") and float(coeff) == 11 * TAU**5


def test_ptilde_json(capsys):
    code, out, _ = run(["ptilde", "--order", "3", "--format", "json"], capsys)
    assert code == 0 and [r["weight"] for r in json.loads(out)] == [1, 3, 4]


def test_bounds_psl_lambda0(capsys):
    code, out, _ = run(["bounds", "--class", "psl", "--lambda", "0"], capsys)
    (row,) = json.loads(out)
    assert code == 0 and row["error"] is None
    assert abs(row["report"]["a2_bound"] - 0.413304) < 1e-6
    assert abs(row["report"]["a3_bound"] - 0.479838) < 1e-6


def test_bounds_grid_and_corollary(capsys):
    code, out, _ = run(["bounds", "--class", "fsl", "--gamma", "0.5,1", "--lambda", "0,1", "--mu", "0,2"], capsys)
    rows = json.loads(out)
    assert code == 0 and len(rows) == 8 and {r["spec"]["tag"] for r in rows} == {"FSL"}


def test_bounds_csv(capsys):
    code, out, _ = run(["bounds", "--class", "ksl", "--format", "csv"], capsys)
    header, row = out.strip().split("\n")
    assert header.startswith("tag,gamma,lam,alpha,mu,a2_bound,a3_bound,fs_bound,h_mu,threshold,branch")
    assert abs(float(row.split(",")[5]) - SPOT["KSL_a2"]) < 1e-15


def test_fekete_mu1(capsys):
    code, out, _ = run(["fekete", "--class", "wsl", "--gamma", "1", "--alpha", "0", "--lambda", "0", "--mu", "1"], capsys)
    header, row = out.strip().split("\n")
    mu, h, branch, fs, achieved = row.split(",")
    assert code == 0 and branch == "inner" and float(h) == 0
    assert abs(float(fs) - abs(TAU)) < 1e-15
    assert float(achieved) <= float(fs) + 1e-12


def test_fekete_range(capsys):
    code, out, _ = run(["fekete", "--class", "sl", "--mu-min", "0", "--mu-max", "1", "--mu-step", "0.25"], capsys)
    rows = out.strip().split("\n")[1:]
    assert code == 0 and [float(r.split(",")[0]) for r in rows] == [0, 0.25, 0.5, 0.75, 1.0]


@pytest.mark.parametrize(
    "argv",
    [
        ["nosuch"],
        ["bounds", "--class", "slb", "--lambda", "0.5"],
        ["bounds", "--class", "wsl", "--alpha", "-1"],
        ["bounds", "--gamma", "abc"],
        ["probe", "--gamma", "1,2"],
        ["ptilde", "--order", "0"],
        ["curve", "--r", "1.5"],
        ["fekete", "--mu-min", "1", "--mu-max", "0"],
        ["bounds", "--class", "sl", "--gamma", "2"],
    ],
)
def test_flag_errors_exit_2(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_degenerate_exit_3(capsys):
    code, out, err = run(["bounds", "--class", "wsl", "--gamma", "1,10"], capsys)
    rows = json.loads(out)
    assert code == 3
    assert rows[0]["error"] is None and rows[1]["report"] is None and "radicand" in rows[1]["error"]
    code, _, _ = run(["probe", "--class", "wsl", "--gamma", "10", "--samples", "10"], capsys)
    assert code == 3


def test_probe_grid_mode(capsys):
    code, out, _ = run(["probe", "--class", "sl", "--steps", "8"], capsys)
    d = json.loads(out)
    assert code == 0 and d["mode"] == "grid" and d["ratio_a2"] == pytest.approx(1.0)
    assert list(d["bounds"]) == ["a2_bound", "a3_bound", "fs_bound", "h_mu", "threshold", "branch", "denominator", "M"]


def test_probe_dump(tmp_path, capsys):
    dump = tmp_path / "dump.csv"
    code, _, _ = run(["probe", "--samples", "5", "--dump", str(dump)], capsys)
    assert code == 0 and dump.read_text().startswith("index,a2,a3,fs\n0,")


def test_seed_env_overrides(monkeypatch, capsys):
    _, a, _ = run(["probe", "--samples", "500", "--seed", "9"], capsys)
    monkeypatch.setenv("SHELLBOUND_SEED", "9")
    _, b, _ = run(["probe", "--samples", "500", "--seed", "1"], capsys)
    assert a == b
    monkeypatch.setenv("SHELLBOUND_SEED", "x")
    assert run(["probe", "--samples", "5"], capsys)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["curve", "--count", "64"],
        ["curve", "--r", "0.7", "--count", "64", "--format", "json"],
        ["bounds", "--class", "rsl", "--gamma", "0.5,2", "--lambda", "0,1", "--mu=-1,2", "--format", "csv"],
        ["probe", "--class", "psl", "--lambda", "0.5", "--samples", "3000", "--seed", "4"],
        ["fekete", "--class", "hsl", "--mu-min", "-1", "--mu-max", "2", "--mu-step", "0.1"],
    ],
)
def test_output_is_byte_stable(argv, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main([*argv, "--output", str(a)]) == 0
    assert main([*argv, "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes() and a.read_bytes().endswith(b"\n")


def test_verify_reports_every_check(tmp_path):
    out = tmp_path / "verify.txt"
    code = main(["verify", "--samples", "2000", "--output", str(out)])
    lines = out.read_text().strip().split("\n")
    names = [line.split()[1].rstrip(":") for line in lines[:-1]]
    assert names == list(checks.CHECKS)
    failed = sum(line.startswith("FAIL") for line in lines[:-1])
    assert lines[-1] == f"{len(names) - failed} passed, {failed} failed"
    assert code == (4 if failed else 0)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shellbound", "ptilde", "--order", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("n,weight,coefficient\n1,1,")
