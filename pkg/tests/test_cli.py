import json
import subprocess
import sys

import pytest

from catwords import cli, genfunc
from catwords.genfunc import Rational, poly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "3")
    assert code == 0
    assert out.splitlines() == ["000", "001", "010", "011", "012"]
    code, out, _ = run(capsys, "enumerate", "-n", "4", "-p", "012")
    assert len(out.splitlines()) == 8
    code, out, _ = run(capsys, "enumerate", "-n", "0")
    assert out == "\n"


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "3", "-p", "000", "--format", "json")
    assert json.loads(out) == ["001", "010", "011", "012"]


@pytest.mark.parametrize("argv", [["enumerate", "-n", "3", "-p", "02"], ["sequence", "count", "-p", "0123", "-N", "3"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_brute_force_soft_bound(capsys):
    code, _, err = run(capsys, "enumerate", "-n", "17")
    assert code == 2 and "--force" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["table"])
    assert exc.value.code == 2


def test_table_plain_reproduces_sums(capsys):
    code, out, _ = run(capsys, "table", "-N", "10")
    assert code == 0
    assert "8064" in out
    assert out.splitlines()[-1].split() == ["sum", "1", "2", "5", "14", "42", "132", "429", "1430", "4862", "16796"]


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "-N", "1", "--format", "csv")
    assert out == "n,k,count\n1,0,1\n"


def test_table_gf_matches_brute(capsys):
    _, brute, _ = run(capsys, "table", "-N", "10", "-p", "021", "--format", "json")
    _, gf, _ = run(capsys, "table", "-N", "10", "-p", "021", "--source", "gf", "--format", "json")
    assert brute == gf


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_table_round_trip(capsys, tmp_path, fmt):
    path = tmp_path / f"t.{fmt}"
    assert cli.main(["table", "-N", "9", "-p", "110", "--format", fmt, "--out", str(path)]) == 0
    assert cli.parse_table(path.read_text(), fmt) == cli.brute_table("110", 9)


def test_output_is_deterministic(capsys):
    first = run(capsys, "table", "-N", "8", "-p", "102", "--format", "json")[1]
    second = run(capsys, "table", "-N", "8", "-p", "102", "--format", "json")[1]
    assert first == second
    values = json.loads(first)["8"].values()
    assert all(isinstance(v, str) and v.isdigit() for v in values)


def test_table_cache(capsys, tmp_path):
    cache = tmp_path / "cache"
    run(capsys, "table", "-N", "5", "--cache-dir", str(cache), "--format", "csv")
    stored = cache / "table-unrestricted-5-brute.json"
    assert stored.exists()
    stored.write_text(json.dumps({"1": {"0": "99"}}))
    _, out, _ = run(capsys, "table", "-N", "5", "--cache-dir", str(cache), "--format", "csv")
    assert out == "n,k,count\n1,0,99\n"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["sequence", "count", "-p", "000", "-N", "5"], "1,1,2,4,9,19"),
        (["sequence", "popularity", "-p", "011", "-N", "6"], "0,0,0,1,3,6,10"),
        (["sequence", "count", "-p", "01", "-N", "3"], "1,1,1,1"),
        (["sequence", "count", "-p", "210", "-N", "5", "--source", "gf"], "1,1,2,5,14,41"),
        (["sequence", "count", "-p", "110", "-N", "5", "--source", "brute"], "1,1,2,5,13,33"),
        (["sequence", "popularity", "-N", "5"], "0,0,0,1,6,28"),
    ],
)
def test_sequence(capsys, argv, expected):
    code, out, _ = run(capsys, *argv, "--format", "csv")
    assert code == 0
    assert out.strip() == expected


def test_sequence_plain(capsys):
    assert run(capsys, "sequence", "count", "-p", "01", "-N", "2")[1] == "1\n1\n1\n"


def test_gf(capsys):
    code, out, _ = run(capsys, "gf", "-p", "011", "-N", "6")
    assert code == 0
    assert out.splitlines()[0] == "011: (1-2x+2x^2-x^3+x^3y)/(1-3x+3x^2-x^3)"


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "-w", "0011212", "--format", "json")
    info = json.loads(out)
    assert info["dyck"] == "uduuduudduuddd"
    assert info["descents"] == info["ddu"] == info["marked_nodes"] == 1
    code, out, _ = run(capsys, "bijection", "--dyck", "uudd")
    assert "word: 01" in out
    assert run(capsys, "bijection", "-w", "02")[0] == 2
    assert run(capsys, "bijection", "--dyck", "du")[0] == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "-N", "3")
    assert code == 0
    assert "FAIL" not in out and "PASS" in out


def test_verify_catches_corrupted_registry(capsys, monkeypatch):
    monkeypatch.setitem(genfunc.REGISTRY, "021", Rational(poly("1-x"), poly("1-2x")))
    code, out, _ = run(capsys, "verify", "-N", "10")
    assert code == 1
    fails = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert fails and all("021" in line for line in fails)
    assert "(n,k)=(3,1)" in fails[0]


def test_verify_missing_snapshots(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "-N", "3", "--snapshots", str(tmp_path / "nope"))
    assert code == 3
    assert "SKIP OEIS" in out
    assert "warning" in err


def test_oeis_check(capsys):
    code, out, _ = run(capsys, "oeis-check", "-N", "25")
    assert code == 0
    assert out.count("PASS") == 13


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "catwords", "enumerate", "-n", "2"], capture_output=True, text=True, check=True
    )
    assert res.stdout == "00\n01\n"
