import json
import subprocess
import sys

import pytest

from necklace_bound.cli import main
from necklace_bound.core import parse_word


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_binary(capsys):
    code, out, _ = run(capsys, "count", "-n", "6", "-d", "3", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["N"] == "4" and rec["rhs"] == "4" and rec["rhs_terms"] == "2+2" and rec["gap"] == "0"


def test_count_content(capsys):
    code, out, _ = run(capsys, "count", "--content", "1,1,1", "--format", "json")
    rec = json.loads(out)
    assert (rec["N"], rec["rhs"], rec["gap"]) == ("2", "3", "1")


def test_count_exceptional_pair(capsys):
    # N(2,1) = 1 against L(1,1) + L(1,0) = 1 + 1
    _, out, _ = run(capsys, "count", "-n", "2", "-d", "1", "--format", "json")
    rec = json.loads(out)
    assert (rec["N"], rec["rhs_terms"], rec["gap"]) == ("1", "1+1", "1")


def test_count_text_and_zero_entry(capsys):
    code, out, _ = run(capsys, "count", "--content", "4,0")
    assert code == 0
    assert "N=1" in out and "L=0" in out and "rhs" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ["count"],
        ["count", "--content", "3"],
        ["count", "-n", "3", "-d", "5"],
        ["count", "--content", "1,1", "-n", "2"],
        ["enumerate", "--content", "20,20", "--max-n", "30"],
        ["map", "0011"],
        ["map", "0110"],
        ["map", "01x"],
        ["verify", "injectivity", "--max-n", "40"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_map_stable_diagnostic(capsys):
    _, _, err = run(capsys, "map", "0011")
    assert "stable" in err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--content", "3,3", "--kind", "necklace")
    assert code == 0
    assert out.split() == ["000111", "001011", "001101", "010101"]


def test_enumerate_json_records(capsys):
    _, out, _ = run(capsys, "enumerate", "-n", "6", "-d", "3", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["stable"] for r in recs] == [True, True, False, False]


@pytest.mark.parametrize("content, kind, expected", [("2,2", "lyndon", ["0011"]), ("1,0", "lyndon", ["0"])])
def test_enumerate_small(capsys, content, kind, expected):
    _, out, _ = run(capsys, "enumerate", "--content", content, "--kind", kind)
    assert out.split() == expected


def test_enumerate_large_alphabet_round_trip(capsys):
    # k = 11 switches the word encoding to comma-separated symbols
    c = ",".join(["2", "1"] + ["0"] * 8 + ["1"])
    _, out, _ = run(capsys, "enumerate", "--content", c, "--kind", "necklace")
    lines = out.splitlines()
    assert lines == ["0,0,1,10", "0,0,10,1", "0,1,0,10"]
    assert [parse_word(s, 11) for s in lines] == [(0, 0, 1, 10), (0, 0, 10, 1), (0, 1, 0, 10)]


@pytest.mark.parametrize(
    "word, branch, image",
    [("0101", "z=i", "011"), ("01120112", "z<i", "0112211")],
)
def test_map(capsys, word, branch, image):
    code, out, _ = run(capsys, "map", word, "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["branch"] == branch and rec["image"] == image


def test_map_decomposition_fields(capsys):
    _, out, _ = run(capsys, "map", "01120112", "--format", "json")
    rec = json.loads(out)
    assert (rec["p"], rec["j"], rec["i"], rec["z"], rec["x"]) == (4, 1, 3, 1, 2)


def test_verify_bound(capsys):
    code, out, _ = run(capsys, "verify", "bound", "--max-n", "20", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["status"] == "pass" and rec["checked"] == 190


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "injectivity", "--max-n", "12", "--k", "2"],
        ["verify", "equality", "--max-n", "30"],
        ["verify", "witnesses", "--max-n", "8"],
        ["verify", "oracle", "--max-n", "8", "--k", "3"],
    ],
)
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.startswith("PASS")


def test_verify_equality_lists_sporadic_pairs(capsys):
    _, out, _ = run(capsys, "verify", "equality", "--max-n", "30")
    assert "[(6, 3), (7, 3), (7, 4), (8, 4), (9, 3), (9, 6)]" in out


def test_verify_failure_exit_1(capsys, monkeypatch):
    import necklace_bound.verify as verify

    monkeypatch.setattr(verify, "in_equality_set", lambda n, d: True)
    code, out, _ = run(capsys, "verify", "equality", "--max-n", "8")
    assert code == 1
    assert out.startswith("FAIL")


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "12")
    rows = [line.split("\t") for line in out.splitlines()]
    header, body = rows[0], rows[1:]
    assert header == ["n", "d", "N", "L(n-1,d)", "L(n-1,d-1)", "gap", "equality"]
    assert len(body) == sum(n - 1 for n in range(2, 13))
    by_pair = {(int(r[0]), int(r[1])): r for r in body}
    assert by_pair[(6, 3)][5:] == ["0", "true"]
    assert by_pair[(2, 1)][6] == "false"
    assert int(by_pair[(12, 6)][5]) > 0


def test_table_json(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "9", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert all(r["equality"] == r["classified_equality"] for r in recs)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "necklace_bound", "count", "--content", "3,3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert "N=4" in proc.stdout
