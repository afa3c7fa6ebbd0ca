import csv
import io
import json
from pathlib import Path

import pytest

from bettibound import cli
from bettibound.betti import MaxBettiResult

DATA = Path(__file__).parent / "data"
WORKED_FLAGS = ["--variables", "5", "--hilbert-polynomial", "49", "--hf-lower", ",,,,,,41",
                "--hf-upper", ",,,,,,41", "--diff-lower", ",,,8,8,5,5"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_positional_gaps():
    assert cli.parse_bound_list(",,,8,8,5,5") == [None, None, None, 8, 8, 5, 5]
    assert cli.parse_bound_list("{,,,8,8,5,5}") == [None, None, None, 8, 8, 5, 5]
    assert cli.parse_bound_list("6:41, 9:3") == {6: 41, 9: 3}
    assert cli.parse_bound_list("") == []


def test_polynomial_parsing():
    assert cli.parse_polynomial(49)(100) == 49
    p = cli.parse_polynomial("3,-6,175")
    assert [p(d) for d in range(3)] == [175, 172, 175]
    assert cli.parse_polynomial(["1/2", "3/2", "1"])(2) == 6
    with pytest.raises(cli.RequestError):
        cli.parse_polynomial(True)


def test_golden_json(capsys):
    code, out, _ = run(capsys, "solve", "--request", str(DATA / "worked_request.json"), "--json")
    assert code == 0
    got = json.loads(out)
    assert got.pop("timing_ms") >= 0
    assert got == json.loads((DATA / "worked_response.json").read_text())


def test_flags_match_request_file(capsys):
    code, out, _ = run(capsys, "solve", *WORKED_FLAGS, "--results", "all", "--json")
    assert code == 0
    got = json.loads(out)
    got.pop("timing_ms")
    assert got == json.loads((DATA / "worked_response.json").read_text())


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "solve", *WORKED_FLAGS, "--results", "one", "--json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    assert doc["hilbert_functions"] == [[1, 5, 11, 21, 30, 36, 41, 46, 49, 49]]
    assert doc["spec"]["G"][6] == doc["spec"]["F"][6] == 41
    assert doc["spec"]["horizon"] == 49


def test_human_output(capsys):
    code, out, _ = run(capsys, "solve", *WORKED_FLAGS)
    assert code == 0
    lines = dict(line.split(":", 1) for line in out.splitlines())
    assert lines["betti upper bound"].strip() == "{23, 54, 47, 14}"
    assert lines["maximum betti sum"].strip() == "137"
    assert lines["realizable"].strip() == "false"
    assert lines["algorithm"].strip() == "complete"


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "solve", "--variables", "4", "--hilbert-polynomial", "6",
                       "--results", "all", "--verify", "--json")
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_exit_code_inconsistent(capsys):
    code, _, err = run(capsys, "solve", "--variables", "4", "--hilbert-polynomial", "6",
                       "--hf-lower", ",,,9", "--hf-upper", ",,,5")
    assert code == 2
    assert "degree 3" in err


@pytest.mark.parametrize("argv", [
    ["solve", "--variables", "2"],
    ["solve", "--variables", "4", "--hilbert-polynomial", "1/2,0"],
    ["solve", "--variables", "4", "--hilbert-polynomial=-1,4"],
    ["solve", "--request", "/nonexistent/request.json"],
])
def test_exit_code_bad_input(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_exit_code_empty(capsys):
    code, _, err = run(capsys, "solve", "--variables", "4", "--hilbert-polynomial", "7",
                       "--diff-upper", "1,1,1,1", "--hf-lower", ",,,7", "--hf-upper", ",,,7")
    assert code == 3
    assert "empty" in err


def test_exit_code_mismatch(capsys, monkeypatch):
    fake = MaxBettiResult((0, 0, 0), 0, True)
    monkeypatch.setattr(cli, "brute_force_result", lambda *a, **k: fake)
    code, out, err = run(capsys, "solve", "--variables", "4", "--hilbert-polynomial", "5", "--verify")
    assert code == 4
    assert "disagree" in err


def test_exit_code_too_large(capsys):
    code, _, err = run(capsys, "solve", "--variables", "5", "--hilbert-polynomial", "30",
                       "--verify", "--verify-ceiling", "50")
    assert code == 5


def test_request_file_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    assert run(capsys, "solve", "--request", str(bad))[0] == 2
    missing = tmp_path / "missing.json"
    missing.write_text("{}")
    assert run(capsys, "solve", "--request", str(missing))[0] == 2


def test_ideal_command(capsys):
    code, out, _ = run(capsys, "ideal", "--variables", "5", "--hilbert-function", "1,5,11,21,30,36,41,46,49,49")
    assert code == 0
    assert out.splitlines()[0].startswith("ideal(x1^2, x1*x2,")
    assert "total: 1 22 54 47 14" in " ".join(out.split())
    code, out, _ = run(capsys, "ideal", "--variables", "5", "--hilbert-function",
                       "1,5,11,21,30,36,41,46,49,49", "--json")
    doc = json.loads(out)
    assert len(doc["generators"]) == 22
    assert doc["betti_totals"] == [1, 22, 54, 47, 14]
    assert doc["generators"][0] == [2, 0, 0, 0, 0]


def test_ideal_command_small_and_errors(capsys):
    code, out, _ = run(capsys, "ideal", "--variables", "3", "--hilbert-function", "1,2,3,3")
    assert code == 0 and out.splitlines()[0] == "ideal(x1, x2^3)"
    assert run(capsys, "ideal", "--variables", "3", "--hilbert-function", "1,10")[0] == 2
    assert run(capsys, "ideal", "--variables", "3", "--hilbert-function", "1,,3")[0] == 2


def test_bench_csv_and_plot(capsys, tmp_path):
    png = tmp_path / "timing.png"
    code, out, _ = run(capsys, "bench", "--min", "0", "--max", "6", "--step", "3", "--plot", str(png))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["polynomial"], r["algorithm"]) for r in rows] == [
        (p, a) for p in ("0", "3", "6") for a in ("simplified", "complete")]
    # with no upper bounds both algorithms reach the same bound
    assert rows[4]["betti_upper_bound"] == rows[5]["betti_upper_bound"]
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_bench_to_file(capsys, tmp_path):
    dest = tmp_path / "bench.csv"
    code, out, _ = run(capsys, "bench", "--max", "2", "--algorithm", "complete", "--output", str(dest))
    assert code == 0 and out == ""
    assert len(dest.read_text().splitlines()) == 4
