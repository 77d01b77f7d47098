import csv
import io
import json

import pytest

from nsg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "10,11,26")
    assert code == 0
    payload = json.loads(out)
    assert payload["c"] == 50 and payload["k"] == 8
    assert payload["e"] == 10 and payload["edim"] == 3

    code, out, _ = run(capsys, "invariants", "4,7,13")
    payload = json.loads(out)
    assert payload["b"] == 1 and payload["ts"] == [2, 2, 1, 2]
    assert set(payload) == {"e", "c", "delta", "n", "r", "b", "k", "s", "edim", "ts"}


def test_invariants_flag_forms(capsys):
    code, out, _ = run(capsys, "invariants", "--gens", "3,5,7")
    assert code == 0 and json.loads(out)["c"] == 5
    code, out, _ = run(capsys, "invariants", "--gaps", "1,2,4")
    assert code == 0 and json.loads(out)["c"] == 5
    code, out, _ = run(capsys, "invariants", "gaps:1,2,4")
    assert code == 0 and json.loads(out)["c"] == 5


def test_error_exit_codes(capsys):
    code, _, err = run(capsys, "invariants", "1,2")
    assert code == 3 and "RegularSemigroup" in err
    code, _, err = run(capsys, "invariants", "4,6")
    assert code == 3 and "GcdNotOne" in err
    code, _, err = run(capsys, "invariants", "4;6")
    assert code == 2
    code, _, err = run(capsys, "invariants")
    assert code == 2


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "10,11,26")
    payload = json.loads(out)
    assert payload["p"] == 4 and payload["h"] == 0 and payload["k"] == 8
    assert payload["ys"] == [11, 22, 26, 33, 37, 44, 48]
    assert payload["ls"] == [3, 2, 2, 1, 1, 0, 0]

    code, out, _ = run(capsys, "decompose", "10,11,26", "--format", "text")
    assert "H1 = {11, 21, 31, 41}" in out and "H7 = {48}" in out

    code, out, _ = run(capsys, "decompose", "4,5", "--format", "text")
    assert "{0, 4, 8, 12 ->}" in out and "H1 = {5, 9}" in out and "H2 = {10}" in out

    code, out, _ = run(capsys, "decompose", "3,5,7", "--format", "text")
    assert "no towers" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "4,5")
    assert json.loads(out)["label"] == "thm3.1/gorenstein"

    code, out, _ = run(capsys, "classify", "5,12,16,18,19")
    payload = json.loads(out)
    assert payload["label"] == "thm3.4/1"
    assert payload["matches"][0]["branch"] == "2y>=c+e"

    code, out, _ = run(capsys, "classify", "10,11,26")
    payload = json.loads(out)
    assert payload["label"] == "unclassified" and payload["q"] == 13


def test_enumerate_counts(capsys):
    code, out, err = run(capsys, "enumerate", "--max-genus", "8")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out), delimiter=";"))
    assert rows[0] == [
        "generators", "e", "c", "genus", "n", "r", "b", "k", "p", "h",
        "type_sequence", "label",
    ]
    assert len(rows) == 1 + 155
    assert "enumerated 155 semigroups" in err

    code, out, _ = run(capsys, "enumerate", "--max-genus", "1")
    rows = list(csv.reader(io.StringIO(out), delimiter=";"))
    assert len(rows) == 2
    assert rows[1][0] == "2,3" and rows[1][6] == "0"  # b = 0


def test_enumerate_filter(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--max-conductor", "12", "--filter", "b=1",
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out), delimiter=";"))[1:]
    gens = {row[0] for row in rows}
    assert {"4,7,13", "3,5,7", "4,7,9,10"} <= gens
    assert all(row[6] == "1" for row in rows)

    code, out, _ = run(
        capsys, "enumerate", "--max-genus", "8", "--filter", "b=2 and e<=5",
        "--format", "json",
    )
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines and all(row["b"] == 2 and row["e"] <= 5 for row in lines)


def test_enumerate_errors(capsys):
    code, _, err = run(capsys, "enumerate", "--max-genus", "4", "--filter", "zz!!")
    assert code == 2 and "bad filter" in err
    code, _, err = run(capsys, "enumerate", "--max-genus", "4", "--max-conductor", "9")
    assert code == 2
    code, _, err = run(capsys, "enumerate")
    assert code == 2


def test_enumerate_to_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, err = run(
        capsys, "enumerate", "--max-genus", "3", "--out", str(target),
    )
    assert code == 0 and out == ""
    rows = list(csv.reader(target.open(), delimiter=";"))
    assert len(rows) == 1 + 7


def test_verify_honors_nsg_threads(monkeypatch, capsys):
    monkeypatch.setenv("NSG_THREADS", "1")
    code, out, _ = run(capsys, "verify", "prop1.2", "--max-genus", "6")
    assert code == 0 and "verified" in out


def test_verify_cli(capsys):
    code, out, _ = run(capsys, "verify", "thm3.5", "--max-genus", "8", "--workers", "1")
    assert code == 0 and "verified" in out

    code, out, _ = run(
        capsys, "verify", "cor3.8", "--max-genus", "8", "--workers", "1",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True and payload["checked"] == 155

    code, _, err = run(capsys, "verify", "nosuch", "--max-genus", "4")
    assert code == 2 and "unknown theorem" in err


def test_cli_round_trip_matches_library(capsys):
    from nsg import from_generators, invariant_report

    code, out, _ = run(capsys, "invariants", "6,11,13,14,15,16")
    payload = json.loads(out)
    rep = invariant_report(from_generators([6, 11, 13, 14, 15, 16]))
    assert payload["e"] == rep.e and payload["b"] == rep.b and payload["k"] == rep.k
    assert all(isinstance(v, int) for k, v in payload.items() if k != "ts")
