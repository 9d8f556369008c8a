import csv
import io
import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eccbounds import graph6
from eccbounds.bounds import evaluate
from eccbounds.cli import parse_edges, parse_params, run_cli
from eccbounds.constructions import kite
from eccbounds.report import (
    Report,
    decode_value,
    encode_value,
    from_json,
    parse_csv_number,
    table_rows,
    to_csv,
    to_json,
)


def cli(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    status = run_cli(list(argv), stdout=out)
    return status, out.getvalue()


def json_payload(*argv):
    status, text = cli(*argv, "--format", "json")
    assert status in (0, 1)
    return status, json.loads(text)


def test_compute_example():
    status, doc = json_payload("compute", "--edges", "0-1,1-2,2-3")
    assert status == 0 and doc["schema_version"] == 1 and doc["payload_kind"] == "index_reports"
    row = doc["payload"][0]
    assert row["index"]["sigma0"] == {"num": 5, "den": 2, "decimal": "2.5"}
    assert (row["index"]["sigma1"], row["index"]["sigma2"]) == (26, 16)
    assert row["invariants"] == {"chromatic": 2, "clique": 2, "matching": 2, "dominating": 0}


def test_compute_text_shows_decimal():
    status, text = cli("compute", "--edges", "0-1,1-2,2-3")
    assert status == 0 and "5/2(2.5)" in text


def test_compute_from_stdin_and_file(monkeypatch, tmp_path):
    status, text = cli("compute", "--format", "csv", stdin="Bw\nCh\n", monkeypatch=monkeypatch)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert status == 0 and [r["sigma2"] for r in rows] == ["3", "16"]
    f = tmp_path / "g.g6"
    f.write_text("Bw\n")
    status, text = cli("compute", "--file", str(f), "--format", "csv")
    assert status == 0 and "Bw" in text


def test_compute_disconnected_is_data():
    status, doc = json_payload("compute", "--edges", "0-1,2-3")
    assert status == 0 and doc["payload"][0]["connected"] is False and doc["payload"][0]["index"] is None


def test_generate_example():
    status, doc = json_payload("generate", "--family", "kite:n=5,d=3")
    rec = doc["payload"][0]
    assert rec["graph6"] == graph6.encode(kite(5, 3).graph)
    assert rec["predicted"]["sigma2"] == 31 == rec["observed"]["sigma2"]


def test_bound_example():
    status, text = cli("bound", "--id", "thm_sigma2_nmd_lower", "--params", "n=7,m=7,d=4", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(text)))
    assert status == 0 and row["value"] == "57" and row["exceptional"] == "true"


def test_verify_example_exit_zero():
    status, doc = json_payload("verify", "--id", "lemma_tree_max", "--nmax", "7")
    assert status == 0 and doc["payload"]["violation_count"] == 0


def test_verify_exit_one_on_violation(monkeypatch):
    import eccbounds.cli as cli_mod
    from eccbounds.verifier import VerificationRun

    fake = VerificationRun("obs_sandwich", (1, 3), "labeled", 1, 10, 30, [{"cell": [3], "graph6": "Bw",
                           "observed": 1, "bound": 0}], 1, [], [], True, [], [], True, [])
    monkeypatch.setattr(cli_mod, "verify_bound", lambda *a, **k: fake)
    status, _ = cli("verify", "--id", "obs_sandwich", "--nmax", "3")
    assert status == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--id", "nope"],
        ["bound", "--id", "nope"],
        ["bound", "--id", "thm_sigma2_nmd_lower", "--params", "n=7"],
        ["bound", "--id", "thm_sigma2_nmd_lower", "--params", "n=seven"],
        ["compute", "--edges", "0-a"],
        ["compute", "--edges", "0-0"],
        ["compute", "--graph6", "B"],
        ["generate", "--family", "kite:n=3,d=9"],
        ["generate", "--family", "nosuch:n=3"],
        ["scan", "--experiment", "dn", "--n", "12"],
        ["scan", "--experiment", "cycletail", "--mode", "exhaustive"],
        ["verify", "--id", "obs_sandwich", "--nmax", "12"],
        ["verify", "--id", "obs_sandwich", "--jobs", "0"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    status, _ = cli(*argv)
    assert status == 2


def test_scan_commands():
    status, doc = json_payload("scan", "--experiment", "cycletail", "--n-list", "8")
    rows = doc["payload"]["rows"]
    r2 = next(r for r in rows if r["point"]["r"] == 2)
    assert r2["extra"]["h_bfs"] == 31 and r2["extra"]["tree_value"] == 34
    status, doc = json_payload("scan", "--experiment", "dn", "--n", "6")
    assert doc["payload"]["summary"]["d_n"]["sigma1"] == 3
    status, doc = json_payload("scan", "--experiment", "sigma2max", "--mode", "construction", "--n-list", "60", "100")
    assert [r["extra"]["d_star"] for r in doc["payload"]["rows"]] == [32, 52]


def test_formats_command(tmp_path):
    status, text = cli("formats", "--edges", "0-1,1-2,0-2")
    assert status == 0 and text.strip() == "Bw"
    status, text = cli("formats", "--family", "path:n=4", "--to", "edges")
    assert text.strip() == "4 0-1,1-2,2-3"
    status, text = cli("formats", "--list")
    assert "kite:n,d" in text and "thm_sigma2_nmd_lower" in text
    out = tmp_path / "x.txt"
    status, _ = cli("formats", "--family", "cycle:n=4", "--to", "canonical", "--output", str(out))
    assert status == 0 and out.read_text().strip()


def test_output_file(tmp_path):
    out = tmp_path / "r.json"
    status, text = cli("bound", "--id", "lemma_ore_max_edges", "--params", "n=6,d=3", "--format", "json",
                       "--output", str(out))
    assert status == 0 and text == ""
    assert from_json(out.read_text()).payload.value == 10


def _reports():
    yield Report(["compute"], "index_reports", [])
    for argv in (
        ["compute", "--edges", "0-1,1-2,2-3"],
        ["generate", "--family", "kite:n=7,d=4", "--family", "diam_lower:i=1,n=6,d=4"],
        ["bound", "--id", "thm_sigma2_chromatic_lower", "--params", "n=7,k=6"],
        ["verify", "--id", "thm_sigma2_matching_lower", "--nmax", "5"],
        ["scan", "--experiment", "dn", "--n", "5"],
        ["scan", "--experiment", "sigma2max", "--n", "5"],
        ["scan", "--experiment", "cycletail", "--n-list", "9", "12"],
    ):
        status, text = cli(*argv, "--format", "json")
        yield from_json(text)


def test_json_round_trip_is_lossless():
    for rep in _reports():
        again = from_json(to_json(rep))
        assert again == rep
        assert to_json(again) == to_json(rep)


def test_csv_and_json_values_agree():
    for rep in _reports():
        header, rows = table_rows(rep.payload_kind, rep.payload)
        parsed = list(csv.reader(io.StringIO(to_csv(rep))))
        assert parsed[0] == header
        for raw, text_row in zip(rows, parsed[1:]):
            for value, cell in zip(raw, text_row):
                if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                    continue
                assert parse_csv_number(cell) == value


def test_schema_version_checked():
    doc = json.loads(to_json(Report(["x"], "index_reports", [])))
    doc["schema_version"] = 2
    with pytest.raises(ValueError):
        from_json(json.dumps(doc))


def test_fractions_never_float_only():
    doc = json.loads(to_json(Report(["bound"], "bound_report", evaluate("obs_dominating_lower", i=0, n=7, s=2))))
    assert doc["payload"]["value"] == {"num": 12, "den": 7, "decimal": "1.71428571429"}


@given(st.fractions(max_denominator=10**6) | st.integers(-10**12, 10**12))
def test_value_codec_round_trip(x):
    assert decode_value(json.loads(json.dumps(encode_value(x)))) == x
    text = str(x.numerator) if isinstance(x, Fraction) and x.denominator == 1 else (
        f"{x.numerator}/{x.denominator}" if isinstance(x, Fraction) else str(x))
    assert parse_csv_number(text) == x


def test_parsers():
    assert parse_edges("0-1 1-2,2-3").m == 3
    assert parse_edges("0-1", n=5).n == 5
    assert parse_params("n=7; d=4") == {"n": 7, "d": 4}
