import csv
import io
import json
from fractions import Fraction

import pytest

from hexcactus.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv)
    return code, json.loads(out)


def test_expect():
    code, rec = call_json("expect", "--kind", "hosoya", "--n", "2", "--probs", "1/3,1/3,1/3")
    assert code == 0 and rec["status"] == "ok"
    assert rec["results"]["base"] == ["1", "18", "224"]
    assert rec["inputs"]["probs"] == ["1/3", "1/3", "1/3"]
    assert "error" not in rec


def test_expect_aux_and_round_trip():
    code, rec = call_json("expect", "--kind", "ms", "--n", "4", "--probs", "0.5,0.25,0.25", "--aux")
    assert code == 0
    assert rec["results"]["prime"][0] == "13"
    values = [Fraction(v) for v in rec["results"]["base"]]
    assert [str(v) for v in values] == rec["results"]["base"]


def test_series_dosmal():
    code, rec = call_json("series", "--kind", "ms", "--terms", "3", "--dosmal", "ortho")
    assert code == 0 and rec["results"]["coefficients"] == ["2", "18", "194"]


def test_series_needs_probs_or_case():
    code, rec = call_json("series", "--kind", "ms", "--terms", "3")
    assert code == 1 and rec["status"] == "error"


def test_gf():
    code, rec = call_json("gf", "--kind", "hosoya", "--probs", "1,0,0")
    assert rec["results"]["numerator"] == ["1", "7"]
    assert rec["results"]["denominator"] == ["1", "-11", "-26"]


@pytest.mark.parametrize("engine", ["chain", "brute", "recursive"])
def test_count(engine):
    code, rec = call_json("count", "--kind", "hosoya", "--seq", "o", "--n", "3", "--engine", engine)
    assert code == 0 and rec["results"]["value"] == "2932"


def test_count_requires_explicit_n():
    code, rec = call_json("count", "--kind", "hosoya", "--seq", "")
    assert code == 1 and rec["status"] == "error"
    code, rec = call_json("count", "--kind", "hosoya", "--seq", "oo", "--n", "3")
    assert code == 1


def test_count_engine_limit_is_computation_error():
    code, rec = call_json("count", "--kind", "hosoya", "--seq", "ooo", "--n", "5", "--engine", "brute")
    assert code == 2 and "26" in rec["error"]


def test_bad_probabilities():
    code, rec = call_json("expect", "--kind", "hosoya", "--n", "2", "--probs", "0.3,0.3,0.3")
    assert code == 1 and "sum" in rec["error"]
    code, rec = call_json("expect", "--kind", "hosoya", "--n", "2", "--probs", "a,b,c")
    assert code == 1


def test_graph_dot():
    code, out, _ = call("graph", "--seq", "", "--n", "2", "--format", "dot")
    assert code == 0 and out.startswith("graph ")
    assert out.count("--") == 12
    code, out, _ = call("graph", "--seq", "", "--n", "1", "--aux", "hat", "--pendant", "p")
    assert out.count("--") == 10
    code, rec = call_json("graph", "--seq", "", "--n", "0", "--aux", "prime", "--pendant", "o", "--format", "json")
    assert rec["results"]["vertices"] == 5 and rec["results"]["edges"] == 4
    code, _, _ = call("graph", "--seq", "", "--n", "1", "--aux", "hat")
    assert code == 1


def test_sample_is_deterministic():
    args = ("sample", "--kind", "ms", "--n", "6", "--probs", "1/3,1/3,1/3", "--trials", "200", "--seed", "0x2a")
    assert call(*args) == call(*args)
    code, rec = call_json(*args)
    assert code == 0 and rec["inputs"]["seed"] == 42
    assert int(rec["results"]["sum"]) > 0


def test_asymptotic():
    code, rec = call_json("asymptotic", "--kind", "hosoya", "--probs", "1,0,0", "--n", "60")
    assert code == 0
    assert float(rec["results"]["rel_err_pole"]) <= 1e-6
    assert set(rec["results"]) >= {"n", "kind", "probs", "exact", "pole_approx", "printed", "rel_err_pole", "rel_err_printed"}


def test_csv_output():
    code, out, _ = call("expect", "--kind", "ms", "--n", "2", "--probs", "1,0,0", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "base"], ["0", "1"], ["1", "18"], ["2", "194"]]


def test_verify_passes():
    code, rec = call_json("verify")
    assert code == 0
    assert all(c["passed"] for c in rec["results"]["checks"])


def test_verify_reports_failure(monkeypatch):
    import hexcactus.verify as verify

    monkeypatch.setattr(verify, "CHECKS", verify.CHECKS + [("broken", lambda: (False, "forced"))])
    code, rec = call_json("verify")
    assert code == 2
    assert rec["results"]["checks"][-1] == {"name": "broken", "passed": False, "detail": "forced"}


def test_unknown_command():
    code, rec = call_json("frobnicate")
    assert code == 1
