import json
from fractions import Fraction

import pytest

from main import run
from utils.exactmath import Interval


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("HYPCONST_PREC", "HYPCONST_MAX_PREC", "HYPCONST_JOBS", "HYPCONST_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cp_siegel_json(capsys):
    code, out, _ = invoke(capsys, "cp", "siegel", "--g", "8", "--p", "21", "--format", "json")
    assert code == 0
    assert out.strip() == '{"g":8,"p":21,"D":"1","C":"1/9"}'


def test_cp_ball(capsys):
    code, out, _ = invoke(capsys, "cp", "ball", "--n", "9", "--p", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 9, "p": 4, "C": "1/2"}


def test_cp_needs_genus(capsys):
    code, _, err = invoke(capsys, "cp", "siegel", "--p", "3")
    assert code == 1
    assert "--g" in err


def test_cp_independent_of_jobs(capsys):
    _, serial, _ = invoke(capsys, "cp", "siegel", "--g", "6", "--p", "12", "--format", "json")
    _, parallel, _ = invoke(capsys, "cp", "siegel", "--g", "6", "--p", "12", "--format", "json", "--jobs", "2")
    assert serial == parallel


def test_level_ag_text(capsys):
    code, out, _ = invoke(capsys, "level", "ag", "--g", "4")
    assert code == 0
    assert "threshold 24, smallest level 25" in out


def test_level_mg_json(capsys):
    code, out, _ = invoke(capsys, "level", "mg", "--g", "7", "--format", "json")
    assert code == 0
    (record,) = [json.loads(line) for line in out.splitlines()]
    assert record["quantity"] == "48/7"
    assert record["level"] == 7
    assert record["published"] == 22
    assert record["agrees"] is False


def test_verify_exact_oracle(capsys):
    code, out, _ = invoke(capsys, "verify", "siegel", "--gmax", "5", "--oracle", "exact")
    assert code == 0
    assert "34 value(s) checked up to g=5, 0 mismatch(es)" in out


def test_verify_reports_mismatch(capsys, monkeypatch):
    monkeypatch.setattr("utils.siegel.table_C", lambda g, p: Fraction(0))
    code, out, err = invoke(capsys, "verify", "siegel", "--gmax", "2", "--format", "json")
    assert code == 3
    assert len(out.splitlines()) == 3
    assert "mismatch" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("cp", "siegel", "--g", "2", "--p", "1", "--bogus"),
        ("cp", "torus", "--p", "1"),
        ("beta", "--a", "1,x", "--r", "3", "--p", "2"),
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 1
    assert "hypconst: error:" in err


def test_help(capsys):
    code, out, _ = invoke(capsys, "--help")
    assert code == 0
    assert "verify" in out


def test_precondition_exit_code(capsys):
    code, _, err = invoke(capsys, "codim", "ag", "--g", "11")
    assert code == 2
    assert "g >= 12" in err


def test_codim(capsys):
    code, out, _ = invoke(capsys, "codim", "ag", "--g", "14", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"g": 14, "codim": 2, "p": 103}


@pytest.mark.parametrize("value", ["abc", "4", "9000"])
def test_bad_precision_setting(capsys, monkeypatch, value):
    monkeypatch.setenv("HYPCONST_PREC", value)
    code, _, err = invoke(capsys, "cp", "ball", "--n", "3", "--p", "1")
    assert code == 1
    assert "HYPCONST_PREC" in err


def test_beta_csv(capsys):
    code, out, _ = invoke(capsys, "beta", "--a", "1,1,2", "--r", "3", "--p", "2", "--format", "csv")
    assert code == 0
    header, row = out.splitlines()
    assert header == '"a","r","p","beta","upper_bound"'
    assert row.startswith('"1,1,2",3,2,"1/3",')


def test_condition_i(capsys):
    code, out, _ = invoke(capsys, "condition-i", "--a", "1,1,2", "--r", "3", "--d", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_alpha_interval(capsys):
    code, out, _ = invoke(capsys, "alpha", "--g", "2", "--bound", "grushevsky", "--prec", "32", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["kind"] == "grushevsky-eff"
    value = Interval.parse(record["value"])
    assert Fraction("0.1581138") < value.lo < value.hi < Fraction("0.1581139")


def test_alpha_ball_defaults_to_bakker_tsimerman(capsys):
    code, out, _ = invoke(capsys, "alpha", "ball", "--n", "9", "--format", "json")
    assert code == 0
    assert json.loads(out)["kind"] == "bakker-tsimerman"


def test_volume_factor(capsys):
    argv = ("volume-factor", "--cp", "1", "--lambda", "1", "--alpha", "2", "--q", "0", "--format", "json")
    code, out, _ = invoke(capsys, *argv)
    assert code == 0
    assert json.loads(out)["factor"] == "[1,1]"


def test_table_grid_layout(capsys):
    code, out, _ = invoke(capsys, "table", "siegel", "--g", "3", "--layout", "grid", "--format", "json")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0] == {"r": 0, "g-k=1": "2", "g-k=2": "1", "g-k=3": "2/3"}
    assert lines[1]["g-k=2"] == "23/16"
    assert lines[2]["g-k=3"] is None


def test_table_markdown(capsys):
    code, out, _ = invoke(capsys, "table", "siegel", "--g", "2", "--format", "md")
    assert code == 0
    assert out.startswith("## H_2, n = 3")
    assert "3 of 3 values match the closed form" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("level", "ag", "--g", "0"),
        ("level", "ht06", "--g", "-1"),
        ("beta", "--a", "1,1,2", "--r", "3", "--p", "2", "--group-order", "0"),
        ("verify", "siegel", "--gmax", "5", "--oracle", "numeric"),
        ("verify", "siegel", "--gmax", "7", "--oracle", "exact"),
    ],
)
def test_out_of_range_input_exit_code(capsys, argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "violates" in err
