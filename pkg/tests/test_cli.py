import csv
import io
import json
from fractions import Fraction as F

import pytest
from click.testing import CliRunner
from hypothesis import given, settings, strategies as st

from degenhyper.cli import CSV_HEADER, cli
from degenhyper.hypergeometric import EXACT
from degenhyper.hypernumbers import NumberQuery, evaluate


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args, env=None):
    return runner.invoke(cli, list(args), env=env)


def test_eval_examples(runner):
    r = run(runner, "eval", "--family", "Hseries", "--n", "1", "--m", "2", "--p", "1", "--lambda", "1/2", "--mode", "exact")
    assert (r.exit_code, r.output) == (0, "5/4\n")
    r = run(runner, "eval", "--family", "LamH", "--n", "4", "--m", "1", "--p", "1")
    assert (r.exit_code, r.output) == (0, "32\n")
    r = run(runner, "eval", "--family", "Hseries", "--n", "1", "--m", "0", "--p", "1", "--lambda", "2/3", "--mode", "exact")
    assert r.exit_code == 2
    assert "NonTerminatingExact" in r.stderr


def test_numeric_output_digits(runner):
    r = run(runner, "eval", "--family", "Hseries", "--n", "1", "--lambda", "2/3", "--mode", "numeric")
    assert r.exit_code == 0
    text = r.output.strip()
    assert float(text) == pytest.approx((5 / 3) ** 1.5, rel=1e-11)
    assert len(text.replace(".", "")) <= 15


def test_exit_codes(runner):
    assert run(runner, "eval", "--family", "Hseries", "--n", "1", "--lambda", "1/0").exit_code == 4
    assert run(runner, "eval", "--family", "Hseries", "--n", "1", "--lambda", "x").exit_code == 4
    assert run(runner, "eval", "--family", "Nope", "--n", "1").exit_code == 4
    assert run(runner, "eval", "--family", "Hlow", "--n", "1", "--m", "5", "--lambda", "1/2").exit_code == 2
    r = run(runner, "eval", "--family", "Hseries", "--n", "1", "--lambda", "1/1000", "--mode", "numeric",
            env={"DEGEN_MAX_TERMS": "10"})
    assert r.exit_code == 3
    assert "NoConvergence" in r.stderr


def test_table_examples(runner):
    r = run(runner, "table", "--family", "LamH", "--n", "2", "--m", "0..1", "--p", "2")
    lines = r.output.splitlines()
    assert lines[0] == "family,n,m,p,lambda,lambda1,mode,value_exact,value_float"
    assert [row["value_exact"] for row in csv.DictReader(io.StringIO(r.output))] == ["6", "6"]
    r = run(runner, "table", "--family", "Hseries", "--lambda", "1", "--n", "4", "--m", "0..2")
    assert [row["value_exact"] for row in csv.DictReader(io.StringIO(r.output))] == ["16", "32", "48"]
    for lam in ("0", "1/2", "7/3"):
        r = run(runner, "table", "--family", "GolombekB", "--n", "1", "--k", "3", "--lambda", lam, "--format", "json")
        assert json.loads(r.output)[0]["value_exact"] == "12"


def test_header_constant():
    assert ",".join(CSV_HEADER) == "family,n,m,p,lambda,lambda1,mode,value_exact,value_float"


def test_rows_sorted(runner):
    r = run(runner, "table", "--family", "LamH", "--n", "3,1,2", "--m", "2,0", "--p", "1..2")
    rows = list(csv.DictReader(io.StringIO(r.output)))
    keys = [(int(x["n"]), int(x["m"]), int(x["p"])) for x in rows]
    assert keys == sorted(keys) and len(keys) == 12


def test_table_all_or_nothing(runner, tmp_path):
    out = tmp_path / "t.csv"
    out.write_text("previous\n")
    r = run(runner, "table", "--family", "Hlow", "--n", "1", "--m", "1..4", "--lambda", "1/2", "--output", str(out))
    assert r.exit_code == 2
    assert out.read_text() == "previous\n"
    assert [p.name for p in tmp_path.iterdir()] == ["t.csv"]
    r = run(runner, "table", "--family", "Hlow", "--n", "1", "--m", "1..3", "--lambda", "1/2", "--output", str(out))
    assert r.exit_code == 0
    assert out.read_text().splitlines()[0] == ",".join(CSV_HEADER)


def test_byte_stable(runner):
    args = ("table", "--family", "ApostolT", "--n", "0..3", "--m", "0..3", "--lambda", "1/3", "--lambda1", "2")
    assert run(runner, *args).output == run(runner, *args).output


@settings(max_examples=25, deadline=None)
@given(
    family=st.sampled_from(["Hseries", "Hstirling", "Hbell", "LamH", "LamT", "T1closed", "ApostolT", "ApostolH", "Qp"]),
    n=st.integers(1, 4),
    j=st.integers(1, 3),
    lam1=st.fractions(min_value=F(-2), max_value=F(2), max_denominator=3),
)
def test_round_trip(family, n, j, lam1):
    runner = CliRunner()
    lam = F(n, j)
    r = run(runner, "table", "--family", family, "--n", str(n), "--m", "0..3", "--p", "1..2",
            "--lambda", str(lam), "--lambda1", str(lam1))
    assert r.exit_code == 0, r.output
    for row in csv.DictReader(io.StringIO(r.output)):
        q = NumberQuery(row["family"], int(row["n"]), int(row["m"]), int(row["p"]),
                        row["lambda"], row["lambda1"], EXACT)
        assert str(evaluate(q)) == row["value_exact"]
        assert float(row["value_float"]) == float(F(row["value_exact"]))


def test_verify_examples(runner, tmp_path):
    report = tmp_path / "r.json"
    r = run(runner, "verify", "eq13", "--report", str(report))
    assert (r.exit_code, r.output) == (0, "eq13 PASS (11)\n")
    r = run(runner, "verify", "thm2.4", "eq35-as-printed", "--report", str(report))
    assert r.exit_code == 0
    assert r.output.splitlines()[1].startswith("eq35-as-printed FAIL-EXPECTED (")
    data = json.loads(report.read_text())
    assert data[0]["max_residual"] < 1e-9


def test_verify_unknown(runner):
    assert run(runner, "verify", "bogus", "--report", "-").exit_code == 4
