import json
import subprocess
import sys

import pytest

from heckechar.cli import EXIT_COMPUTE, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv_h2(capsys):
    code, out, err = run(capsys, "table", "--n", "2", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ['diagram,"(1,1)",(2)', "(2),1,q", '"(1,1)",1,-1']
    assert "PASS q1" in err


def test_table_json_h3(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--format", "json")
    data = json.loads(out)
    classes = [c["cycle_type"] for c in data["classes"]]
    row = next(r for r in data["rows"] if r["diagram"] == "2,1")
    assert code == EXIT_OK
    assert row["values"][classes.index("{1}")] == "q-1"


def test_table_latex_to_file(capsys, tmp_path):
    out_file = tmp_path / "t.tex"
    code, out, _ = run(capsys, "table", "--n", "3", "--format", "latex", "--output", str(out_file), "--no-verify")
    assert code == EXIT_OK and out == ""
    assert out_file.read_text().startswith("\\begin{tabular}")


def test_reduce(capsys):
    assert json.loads(run(capsys, "reduce", "--n", "4", "--word", "1,2,1")[1]) == {"{2}": "q-1", "{1}": "q"}
    assert json.loads(run(capsys, "reduce", "--n", "5", "--word", "2,4")[1]) == {"{1,1}": "1"}
    assert json.loads(run(capsys, "reduce", "--n", "4", "--word", "1,1")[1]) == {"{1}": "q-1", "{}": "q"}


def test_murphy_trace(capsys):
    assert run(capsys, "murphy-trace", "--diagram", "2", "--indices", "2")[1].strip() == "q"
    assert run(capsys, "murphy-trace", "--diagram", "2,1", "--indices", "2")[1].strip() == "q-1"
    assert run(capsys, "murphy-trace", "--diagram", "1,1", "--indices", "2")[1].strip() == "-1"


def test_solve_dump(capsys):
    code, out, _ = run(capsys, "solve", "--n", "3")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["{1}"] == {"L2": "1"}
    assert set(data) == {"{}", "{1}", "{2}"}


@pytest.mark.parametrize("n,check", [(3, "q1"), (5, "regular"), (6, "conjugate")])
def test_verify(capsys, n, check):
    code, out, _ = run(capsys, "verify", "--n", str(n), "--checks", check)
    assert code == EXIT_OK
    assert out.startswith(f"PASS {check}")


def test_verify_failure_exit_code(capsys, monkeypatch):
    import heckechar.cli as cli
    from heckechar.solver import CheckResult, VerifyReport

    monkeypatch.setattr(cli, "verify_table", lambda t, checks=None: VerifyReport(t.n, [CheckResult("q1", False, 1, ["x"])]))
    assert run(capsys, "verify", "--n", "3")[0] == EXIT_VERIFY


def test_computational_error_exit_code(capsys, monkeypatch):
    import heckechar.cli as cli
    from heckechar.errors import SingularPivot

    def boom(*a, **k):
        raise SingularPivot("pivot vanished")

    monkeypatch.setattr(cli, "character_table", boom)
    code, _, err = run(capsys, "table", "--n", "3")
    assert code == EXIT_COMPUTE
    assert json.loads(err)["error"] == "SingularPivot"


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--n", "1"],
        ["table", "--n", "9"],
        ["table", "--n", "8"],
        ["table", "--n", "3", "--cap", "9"],
        ["reduce", "--n", "4", "--word", "1,5"],
        ["reduce", "--n", "4", "--word", "a"],
        ["murphy-trace", "--diagram", "3", "--indices", "2,3"],
        ["murphy-trace", "--n", "4", "--diagram", "2,1", "--indices", "2"],
        ["murphy-trace", "--diagram", "1,2", "--indices", "2"],
        ["verify", "--n", "3", "--checks", "bogus"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == EXIT_USAGE


def test_cache_dir_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("HECKE_CACHE_DIR", str(tmp_path))
    code, cold, _ = run(capsys, "table", "--n", "4")
    assert code == EXIT_OK and list(tmp_path.glob("*.json"))
    code, warm, _ = run(capsys, "table", "--n", "4")
    assert warm == cold


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "heckechar.cli", "reduce", "--n", "3", "--word", "1,2,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"{1}": "q", "{2}": "q-1"}
