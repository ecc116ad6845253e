import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hpdistortion.cli import fmt, main, parse_range


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_phi_text(capsys):
    code, out, _ = run_cli(capsys, "eval", "--fn", "phi", "--a", "0.5", "--K", "1", "--r", "0.8")
    assert code == 0
    assert float(out.split()[0]) == pytest.approx(0.8, rel=1e-14)


def test_eval_mu_json(capsys):
    code, out, _ = run_cli(capsys, "eval", "--fn", "mu", "--a", "0.5", "--r", str(1 / math.sqrt(2)), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(math.pi / 2, rel=1e-14)


def test_eval_named_function_has_nan_error(capsys):
    code, out, _ = run_cli(capsys, "eval", "--fn", "f1", "--a", "0.3", "--r", "0.5", "--format", "json")
    assert code == 0
    assert math.isnan(json.loads(out)["err_estimate"])


def test_domain_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "eval", "--fn", "K", "--a", "0.3", "--r", "1.2")
    assert code == 2 and "error" in err
    code, _, _ = run_cli(capsys, "eval", "--fn", "mu", "--a", "0.3")
    assert code == 2
    code, _, _ = run_cli(capsys, "eval", "--fn", "K", "--a", "0.3", "--r", "0.5", "--precision", "1e-20")
    assert code == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--fn", "nonsense"])
    assert exc.value.code == 2


def test_nonconvergence_exit_3(capsys):
    code, _, err = run_cli(capsys, "eval", "--fn", "mu-inv", "--a", "0.3", "--y", "2", "--max-iter", "1")
    assert code == 3 and "convergence" in err


def test_solve_modular(capsys):
    code, out, _ = run_cli(capsys, "solve-modular", "--a", "0.5", "--degree", "2", "--r", "0.8", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["s"] == pytest.approx(0.25, rel=1e-12)
    assert abs(doc["residual"]) < 1e-9


def test_table_csv_parses(capsys):
    code, out, _ = run_cli(capsys, "table", "--fn", "K", "--a", "0.25", "--r-range", "0.1:0.9:9", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["r", "value", "err_estimate"]
    assert len(rows) == 10
    vals = [float(r[1]) for r in rows[1:]]
    assert vals == sorted(vals)


def test_table_needs_one_range(capsys):
    code, _, _ = run_cli(capsys, "table", "--fn", "K", "--a", "0.25", "--r", "0.5")
    assert code == 2


def test_parse_range():
    assert parse_range("0.1:0.5:5") == [0.1, 0.2, 0.3, 0.4, 0.5]
    assert parse_range("2:2:1") == [2.0]


def test_fmt_round_trips():
    for v in (0.1, 1 / 3, math.pi, 1e-300, 0.7999999999999998):
        assert float(fmt(v)) == v
    assert fmt(0.1) == "0.1"


def test_verify_json_report(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run_cli(capsys, "verify", "--suite", "identities", "--grid-density", "3", "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["suite"] == "identities" and doc["failures"] == []
    assert doc["total_checks"] > 0


def test_verify_is_deterministic_across_workers(tmp_path):
    outs = []
    for workers in ("1", "2"):
        path = tmp_path / f"w{workers}.json"
        subprocess.run(
            [sys.executable, "-m", "hpdistortion", "verify", "--suite", "thm-power", "--grid-density", "2",
             "--workers", workers, "--no-timing", "--out", str(path)],
            check=True, capture_output=True,
        )
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point_version():
    res = subprocess.run([sys.executable, "-m", "hpdistortion", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and "0.1.0" in res.stdout
