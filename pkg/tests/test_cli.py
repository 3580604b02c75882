import csv
import io
import json

import pytest

from fraczeta.cli import main, read_config_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_zeta_two(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "--s", "2")
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["value"]["re"] - 1.6449340668) < 1e-10
    assert doc["value"]["im"] == 0


def test_eval_theta_one(capsys):
    code, out, _ = run(capsys, "eval", "--method", "theta", "--s", "1")
    assert code == 0
    assert abs(json.loads(out)["value"]["re"] - 1.0864348112) < 1e-10


def test_eval_domain_error_record(capsys):
    code, out, _ = run(capsys, "eval", "frac-zeta-series", "--s", "0.5", "--alpha", "0.5")
    assert code == 2
    assert json.loads(out)["error"]["kind"] == "DomainError"


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["eval"],
    ["eval", "zeta"],
    ["eval", "zeta", "--s", "abc"],
    ["eval", "no-such-method", "--s", "2"],
    ["eval", "frac-theta", "--s", "1"],
    ["eval", "frac-theta", "--s", "1", "--alpha", "0.5", "--variant", "bogus"],
    ["eval", "frac-zeta-fe-rational", "--s", "-2", "--alpha", "0.5", "--p", "1"],
    ["eval", "zeta", "--s", "2", "--format", "xml"],
    ["eval", "zeta", "--s", "2", "--budget-terms", "0"],
    ["eval", "zeta", "--s", "2", "--budget-terms", "50", "--hard-cap", "10"],
    ["verify", "no-such-suite"],
    ["scan", "theta", "--axis", "re_s", "--range", "0.5,5,1"],
    ["scan", "theta", "--axis", "re_s"],
    ["scan", "theta", "--axis", "re_s", "--range", "1,1,4"],
    ["compare", "--method", "zeta", "--s", "2"],
    ["compare", "--method", "zeta,zeta", "--s", "2"],
])
def test_malformed_inputs_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "error" in err


def test_scan_simplified_rows(capsys):
    code, out, _ = run(capsys, "scan", "frac-zeta-fe-simplified", "--axis", "re_s",
                       "--range", "-5,-0.5,10", "--a", "1", "--alpha", "0.5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 10
    coords = [float(r["coord"]) for r in rows]
    assert coords == sorted(coords)
    # asymptotic evaluator: rows carry values and an error estimate, not a convergence claim
    assert all(r["value_re"] and float(r["err_estimate"]) >= 0 for r in rows)


def test_scan_theta_monotone(capsys):
    code, out, _ = run(capsys, "scan", "theta", "--axis", "re_s", "--range", "0.5,5,5",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "coord,value_re,value_im,err_estimate,terms_used,converged"
    vals = [float(r["value_re"]) for r in csv.DictReader(io.StringIO(out))]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_scan_mostly_errors_exit_two(capsys):
    code, out, _ = run(capsys, "scan", "frac-zeta-series", "--axis", "re_s",
                       "--range", "0.5,1.2,4", "--alpha", "0.5", "--format", "csv")
    assert code == 2
    assert out.splitlines()[0].endswith(",error")


def test_compare_oracle(capsys):
    code, out, _ = run(capsys, "compare", "--method", "frac-zeta-series", "--method", "gl",
                       "--s", "4", "--alpha", "0.5", "--a", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["pairwise"][0]["abs_delta"] < 1e-4
    assert {m["method"] for m in doc["methods"]} == {"frac-zeta-series", "gl"}


def test_compare_evaluation_error(capsys):
    code, out, _ = run(capsys, "compare", "--method", "zeta,frac-zeta-series", "--s", "0.5",
                       "--alpha", "0.5")
    assert code == 2
    assert json.loads(out)["error"]["kind"] == "DomainError"


def test_deterministic_output(capsys):
    argv = ["eval", "frac-zeta-fe-triple", "--s", "-2.5,0.5", "--a", "0.25", "--alpha", "0.3"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_config_file_and_override(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\ns = 2\nformat = csv\ntail-tol = 1e-10\n", encoding="utf-8")
    monkeypatch.setenv("FRACZETA_CONFIG", str(cfg))
    code, out, _ = run(capsys, "eval", "zeta")
    assert code == 0 and out.startswith("coord,")
    code, out, _ = run(capsys, "eval", "zeta", "--format", "json", "--s", "3")
    assert code == 0 and abs(json.loads(out)["value"]["re"] - 1.2020569031595942) < 1e-12
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n", encoding="utf-8")
    assert main(["eval", "zeta", "--config", str(bad)]) == 1
    assert read_config_file(str(cfg))["tail_tol"] == 1e-10


def test_out_path(tmp_path, capsys):
    out = tmp_path / "z.json"
    assert main(["eval", "zeta", "--s", "2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["value"]["re"] > 1.64


def test_verify_theta_variants(capsys):
    code, out, _ = run(capsys, "verify", "theta-variants")
    assert code == 0
    doc = json.loads(out)
    disc = [r for r in doc["reports"] if r["identity_id"] == "theta-phase-vs-gl"][0]
    assert disc["verdict"] == "pass" and disc["variant"] == "corrected_e_ipialpha"
    for r in doc["reports"]:
        if r["verdict"] == "documented-discrepancy":
            assert r["notes"]


def test_verify_classical(capsys):
    code, out, _ = run(capsys, "verify", "classical-baselines", "--format", "csv")
    assert code == 0
    assert all(r["verdict"] == "pass" for r in csv.DictReader(io.StringIO(out)))
