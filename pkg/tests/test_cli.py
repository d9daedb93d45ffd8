import json

import numpy as np
import pytest

from procova.cli import main
from procova.estimation import fit_procova, fit_prognostic
from procova.inference import summarize
from procova.io import canonical_float, dumps_canonical, read_historical_csv, read_trial_csv

from .conftest import DATA

TRIAL = str(DATA / "trial12.csv")
HIST = str(DATA / "hist30.csv")
MODELS = ["ancova", "ancova-centered", "anhecova"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("model", MODELS)
def test_fit_matches_golden_file(capsys, model):
    code, out, _ = run(capsys, "fit", TRIAL, HIST, "--model", model)
    assert code == 0
    assert out == (DATA / f"golden_fit_{model}.json").read_text()


@pytest.mark.parametrize("model", MODELS)
def test_golden_file_matches_library_path(model):
    report = json.loads((DATA / f"golden_fit_{model}.json").read_text())
    trial = read_trial_csv(TRIAL)
    fit = fit_procova(trial, fit_prognostic(read_historical_csv(HIST)), model)
    rows = summarize(fit)
    assert report["n"] == 12 and report["n_hist"] == 30 and report["model"] == model
    assert report["kappa"] == canonical_float(0.4)
    assert report["covariates"] == ["(intercept)", "age", "bmi"]
    assert len(report["coefficients"]) == len(rows)
    for got, r in zip(report["coefficients"], rows):
        assert got["label"] == r.coefficient_label
        assert got["df"] == r.df
        for key in ("estimate", "se_fix", "se_est", "variance_ratio"):
            assert got[key] == canonical_float(getattr(r, key))
        assert got["ci_fix"] == [canonical_float(v) for v in r.ci_fix]
        assert got["ci_est"] == [canonical_float(v) for v in r.ci_est]


def test_report_round_trips(capsys):
    _, out, _ = run(capsys, "fit", TRIAL, HIST, "--model", "anhecova")
    assert dumps_canonical(json.loads(out)) == out


def test_noiseless_report(capsys):
    code, out, _ = run(capsys, "fit", str(DATA / "trial_noiseless.csv"), str(DATA / "hist_noiseless.csv"))
    assert code == 0
    rows = {r["label"]: r for r in json.loads(out)["coefficients"]}
    assert rows["betaA"]["estimate"] == 1.5
    # residuals are zero up to rounding
    assert all(abs(r["se_fix"]) < 1e-12 and abs(r["se_est"]) < 1e-12 for r in rows.values())


def test_historical_treatment_column_ignored(tmp_path, capsys):
    stripped = tmp_path / "hist.csv"
    lines = (DATA / "hist30.csv").read_text().splitlines()
    stripped.write_text("\n".join(",".join(c for i, c in enumerate(l.split(",")) if i != 1) for l in lines) + "\n")
    garbage = tmp_path / "hist_bad_a.csv"
    garbage.write_text("\n".join(l if i == 0 else l.replace(",7,", ",not-a-number,", 1) for i, l in enumerate(lines)) + "\n")
    outs = [run(capsys, "fit", TRIAL, str(p))[1] for p in (HIST, stripped, garbage)]
    assert outs[0] == outs[1] == outs[2]


def test_csv_format(capsys, tmp_path):
    out = tmp_path / "fit.csv"
    assert main(["fit", TRIAL, HIST, "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("label,estimate,se_fix,se_est")
    assert [l.split(",")[0] for l in lines[1:]] == ["beta0", "betaA", "beta1"]


def _write_trial(path, treatment):
    trial = (DATA / "trial12.csv").read_text().splitlines()
    rows = [trial[0]]
    for line, a in zip(trial[1:], treatment):
        f = line.split(",")
        f[1] = a
        rows.append(",".join(f))
    path.write_text("\n".join(rows) + "\n")


def test_treatment_value_two_is_schema_error(tmp_path, capsys):
    bad = tmp_path / "trial.csv"
    _write_trial(bad, ["0", "1", "2"] + ["0", "1"] * 5 + ["0"])
    code, _, err = run(capsys, "fit", str(bad), HIST)
    assert code == 2
    assert "row 4" in err and "'a'" in err


def test_missing_cell_is_schema_error(tmp_path, capsys):
    bad = tmp_path / "trial.csv"
    text = (DATA / "trial12.csv").read_text().splitlines()
    text[3] = ",".join(text[3].split(",")[:3] + [""])
    bad.write_text("\n".join(text) + "\n")
    code, _, err = run(capsys, "fit", str(bad), HIST)
    assert code == 2 and "bmi" in err


def test_mismatched_covariates(tmp_path, capsys):
    other = tmp_path / "hist.csv"
    other.write_text((DATA / "hist30.csv").read_text().replace("age,bmi", "bmi,age", 1))
    code, _, err = run(capsys, "fit", TRIAL, str(other))
    assert code == 2 and "order" in err


def test_missing_file(capsys):
    assert run(capsys, "fit", "/nonexistent.csv", HIST)[0] == 2


def test_single_arm_is_estimation_failure(tmp_path, capsys):
    one = tmp_path / "trial.csv"
    _write_trial(one, ["1"] * 12)
    code, _, err = run(capsys, "fit", str(one), HIST)
    assert code == 3 and "SingleArm" in err


def test_bad_level_and_model(capsys):
    assert run(capsys, "fit", TRIAL, HIST, "--level", "0.4")[0] == 2
    assert run(capsys, "fit", TRIAL, HIST, "--model", "ols")[0] == 2


SIM = ["simulate", "--scenario", "B", "--shift", "3", "--n", "40", "--n-hist", "80", "--reps", "25", "--seed", "7"]


def test_simulate_deterministic_across_threads(tmp_path):
    stems = [tmp_path / f"run{i}" for i in range(3)]
    for stem, threads in zip(stems, ("1", "1", "4")):
        assert main(SIM + ["--threads", threads, "--out", str(stem)]) == 0
    for ext in (".csv", ".json"):
        blobs = {(s.with_suffix(ext)).read_bytes() for s in stems}
        assert len(blobs) == 1


def test_simulate_outputs(tmp_path):
    stem = tmp_path / "sim"
    assert main(SIM + ["--model", "anhecova", "--out", str(stem)]) == 0
    summary = json.loads(stem.with_suffix(".json").read_text())
    assert summary["rng"].startswith("numpy.random.Philox")
    assert summary["b"] == 0.0 and summary["c"] == 1.5
    cell = summary["cells"][0]
    assert cell["replications_completed"] + cell["replications_failed"] == 25
    assert set(cell["coefficients"]) == {"beta0", "betaA", "beta1", "beta2", "beta0+betaA"}
    rows = stem.with_suffix(".csv").read_text().splitlines()
    assert len(rows) == 1 + 5 * 2


def test_simulate_grid(capsys):
    code, out, _ = run(capsys, "simulate", "--scenario", "A", "--shift", "1", "--n", "20", "30",
                       "--hist-ratio", "1", "2", "--reps", "3", "--format", "csv")
    assert code == 0
    cells = {tuple(l.split(",")[2:4]) for l in out.splitlines()[1:]}
    assert cells == {("20", "20"), ("20", "40"), ("30", "30"), ("30", "60")}


def test_simulate_all_failed(capsys):
    code, _, err = run(capsys, "simulate", "--scenario", "A", "--shift", "1", "--n", "20", "--n-hist", "5", "--reps", "2")
    assert code == 3 and "failed" in err


def test_simulate_usage_errors(capsys):
    assert run(capsys, "simulate", "--scenario", "A", "--shift", "1", "--n", "5")[0] == 2
    assert run(capsys, "simulate", "--scenario", "A", "--shift", "10", "--n", "50")[0] == 2
    assert run(capsys, "simulate", "--scenario", "A", "--shift", "1", "--n", "50",
               "--n-hist", "50", "--hist-ratio", "2")[0] == 2


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check")
    assert code == 0
    lines = out.splitlines()
    assert sum(l.startswith("PASS") for l in lines) == 16
    assert lines[-1] == "all 16 checks passed"


def test_check_strict_profile(capsys):
    assert run(capsys, "check", "--profile", "strict")[0] == 0


def test_check_detects_wrong_derivative(capsys):
    code, out, err = run(capsys, "check", "--perturb-q1", "1e-2")
    assert code == 1
    failing = [l for l in out.splitlines() if l.startswith("FAIL")]
    assert len(failing) == 3 and all("Q1" in l or "q1" in l.lower() for l in failing)
    assert "3 of 16" in err
