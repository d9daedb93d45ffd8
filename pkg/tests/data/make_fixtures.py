"""Regenerate the CSV fixtures in this directory (run from the repo root)."""

import csv
import pathlib

import numpy as np

HERE = pathlib.Path(__file__).parent


def _write(name, header, rows):
    with (HERE / name).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([f"{v:.4f}" if isinstance(v, float) else v for v in r])


def main():
    rng = np.random.default_rng(20240917)
    # small two-covariate trial/historical pair
    wt = rng.normal(size=(12, 2))
    a = np.array([0, 1] * 6)
    y = 1.0 + 0.8 * a + wt @ [1.5, -0.7] + 0.3 * wt[:, 0] ** 2 + rng.normal(scale=0.5, size=12)
    _write("trial12.csv", ["y", "a", "age", "bmi"], [[float(y[i]), int(a[i]), *map(float, wt[i])] for i in range(12)])
    wh = rng.normal(size=(30, 2))
    yh = 1.0 + wh @ [1.5, -0.7] + 0.3 * wh[:, 0] ** 2 + rng.normal(scale=0.5, size=30)
    # historical file carries a bogus treatment column that must be ignored
    _write("hist30.csv", ["y", "a", "age", "bmi"], [[float(yh[i]), 7, *map(float, wh[i])] for i in range(30)])

    # noiseless trial: y = score + 1.5 a where score = 2 + 3 x
    x = np.arange(-6, 6) / 4  # exact in 4 decimals
    a = np.array([0, 1, 1, 0] * 3)
    _write("trial_noiseless.csv", ["y", "a", "x"], [[float(2 + 3 * x[i] + 1.5 * a[i]), int(a[i]), float(x[i])] for i in range(12)])
    xh = np.arange(-8, 8) / 4
    _write("hist_noiseless.csv", ["y", "x"], [[float(2 + 3 * v), float(v)] for v in xh])

    # seven covariates in the simulation layout
    from procova.simulation import COVARIATE_NAMES, ScenarioConfig, generate_pair

    _, hist = generate_pair(ScenarioConfig("D", 5, 20, 20, 1, seed=3), 0)
    _write("hist7.csv", ["y", *COVARIATE_NAMES], [[float(hist.outcome[i]), *map(float, hist.covariates[i, 1:])] for i in range(hist.n)])


if __name__ == "__main__":
    main()
