"""Command line interface: ``procova fit | simulate | check``.

Exit codes: 0 success, 1 failed check, 2 input or schema error,
3 estimation failure.
"""

from __future__ import annotations

import argparse
import itertools
import pathlib
import sys

from . import __version__
from .checks import PROFILES, run_checks
from .estimation import fit_procova, fit_prognostic
from .exceptions import ESTIMATION_FAILURES, AllReplicationsFailed
from .inference import summarize
from .io import SchemaError, dumps_canonical, read_historical_csv, read_trial_csv, write_csv_rows
from .models import ModelSpec
from .simulation import RNG_ALGORITHM, SHIFT_PATTERNS, ScenarioConfig, run_replications

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_ESTIMATION = 0, 1, 2, 3

FIT_COLUMNS = ["label", "estimate", "se_fix", "se_est", "ci_fix_lo", "ci_fix_hi", "ci_est_lo", "ci_est_hi", "df", "variance_ratio"]

METRIC_COLUMNS = [
    "scenario", "model", "n", "n_hist", "coefficient", "estimator", "target",
    "coverage", "mean_variance_ratio", "mean_estimate", "sd_estimate", "mean_se",
    "replications_completed", "replications_failed",
]


class UsageError(Exception):
    pass


def build_fit_report(fit, results, covariate_names=(), level=0.95) -> dict:
    """JSON-ready report of a fitted model and its inference rows."""
    return {
        "model": fit.spec.value,
        "level": level,
        "n": fit.n_trial,
        "n_hist": fit.n_hist,
        "kappa": fit.kappa_hat,
        "df": results[0].df,
        "covariates": ["(intercept)", *covariate_names],
        "theta_hat": list(fit.theta_hat),
        "coefficients": [
            {
                "label": r.coefficient_label,
                "estimate": r.estimate,
                "se_fix": r.se_fix,
                "se_est": r.se_est,
                "ci_fix": list(r.ci_fix),
                "ci_est": list(r.ci_est),
                "df": r.df,
                "variance_ratio": r.variance_ratio,
            }
            for r in results
        ],
    }


def metrics_rows(metrics) -> list:
    cfg = metrics.config
    rows = []
    for label, m in metrics.coefficients.items():
        for estimator, cov, se in (("fix", m.coverage_fix, m.mean_se_fix), ("est", m.coverage_est, m.mean_se_est)):
            rows.append(
                {
                    "scenario": cfg.name,
                    "model": cfg.spec.value,
                    "n": cfg.n_trial,
                    "n_hist": cfg.n_hist,
                    "coefficient": label,
                    "estimator": estimator,
                    "target": m.target,
                    "coverage": cov,
                    "mean_variance_ratio": m.mean_variance_ratio,
                    "mean_estimate": m.mean_estimate,
                    "sd_estimate": m.sd_estimate,
                    "mean_se": se,
                    "replications_completed": metrics.replications_completed,
                    "replications_failed": metrics.replications_failed,
                }
            )
    return rows


def metrics_summary(all_metrics, args) -> dict:
    return {
        "scenario": f"{args.scenario}-{args.shift}",
        "model": args.model,
        "level": args.level,
        "replications": args.reps,
        "seed": args.seed,
        "rng": RNG_ALGORITHM,
        "b": SHIFT_PATTERNS[args.shift][0],
        "c": SHIFT_PATTERNS[args.shift][1],
        "cells": [
            {
                "n": m.config.n_trial,
                "n_hist": m.config.n_hist,
                "replications_completed": m.replications_completed,
                "replications_failed": m.replications_failed,
                "coefficients": {
                    label: {
                        "target": c.target,
                        "coverage_fix": c.coverage_fix,
                        "coverage_est": c.coverage_est,
                        "mean_variance_ratio": c.mean_variance_ratio,
                        "mean_estimate": c.mean_estimate,
                        "sd_estimate": c.sd_estimate,
                        "mean_se_fix": c.mean_se_fix,
                        "mean_se_est": c.mean_se_est,
                    }
                    for label, c in m.coefficients.items()
                },
            }
            for m in all_metrics
        ],
    }


def _emit(text: str, out) -> None:
    if out:
        pathlib.Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _level(value: str) -> float:
    v = float(value)
    if not 0.5 < v < 1.0:
        raise argparse.ArgumentTypeError(f"level must lie in (0.5, 1), got {value}")
    return v


def cmd_fit(args) -> int:
    trial = read_trial_csv(args.trial_csv)
    hist = read_historical_csv(args.historical_csv, trial.covariate_names)
    if trial.n < 10:
        raise UsageError(f"trial has {trial.n} rows; at least 10 are required")
    spec = ModelSpec.parse(args.model)
    try:
        fit = fit_procova(trial, fit_prognostic(hist), spec)
        results = summarize(fit, args.level)
    except ESTIMATION_FAILURES as exc:
        print(f"procova fit: estimation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION
    if args.format == "csv":
        rows = [
            {
                "label": r.coefficient_label,
                "estimate": r.estimate,
                "se_fix": r.se_fix,
                "se_est": r.se_est,
                "ci_fix_lo": r.ci_fix[0],
                "ci_fix_hi": r.ci_fix[1],
                "ci_est_lo": r.ci_est[0],
                "ci_est_hi": r.ci_est[1],
                "df": r.df,
                "variance_ratio": r.variance_ratio,
            }
            for r in results
        ]
        _emit(write_csv_rows(rows, FIT_COLUMNS), args.out)
    else:
        _emit(dumps_canonical(build_fit_report(fit, results, trial.covariate_names, args.level)), args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.hist_ratio and args.n_hist:
        raise UsageError("use either --n-hist or --hist-ratio, not both")
    cells = []
    for n in args.n:
        if n < 10:
            raise UsageError(f"--n must be at least 10, got {n}")
        if args.hist_ratio:
            sizes = [max(1, round(r * n)) for r in args.hist_ratio]
        elif args.n_hist:
            sizes = args.n_hist
        else:
            sizes = [10 * n]
        cells.extend(itertools.product([n], sizes))
    all_metrics = []
    for n, nh in cells:
        try:
            cfg = ScenarioConfig(args.scenario, args.shift, n, nh, args.reps, args.seed, ModelSpec.parse(args.model), args.level)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        try:
            all_metrics.append(run_replications(cfg, threads=args.threads))
        except AllReplicationsFailed as exc:
            print(f"procova simulate: {exc}", file=sys.stderr)
            return EXIT_ESTIMATION
    rows = [r for m in all_metrics for r in metrics_rows(m)]
    csv_text = write_csv_rows(rows, METRIC_COLUMNS)
    json_text = dumps_canonical(metrics_summary(all_metrics, args))
    if args.out:
        stem = pathlib.Path(args.out)
        stem.with_suffix(".csv").write_text(csv_text, encoding="utf-8")
        stem.with_suffix(".json").write_text(json_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text if args.format == "csv" else json_text)
    return EXIT_OK


def cmd_check(args) -> int:
    results = run_checks(args.profile, q1_perturbation=args.perturb_q1)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  max={r.max_discrepancy:.3e}  tol={r.tolerance:.1e}")
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return EXIT_CHECK_FAILED
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="procova", description="Prognostic covariate adjustment for randomized trials.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", default="ancova", choices=[m.value for m in ModelSpec])
    common.add_argument("--level", type=_level, default=0.95)
    common.add_argument("--out", default=None, help="output path (stdout if omitted)")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("fit", parents=[common], help="two-stage fit of a trial CSV using a historical CSV")
    p.add_argument("trial_csv")
    p.add_argument("historical_csv")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo replications of a simulation scenario")
    p.add_argument("--scenario", required=True, choices=list("ABCD"))
    p.add_argument("--shift", type=int, required=True, choices=range(1, 10), metavar="{1..9}")
    p.add_argument("--n", type=int, nargs="+", required=True, help="trial sample size(s)")
    p.add_argument("--n-hist", type=int, nargs="+", default=None, help="historical sample size(s)")
    p.add_argument("--hist-ratio", type=float, nargs="+", default=None, help="historical sizes as multiples of n")
    p.add_argument("--reps", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("check", help="run the oracle and finite-difference verification suite")
    p.add_argument("--profile", choices=sorted(PROFILES), default="default")
    p.add_argument("--perturb-q1", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (SchemaError, UsageError) as exc:
        print(f"procova {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
