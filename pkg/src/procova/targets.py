"""Population coefficients ``beta*(theta*)`` for the simulation scenarios.

Coverage of ``beta0``, ``beta1`` (and ``beta2``) needs their true values,
which have no closed form once the outcome model is nonlinear. They are
computed once from large samples and frozen in :mod:`procova._target_table`;
``python -m procova.targets`` regenerates that file.

The computation removes all noise it can:

* ``theta*`` solves ``E[W~ W~'] theta = E[W~ m0(W~, U~)]`` under the
  shifted historical law (outcome noise integrates out exactly);
* treatment is averaged analytically with ``pi = 1/2``;
* trial moments of ``W`` and of ``W m_a(W, U)`` come from the same draws,
  so for linear outcome models the errors cancel and ``beta1* = 1``
  exactly.
"""

from __future__ import annotations

import argparse
import pathlib
import pprint

import numpy as np

from .models import ModelSpec
from .simulation import OUTCOME_MODELS, SHIFT_PATTERNS, draw_covariates, outcome_means

__all__ = [
    "TRIAL_COVARIATE_MEAN",
    "trial_second_moment",
    "beta_star_from_moments",
    "compute_coefficient_targets",
    "frozen_targets",
]

DEFAULT_SAMPLES = 10**7
DEFAULT_SEED = 20_240_917

TRIAL_COVARIATE_MEAN = np.array([1.0, -0.5, -0.5, 0.0, 1.25, 0.5, 1.5, 1.5])
_TRIAL_COVARIATE_VAR = np.array([0.0, 0.75, 0.75, 9.0, 1.5625, 0.05, 1 / 12, 1 / 12])


def trial_second_moment() -> np.ndarray:
    """``E[W W']`` for the trial covariates (independent components)."""
    mu = TRIAL_COVARIATE_MEAN
    return np.outer(mu, mu) + np.diag(_TRIAL_COVARIATE_VAR)


def beta_star_from_moments(theta, spec, mean_w, second_w, wm, m, pi=0.5) -> np.ndarray:
    """Population second-stage coefficients from moments of ``W`` and the
    arm-wise outcome means.

    Parameters
    ----------
    theta : ndarray, shape (q,)
    spec : ModelSpec
    mean_w, second_w : ndarray
        ``E[W]`` and ``E[W W']``.
    wm : sequence of two ndarray
        ``E[W m_a]`` for ``a = 0, 1``.
    m : sequence of two float
        ``E[m_a]``.
    """
    spec = ModelSpec.parse(spec)
    es = float(theta @ mean_w)
    es2 = float(theta @ second_w @ theta)
    mu = es if spec.centered else 0.0
    esc = es - mu
    esc2 = es2 - 2 * mu * es + mu * mu
    inner = np.array([[1.0, esc], [esc, esc2]])
    p = spec.n_params
    gram = np.zeros((p, p))
    cross = np.zeros(p)
    for a, wt in ((0, 1 - pi), (1, pi)):
        lift = np.array([[1.0, 0.0], [a, 0.0], [0.0, 1.0], [0.0, a]])[:p]
        gram += wt * lift @ inner @ lift.T
        cross += wt * lift @ np.array([m[a], float(theta @ wm[a]) - mu * m[a]])
    return np.linalg.solve(gram, cross)


def compute_coefficient_targets(n_samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, chunk: int = 10**6) -> dict:
    """Return ``{(model, shift, spec_value): beta*}`` for all scenarios."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    n_chunks = max(1, n_samples // chunk)
    total = n_chunks * chunk

    # trial: E[W], E[WW'], E[W m_a], E[m_a] per outcome model
    sum_w = np.zeros(8)
    sum_ww = np.zeros((8, 8))
    wm = {k: np.zeros((2, 8)) for k in OUTCOME_MODELS}
    mm = {k: np.zeros(2) for k in OUTCOME_MODELS}
    for _ in range(n_chunks):
        w, u = draw_covariates(rng, chunk)
        sum_w += w.sum(axis=0)
        sum_ww += w.T @ w
        for k in OUTCOME_MODELS:
            m0, m1 = outcome_means(k, w, u)
            wm[k][0] += w.T @ m0
            wm[k][1] += w.T @ m1
            mm[k] += (m0.sum(), m1.sum())

    # historical: E[W~W~'] and E[W~ m0] per shift (common draws across shifts)
    gram = {s: np.zeros((8, 8)) for s in SHIFT_PATTERNS}
    hm = {(s, k): np.zeros(8) for s in SHIFT_PATTERNS for k in ("A", "C")}
    for _ in range(n_chunks):
        w0, u0 = draw_covariates(rng, chunk)
        for s, (b, c) in SHIFT_PATTERNS.items():
            w = w0.copy()
            w[:, 1] += b
            u = u0 + c
            gram[s] += w.T @ w
            for k in ("A", "C"):
                hm[s, k] += w.T @ outcome_means(k, w, u)[0]

    mean_w, second_w = sum_w / total, sum_ww / total
    table = {}
    for k in OUTCOME_MODELS:
        m0_kind = "A" if k in ("A", "B") else "C"
        for s in SHIFT_PATTERNS:
            theta = np.linalg.solve(gram[s] / total, hm[s, m0_kind] / total)
            for spec in ModelSpec:
                beta = beta_star_from_moments(theta, spec, mean_w, second_w, wm[k] / total, mm[k] / total)
                table[(k, s, spec.value)] = tuple(float(f"{x:.10g}") for x in beta)
    return table


def frozen_targets(outcome_model: str, shift_pattern: int, spec) -> tuple:
    from ._target_table import TABLE

    return TABLE[(str(outcome_model).upper(), int(shift_pattern), ModelSpec.parse(spec).value)]


def _write_table(path: pathlib.Path, table: dict, n_samples: int, seed: int) -> None:
    header = (
        '"""Frozen population coefficients; regenerate with ``python -m procova.targets``.\n\n'
        f"samples={n_samples}, seed={seed}\n"
        '"""\n\n'
    )
    path.write_text(header + "TABLE = " + pprint.pformat(table, width=100, sort_dicts=True) + "\n")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Recompute the frozen coefficient targets.")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()
    out = pathlib.Path(__file__).with_name("_target_table.py")
    _write_table(out, compute_coefficient_targets(args.samples, args.seed), args.samples, args.seed)
    print(f"wrote {out}")
