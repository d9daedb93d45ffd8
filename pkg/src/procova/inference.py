"""Standard errors and t-based confidence intervals for a PROCOVA fit."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import betainc

from .estimation import ProcovaFit
from .exceptions import InvalidProbability
from .models import Target, coefficient_labels, contrast_vector

__all__ = ["InferenceResult", "t_cdf", "t_quantile", "summarize"]


def t_cdf(t: float, df: float) -> float:
    """Student-t CDF through the regularized incomplete beta function."""
    tail = 0.5 * betainc(0.5 * df, 0.5, df / (df + t * t))
    return 1.0 - tail if t >= 0 else tail


def _upper_tail(t: float, df: float) -> float:
    # 1 - CDF(t) for t >= 0, without cancellation.
    return 0.5 * betainc(0.5 * df, 0.5, df / (df + t * t))


def t_quantile(df: float, p: float) -> float:
    """Quantile of Student's t with ``df`` degrees of freedom.

    Solves ``CDF(q) = p`` by Brent's method on the incomplete-beta CDF,
    working in the upper tail so that probabilities near 1 keep full
    relative accuracy.
    """
    if not (0.0 < p < 1.0) or not math.isfinite(p):
        raise InvalidProbability(f"p must lie in (0, 1), got {p!r}")
    if df < 1:
        raise ValueError(f"df must be >= 1, got {df!r}")
    if p == 0.5:
        return 0.0
    tail = 1.0 - p if p > 0.5 else p
    hi = 1.0
    while _upper_tail(hi, df) > tail:
        hi *= 2.0
    q = brentq(lambda t: _upper_tail(t, df) - tail, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
    return q if p > 0.5 else -q


@dataclass(frozen=True)
class InferenceResult:
    coefficient_label: str
    estimate: float
    se_fix: float
    se_est: float
    ci_fix: tuple
    ci_est: tuple
    df: int
    level: float

    @property
    def variance_ratio(self) -> float:
        """``e'V_est e / e'V_fix e``; NaN when the fixed-score variance is 0."""
        if self.se_fix == 0.0:
            return math.nan
        return (self.se_est / self.se_fix) ** 2


def _contrasts(spec):
    out = [(label, np.eye(spec.n_params)[i]) for i, label in enumerate(coefficient_labels(spec))]
    if spec.centered:
        out.append(("beta0+betaA", contrast_vector(spec, Target.CONTROL_MEAN_PLUS_EFFECT)))
    return out


def summarize(fit: ProcovaFit, level: float = 0.95) -> list:
    """Per-coefficient estimates, both standard errors and both intervals.

    Centered models get an extra row for ``beta0 + betaA``, the treated-arm
    mean. Degrees of freedom are ``n - p``.
    """
    if not 0.0 < level < 1.0:
        raise InvalidProbability(f"level must lie in (0, 1), got {level!r}")
    n = fit.n_trial
    df = n - fit.spec.n_params
    crit = t_quantile(df, 1.0 - (1.0 - level) / 2.0)
    results = []
    for label, e in _contrasts(fit.spec):
        est = float(e @ fit.beta_hat)
        var_fix = max(float(e @ fit.v_fix @ e), 0.0)
        # the add-on term is PSD; guard only against rounding
        var_est = max(float(e @ fit.v_est @ e), var_fix)
        se_fix = math.sqrt(var_fix / n)
        se_est = math.sqrt(var_est / n)
        results.append(
            InferenceResult(
                coefficient_label=label,
                estimate=est,
                se_fix=se_fix,
                se_est=se_est,
                ci_fix=(est - crit * se_fix, est + crit * se_fix),
                ci_est=(est - crit * se_est, est + crit * se_est),
                df=df,
                level=level,
            )
        )
    return results
