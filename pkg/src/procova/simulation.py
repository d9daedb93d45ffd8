"""Monte Carlo scenarios for trial/historical pairs and the replication engine.

Trial covariates are ``W1, W2 ~ Unif(-2, 1)``, ``W3 ~ N(0, 9)``,
``W4 ~ Exp(rate 0.8)``, ``W5 ~ Gamma(shape 5, rate 10)``,
``W6, W7 ~ Unif(1, 2)`` plus an unobserved ``U ~ Unif(0, 1)``; treatment is
``Bernoulli(0.5)`` and ``Y ~ N(m_A(W, U), 1)``. Historical controls shift
``W1`` by ``b`` and ``U`` by ``c``. Outcome models:

* ``A`` linear control mean, constant effect 0.835
* ``B`` linear control mean, quadratic treated mean
* ``C`` nonlinear control mean, constant effect 0.835
* ``D`` nonlinear control and treated means

Indicator thresholds that can never fire on trial supports (``W1 < -4.1``,
``U > 1.1``) are kept as written; shifted historical samples do reach them.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .data import HistoricalDataset, TrialDataset
from .estimation import fit_procova, fit_prognostic
from .exceptions import ESTIMATION_FAILURES, AllReplicationsFailed
from .inference import summarize
from .models import ModelSpec

__all__ = [
    "OUTCOME_MODELS",
    "SHIFT_PATTERNS",
    "TRUE_ATE",
    "RNG_ALGORITHM",
    "COVARIATE_NAMES",
    "ScenarioConfig",
    "ReplicationMetrics",
    "rng_for",
    "draw_covariates",
    "outcome_means",
    "generate_pair",
    "true_targets",
    "coefficient_targets",
    "run_replications",
]

OUTCOME_MODELS = ("A", "B", "C", "D")

#: shift pattern -> (b, c)
SHIFT_PATTERNS = {
    1: (0.0, 0.0),
    2: (0.0, 0.5),
    3: (0.0, 1.5),
    4: (-2.0, 0.0),
    5: (-2.0, 0.5),
    6: (-2.0, 1.5),
    7: (-5.0, 0.0),
    8: (-5.0, 0.5),
    9: (-5.0, 1.5),
}

TRUE_ATE = 0.835

RNG_ALGORITHM = "numpy.random.Philox(SeedSequence(entropy=seed, spawn_key=(rep_index,)))"

COVARIATE_NAMES = tuple(f"w{j}" for j in range(1, 8))


def rng_for(seed: int, rep_index: int) -> np.random.Generator:
    """Independent counter-based stream for one replication."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(rep_index),))
    return np.random.Generator(np.random.Philox(ss))


def draw_covariates(rng: np.random.Generator, n: int, b: float = 0.0, c: float = 0.0) -> tuple:
    """Covariate matrix ``(1, W1..W7)`` and unobserved ``U``, shifted by
    ``(b, c)``."""
    w = np.empty((n, 8))
    w[:, 0] = 1.0
    w[:, 1] = rng.uniform(-2.0 + b, 1.0 + b, n)
    w[:, 2] = rng.uniform(-2.0, 1.0, n)
    w[:, 3] = rng.normal(0.0, 3.0, n)
    w[:, 4] = rng.exponential(1.0 / 0.8, n)
    w[:, 5] = rng.gamma(5.0, 1.0 / 10.0, n)
    w[:, 6] = rng.uniform(1.0, 2.0, n)
    w[:, 7] = rng.uniform(1.0, 2.0, n)
    u = rng.uniform(c, 1.0 + c, n)
    return w, u


def _m0_linear(w, u):
    return w[:, 1] + 4.1 * w[:, 2] + 1.4 * w[:, 3] - 1.5 * w[:, 4] + 1.5 * w[:, 5] - w[:, 6] + w[:, 7]


def _m1_quadratic(w, u):
    w2 = w * w
    return (
        -4.184
        + 0.1 * w2[:, 1]
        + 0.41 * w2[:, 2]
        + 0.14 * w2[:, 3]
        - 0.15 * w2[:, 4]
        + 0.15 * w2[:, 5]
        - 0.1 * w2[:, 6]
        + 0.1 * w2[:, 7]
    )


def _m0_nonlinear(w, u):
    s2 = np.sin(np.abs(w[:, 2]))
    return (
        4.1 * s2
        + 1.4 * (np.abs(w[:, 3]) > 2.5)
        + 1.5 * (np.abs(w[:, 4]) > 0.25)
        + 1.5 * np.sin(np.abs(w[:, 5]))
        - 4.1 * (w[:, 1] < -4.1) * s2
        - 4.1 * (w[:, 1] < -6.1) * s2
        - 4.1 * s2 * (u > 1.55)
        - 4.1 * s2 * (u > 1.1)
    )


def _m1_nonlinear(w, u):
    s2 = np.sin(np.abs(w[:, 2]))
    return (
        4.3 * s2**2
        + 1.4 * (np.abs(w[:, 3]) > 2.5)
        + 1.3 * (np.abs(w[:, 4]) > 0.25)
        + 4.1 * (w[:, 2] > 0) * np.sin(np.abs(w[:, 5]))
        + 1.6 * np.sin(np.abs(w[:, 6]))
        - 4.1 * s2 * (w[:, 1] < -4.1)
        - 4.1 * s2 * (w[:, 1] < -6.1)
        - 4.1 * s2 * (u > 1.1)
        - 4.1 * s2 * (u > 1.55)
    )


def outcome_means(model: str, w: np.ndarray, u: np.ndarray) -> tuple:
    """Conditional means ``(m0, m1)`` of the control and treated outcomes."""
    if model in ("A", "B"):
        m0 = _m0_linear(w, u)
    elif model in ("C", "D"):
        m0 = _m0_nonlinear(w, u)
    else:
        raise ValueError(f"unknown outcome model {model!r}")
    if model == "B":
        m1 = _m1_quadratic(w, u)
    elif model == "D":
        m1 = _m1_nonlinear(w, u)
    else:
        m1 = m0 + TRUE_ATE
    return m0, m1


@dataclass(frozen=True)
class ScenarioConfig:
    """One scenario cell: outcome model, shift pattern, sample sizes.

    ``shift_pattern`` fixes ``(b, c)`` through :data:`SHIFT_PATTERNS`.
    """

    outcome_model: str
    shift_pattern: int
    n_trial: int
    n_hist: int
    replications: int = 1000
    seed: int = 0
    spec: ModelSpec = ModelSpec.ANCOVA
    level: float = 0.95

    def __post_init__(self):
        model = str(self.outcome_model).upper()
        if model not in OUTCOME_MODELS:
            raise ValueError(f"outcome_model must be one of {OUTCOME_MODELS}, got {self.outcome_model!r}")
        if self.shift_pattern not in SHIFT_PATTERNS:
            raise ValueError(f"shift_pattern must be 1..9, got {self.shift_pattern!r}")
        spec = ModelSpec.parse(self.spec)
        if self.n_trial <= spec.n_params or self.n_hist < 1:
            raise ValueError(f"sample sizes too small: n_trial={self.n_trial}, n_hist={self.n_hist}")
        if self.replications < 1:
            raise ValueError("replications must be >= 1")
        if not 0.0 < self.level < 1.0:
            raise ValueError("level must lie in (0, 1)")
        object.__setattr__(self, "outcome_model", model)
        object.__setattr__(self, "spec", spec)

    @property
    def b(self) -> float:
        return SHIFT_PATTERNS[self.shift_pattern][0]

    @property
    def c(self) -> float:
        return SHIFT_PATTERNS[self.shift_pattern][1]

    @property
    def name(self) -> str:
        return f"{self.outcome_model}-{self.shift_pattern}"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["spec"] = self.spec.value
        d["b"], d["c"] = self.b, self.c
        d["rng"] = RNG_ALGORITHM
        return d


def generate_pair(config: ScenarioConfig, rep_index: int) -> tuple:
    """Draw ``(TrialDataset, HistoricalDataset)`` for one replication.

    The stream depends only on ``(config.seed, rep_index)``, so any
    replication can be regenerated in isolation.
    """
    rng = rng_for(config.seed, rep_index)
    n, nh = config.n_trial, config.n_hist
    w, u = draw_covariates(rng, n)
    a = (rng.random(n) < 0.5).astype(float)
    m0, m1 = outcome_means(config.outcome_model, w, u)
    y = np.where(a == 1.0, m1, m0) + rng.standard_normal(n)
    wh, uh = draw_covariates(rng, nh, config.b, config.c)
    m0h, _ = outcome_means(config.outcome_model, wh, uh)
    yh = m0h + rng.standard_normal(nh)
    return (
        TrialDataset(w, a, y, COVARIATE_NAMES),
        HistoricalDataset(wh, yh, COVARIATE_NAMES),
    )


def true_targets(outcome_model: str) -> float:
    """True average treatment effect of an outcome model (0.835 for all).

    For ``A`` and ``C`` this holds by construction. For ``B`` and ``D`` the
    exact values under the stated parameterization are 0.83725 and about
    0.8361; 0.835 is the large-sample value these scenarios are calibrated
    to and is kept so that all four models share one target.
    """
    if str(outcome_model).upper() not in OUTCOME_MODELS:
        raise ValueError(f"unknown outcome model {outcome_model!r}")
    return TRUE_ATE


def coefficient_targets(outcome_model: str, shift_pattern: int, spec=ModelSpec.ANCOVA) -> dict:
    """Population coefficients ``beta*(theta*)`` keyed by coefficient label.

    ``betaA`` is :func:`true_targets`; the other coefficients come from the
    frozen large-sample table in :mod:`procova.targets`. Centered models
    also carry ``beta0+betaA``.
    """
    from .targets import frozen_targets

    spec = ModelSpec.parse(spec)
    beta = frozen_targets(outcome_model, shift_pattern, spec)
    out = {"beta0": beta[0], "betaA": true_targets(outcome_model), "beta1": beta[2]}
    if spec is ModelSpec.ANHECOVA:
        out["beta2"] = beta[3]
    if spec.centered:
        out["beta0+betaA"] = out["beta0"] + out["betaA"]
    return out


@dataclass
class CoefficientMetrics:
    target: float
    coverage_fix: float
    coverage_est: float
    mean_variance_ratio: float
    mean_estimate: float
    sd_estimate: float
    mean_se_fix: float
    mean_se_est: float


@dataclass
class ReplicationMetrics:
    """Aggregates over completed replications, keyed by coefficient label."""

    config: ScenarioConfig
    coefficients: dict = field(default_factory=dict)
    replications_completed: int = 0
    replications_failed: int = 0

    @property
    def coverage_fix(self) -> dict:
        return {k: v.coverage_fix for k, v in self.coefficients.items()}

    @property
    def coverage_est(self) -> dict:
        return {k: v.coverage_est for k, v in self.coefficients.items()}

    @property
    def mean_variance_ratio(self) -> dict:
        return {k: v.mean_variance_ratio for k, v in self.coefficients.items()}

    @property
    def mean_estimate(self) -> dict:
        return {k: v.mean_estimate for k, v in self.coefficients.items()}


def _one_replication(config: ScenarioConfig, rep_index: int, targets: dict):
    trial, hist = generate_pair(config, rep_index)
    try:
        fit = fit_procova(trial, fit_prognostic(hist), config.spec)
        rows = summarize(fit, config.level)
    except ESTIMATION_FAILURES:
        return None
    out = np.empty((len(rows), 6))
    for i, r in enumerate(rows):
        t = targets[r.coefficient_label]
        out[i] = (
            r.estimate,
            r.ci_fix[0] <= t <= r.ci_fix[1],
            r.ci_est[0] <= t <= r.ci_est[1],
            r.variance_ratio,
            r.se_fix,
            r.se_est,
        )
    return [r.coefficient_label for r in rows], out


def run_replications(config: ScenarioConfig, threads: int = 1, targets: dict | None = None) -> ReplicationMetrics:
    """Run every replication of ``config`` and aggregate coverage and
    variance-ratio metrics.

    Replications whose fit fails (rank deficiency, a single treatment arm)
    are dropped and counted in ``replications_failed``. Results do not
    depend on ``threads``: each replication owns its random stream and the
    reduction runs in replication order.

    Parameters
    ----------
    config : ScenarioConfig
    threads : int
        Worker threads.
    targets : dict, optional
        True value per coefficient label; defaults to
        :func:`coefficient_targets`.
    """
    if targets is None:
        targets = coefficient_targets(config.outcome_model, config.shift_pattern, config.spec)
    reps = range(config.replications)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda r: _one_replication(config, r, targets), reps))
    else:
        results = [_one_replication(config, r, targets) for r in reps]

    done = [r for r in results if r is not None]
    failed = len(results) - len(done)
    if not done:
        raise AllReplicationsFailed(f"all {config.replications} replications of {config.name} failed")
    labels = done[0][0]
    stack = np.stack([r[1] for r in done])  # (reps, coefficients, fields)
    metrics = ReplicationMetrics(config=config, replications_completed=len(done), replications_failed=failed)
    for i, label in enumerate(labels):
        col = stack[:, i, :]
        ratios = col[:, 3]
        ratios = ratios[np.isfinite(ratios)]
        metrics.coefficients[label] = CoefficientMetrics(
            target=float(targets[label]),
            coverage_fix=float(col[:, 1].mean()),
            coverage_est=float(col[:, 2].mean()),
            mean_variance_ratio=float(ratios.mean()) if ratios.size else math.nan,
            mean_estimate=float(col[:, 0].mean()),
            sd_estimate=float(col[:, 0].std(ddof=1)) if len(done) > 1 else 0.0,
            mean_se_fix=float(col[:, 4].mean()),
            mean_se_est=float(col[:, 5].mean()),
        )
    return metrics
