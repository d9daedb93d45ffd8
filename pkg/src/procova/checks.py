"""Self-verification suite behind ``procova check``.

Runs the exact population identities from :mod:`procova.oracle` on a family
of random discrete populations and compares the analytic ``Q1_hat`` with a
central finite difference of the empirical estimating function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .estimation import fit_procova, fit_prognostic
from .models import ModelSpec, estimating_function_mean
from .oracle import (
    beta_star,
    beta_star_derivative_check,
    expected_psi,
    orthogonality_check,
    random_population,
)
from .simulation import ScenarioConfig, generate_pair

__all__ = [
    "TOLERANCES",
    "ORTHOGONAL_CONTRASTS",
    "CheckResult",
    "finite_difference_q1",
    "run_checks",
]

TOLERANCES = {
    "orthogonality": 1e-10,
    "derivative": 1e-5,
    "q1_fd": 1e-4,
    "expected_psi": 1e-12,
}

PROFILES = {"default": 1.0, "strict": 0.5}

#: contrasts ``e`` with ``e' Q0^-1 Q1 = 0`` for each model
ORTHOGONAL_CONTRASTS = {
    ModelSpec.ANCOVA: [(0, 1, 0)],
    ModelSpec.ANHECOVA: [(0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0)],
    ModelSpec.ANCOVA_CENTERED: [(0, 1, 0), (1, 0, 0), (1, 1, 0)],
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_discrepancy: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_discrepancy < self.tolerance)


def finite_difference_q1(trial, beta, theta, spec=ModelSpec.ANCOVA, rel_step: float = 1e-5) -> np.ndarray:
    """Central difference of ``theta -> Psi_n(beta, theta)``, step
    ``rel_step * max(1, |theta_j|)`` per coordinate."""
    theta = np.asarray(theta, dtype=float)
    cols = []
    for j in range(theta.size):
        h = rel_step * max(1.0, abs(theta[j]))
        tp, tm = theta.copy(), theta.copy()
        tp[j] += h
        tm[j] -= h
        diff = estimating_function_mean(trial, beta, tp, spec) - estimating_function_mean(trial, beta, tm, spec)
        cols.append(diff / (tp[j] - tm[j]))
    return np.column_stack(cols)


def population_family(n: int = 20, seed: int = 0):
    """``n`` random ``(population, theta)`` pairs."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        pop = random_population(rng)
        out.append((pop, rng.normal(size=pop.support.shape[1])))
    return out


def q1_gate_datasets(n_datasets: int = 50, n: int = 200, seed: int = 0):
    """Simulated trial/historical pairs cycling through outcome models and
    shift patterns."""
    out = []
    for i in range(n_datasets):
        model = "ABCD"[i % 4]
        shift = 1 + i % 9
        cfg = ScenarioConfig(model, shift, n, 2 * n, replications=1, seed=seed)
        out.append(generate_pair(cfg, i))
    return out


def q1_gate(spec, datasets, q1_perturbation: float = 0.0) -> float:
    worst = 0.0
    for trial, hist in datasets:
        fit = fit_procova(trial, fit_prognostic(hist), spec)
        q1 = np.array(fit.q1_hat)
        q1[0, 0] += q1_perturbation
        fd = finite_difference_q1(trial, fit.beta_hat, fit.theta_hat, spec)
        worst = max(worst, float(np.max(np.abs(q1 - fd))))
    return worst


def run_checks(profile: str = "default", q1_perturbation: float = 0.0, n_populations: int = 20, n_datasets: int = 50) -> list:
    """Run every check; ``q1_perturbation`` is added to one ``Q1_hat`` entry
    to demonstrate that the gate fails on a wrong derivative."""
    scale = PROFILES[profile]
    tol = {k: v * scale for k, v in TOLERANCES.items()}
    family = population_family(n_populations)
    results = []
    for spec, contrasts in ORTHOGONAL_CONTRASTS.items():
        for e in contrasts:
            worst = max(orthogonality_check(pop, th, spec, e) for pop, th in family)
            label = ",".join(str(x) for x in e)
            results.append(CheckResult(f"orthogonality {spec.value} e=({label})", worst, tol["orthogonality"]))
    for spec in ModelSpec:
        worst = max(beta_star_derivative_check(pop, th, spec) for pop, th in family)
        results.append(CheckResult(f"beta* derivative {spec.value}", worst, tol["derivative"]))
        worst = max(
            float(np.max(np.abs(expected_psi(pop, beta_star(pop, th, spec), th, spec)))) for pop, th in family
        )
        results.append(CheckResult(f"E[psi(beta*)]=0 {spec.value}", worst, tol["expected_psi"]))
    datasets = q1_gate_datasets(n_datasets)
    for spec in ModelSpec:
        worst = q1_gate(spec, datasets, q1_perturbation)
        results.append(CheckResult(f"Q1 finite difference {spec.value}", worst, tol["q1_fd"]))
    return results
