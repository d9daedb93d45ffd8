"""Two-stage fitting: prognostic model on historical controls, then the
score-adjusted regression on the trial sample."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import HistoricalDataset, TrialDataset
from .exceptions import EmptyData, RankDeficient, SingleArm
from .linalg import solve_least_squares
from .models import ModelSpec, SecondStageDesign, design_from_scores, prognostic_design
from .variance import SandwichComponents, assemble, compute_q0_omega, compute_q1, compute_v_theta

__all__ = ["PrognosticFit", "ProcovaFit", "fit_prognostic", "fit_procova"]


@dataclass(frozen=True)
class PrognosticFit:
    """First-stage OLS fit.

    Attributes
    ----------
    theta_hat : ndarray, shape (q,)
    n_hist : int
    residuals : ndarray, shape (n_hist,)
    q2_hat : ndarray, shape (q, q)
        ``-(1/n_hist) sum W_i W_i'``.
    q3_hat : ndarray, shape (q, q)
        ``(1/n_hist) sum e_i^2 W_i W_i'``.
    """

    theta_hat: np.ndarray
    n_hist: int
    residuals: np.ndarray
    q2_hat: np.ndarray
    q3_hat: np.ndarray

    def scores(self, covariates) -> np.ndarray:
        return np.asarray(covariates, dtype=float) @ self.theta_hat


@dataclass(frozen=True)
class ProcovaFit:
    beta_hat: np.ndarray
    spec: ModelSpec
    n_trial: int
    n_hist: int
    residuals: np.ndarray
    design: SecondStageDesign
    theta_hat: np.ndarray
    q0_hat: np.ndarray
    omega_hat: np.ndarray
    q1_hat: np.ndarray
    v_theta_hat: np.ndarray
    v_fix: np.ndarray
    v_est: np.ndarray

    @property
    def kappa_hat(self) -> float:
        return self.n_trial / self.n_hist

    @property
    def components(self) -> SandwichComponents:
        return SandwichComponents(self.q0_hat, self.omega_hat, self.q1_hat, self.v_theta_hat, self.kappa_hat)


def fit_prognostic(historical: HistoricalDataset) -> PrognosticFit:
    """OLS of historical outcomes on historical covariates."""
    w = prognostic_design(historical)
    y = historical.outcome
    n, q = w.shape
    if n <= q:
        raise RankDeficient(f"{n} historical rows cannot identify {q} prognostic coefficients")
    theta = solve_least_squares(w, y)
    resid = y - w @ theta
    q2 = -(w.T @ w) / n
    we = w * resid[:, None]
    q3 = (we.T @ we) / n
    return PrognosticFit(theta_hat=theta, n_hist=n, residuals=resid, q2_hat=q2, q3_hat=q3)


def fit_procova(
    trial: TrialDataset,
    prog: PrognosticFit,
    spec: ModelSpec = ModelSpec.ANCOVA,
) -> ProcovaFit:
    """Second-stage OLS with the estimated prognostic score plugged in.

    Both ``V_fix`` and ``V_est`` are computed eagerly.

    Raises
    ------
    EmptyData
        Trial sample has no rows.
    SingleArm
        Every subject has the same treatment assignment.
    RankDeficient
        The second-stage design is degenerate, typically because the score
        is constant across trial subjects.
    """
    spec = ModelSpec.parse(spec)
    if trial.n == 0:
        raise EmptyData("trial dataset has no rows")
    a = trial.treatment
    if np.all(a == a[0]):
        raise SingleArm(f"all {trial.n} trial subjects have A={int(a[0])}")
    design = design_from_scores(a, prog.scores(trial.covariates), spec)
    beta = solve_least_squares(design.design, trial.outcome)
    resid = trial.outcome - design.design @ beta
    q0, omega = compute_q0_omega(design, resid)
    q1 = compute_q1(trial, beta, prog.theta_hat, spec, design=design)
    v_theta = compute_v_theta(prog)
    comps = SandwichComponents(q0, omega, q1, v_theta, trial.n / prog.n_hist)
    v_fix, v_est = assemble(comps)
    return ProcovaFit(
        beta_hat=beta,
        spec=spec,
        n_trial=trial.n,
        n_hist=prog.n_hist,
        residuals=resid,
        design=design,
        theta_hat=np.array(prog.theta_hat),
        q0_hat=q0,
        omega_hat=omega,
        q1_hat=q1,
        v_theta_hat=v_theta,
        v_fix=v_fix,
        v_est=v_est,
    )
