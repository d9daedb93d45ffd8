"""Sandwich variance estimators for the two-stage fit.

``V_fix = Q0^-1 Omega Q0^-T`` treats the prognostic score as known.
``V_est = V_fix + (n/n_hist) Q0^-1 Q1 V_theta Q1' Q0^-T`` adds the
first-stage estimation uncertainty. Both are variances of
``sqrt(n) * beta_hat``; divide by ``n`` for standard errors.

Derivative of the second-stage estimating function
--------------------------------------------------
With ``psi_i = (Y_i - beta'X_i) X_i`` and ``X_i`` depending on ``theta``
only through the score, write ``dX_i/dtheta' = c_i d_i'`` where ``c_i`` is
``dX_i/ds_i`` ((0,0,1) or (0,0,1,A_i)) and ``d_i`` is ``W_i`` for the
uncentered score or ``W_i - mean(W)`` when the score is centered at its
sample mean. Then::

    dpsi_i/dtheta' = -(beta'c_i) X_i d_i' + e_i c_i d_i'

which for plain ANCOVA reproduces the familiar rows
``-beta1 W_i'``, ``-beta1 A_i W_i'`` and
``Y_i W_i' - beta0 W_i' - betaA A_i W_i' - 2 beta1 (theta'W_i) W_i'``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import TrialDataset
from .exceptions import DimensionMismatch
from .linalg import as_vector, invert, symmetrize
from .models import ModelSpec, SecondStageDesign, second_stage_design

__all__ = [
    "SandwichComponents",
    "compute_q0_omega",
    "compute_q1",
    "compute_v_theta",
    "assemble",
]


@dataclass(frozen=True)
class SandwichComponents:
    q0_hat: np.ndarray
    omega_hat: np.ndarray
    q1_hat: np.ndarray
    v_theta_hat: np.ndarray
    kappa_hat: float


def compute_q0_omega(design: SecondStageDesign, residuals) -> tuple:
    """Bread and meat of the second-stage sandwich.

    Returns
    -------
    q0_hat : ndarray, shape (p, p)
        ``-(1/n) sum X_i X_i'``.
    omega_hat : ndarray, shape (p, p)
        ``(1/n) sum e_i^2 X_i X_i'``.
    """
    x = design.design if isinstance(design, SecondStageDesign) else np.asarray(design, float)
    e = as_vector(residuals, "residuals")
    n = x.shape[0]
    if e.size != n:
        raise DimensionMismatch(f"{e.size} residuals for a design with {n} rows")
    q0 = -(x.T @ x) / n
    xe = x * e[:, None]
    omega = (xe.T @ xe) / n
    return q0, omega


def compute_q1(
    trial: TrialDataset,
    beta_hat,
    theta_hat,
    spec: ModelSpec = ModelSpec.ANCOVA,
    design: SecondStageDesign | None = None,
) -> np.ndarray:
    """Mean derivative of the second-stage estimating function in ``theta``.

    Parameters
    ----------
    trial : TrialDataset
    beta_hat : array_like, shape (p,)
    theta_hat : array_like, shape (q,)
    spec : ModelSpec
    design : SecondStageDesign, optional
        Reused if already built for ``(trial, theta_hat, spec)``.

    Returns
    -------
    ndarray, shape (p, q)
    """
    spec = ModelSpec.parse(spec)
    beta = as_vector(beta_hat, "beta_hat")
    if design is None:
        design = second_stage_design(trial, theta_hat, spec)
    x = design.design
    if beta.size != x.shape[1]:
        raise DimensionMismatch(f"beta_hat has {beta.size} entries, model needs {x.shape[1]}")
    n = trial.n
    w = trial.covariates
    d = w - w.mean(axis=0) if spec.centered else w
    c = design.score_derivative_columns
    e = trial.outcome - x @ beta
    slope = c @ beta
    return (-(x.T @ (slope[:, None] * d)) + c.T @ (e[:, None] * d)) / n


def compute_v_theta(prog) -> np.ndarray:
    """First-stage sandwich ``Q2^-1 Q3 Q2^-T`` from a :class:`PrognosticFit`."""
    q2_inv = invert(prog.q2_hat)
    return symmetrize(q2_inv @ prog.q3_hat @ q2_inv.T)


def assemble(components: SandwichComponents) -> tuple:
    """Combine sandwich pieces into ``(v_fix, v_est)``."""
    q0_inv = invert(components.q0_hat)
    v_fix = symmetrize(q0_inv @ components.omega_hat @ q0_inv.T)
    a = q0_inv @ components.q1_hat
    add_on = symmetrize(a @ components.v_theta_hat @ a.T)
    v_est = symmetrize(v_fix + components.kappa_hat * add_on)
    return v_fix, v_est
