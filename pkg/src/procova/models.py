"""Design matrices and estimating functions for the two regression stages.

The first stage regresses historical outcomes on covariates. The second
stage regresses trial outcomes on an intercept, the treatment indicator and
the prognostic score ``theta' W``; depending on the :class:`ModelSpec` the
score is centered at its trial-sample mean and/or interacted with
treatment.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .data import HistoricalDataset, TrialDataset
from .exceptions import DimensionMismatch, EmptyData, InvalidTarget
from .linalg import as_vector

__all__ = [
    "ModelSpec",
    "Target",
    "SecondStageDesign",
    "prognostic_design",
    "second_stage_design",
    "design_from_scores",
    "contrast_vector",
    "coefficient_labels",
    "estimating_function_mean",
]


class ModelSpec(enum.Enum):
    """Second-stage model variant."""

    ANCOVA = "ancova"
    ANCOVA_CENTERED = "ancova-centered"
    ANHECOVA = "anhecova"

    @property
    def n_params(self) -> int:
        return 4 if self is ModelSpec.ANHECOVA else 3

    @property
    def centered(self) -> bool:
        return self is not ModelSpec.ANCOVA

    @classmethod
    def parse(cls, value) -> "ModelSpec":
        if value is None:
            return cls.ANCOVA
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown model {value!r}; expected one of {[m.value for m in cls]}")


class Target(enum.Enum):
    INTERCEPT = "intercept"
    TREATMENT = "treatment"
    SCORE = "score"
    SCORE_BY_TREATMENT = "score-by-treatment"
    CONTROL_MEAN_PLUS_EFFECT = "control-mean-plus-effect"


_LABELS = ("beta0", "betaA", "beta1", "beta2")


def coefficient_labels(spec: ModelSpec) -> tuple:
    return _LABELS[: ModelSpec.parse(spec).n_params]


def contrast_vector(spec: ModelSpec, target: Target) -> np.ndarray:
    """Vector ``e`` such that ``e' beta`` is the requested combination.

    ``SCORE_BY_TREATMENT`` needs the interaction model and
    ``CONTROL_MEAN_PLUS_EFFECT`` (the treated-arm mean ``beta0 + betaA``)
    needs a centered score; anything else raises :class:`InvalidTarget`.
    """
    spec = ModelSpec.parse(spec)
    target = Target(target)
    e = np.zeros(spec.n_params)
    if target is Target.INTERCEPT:
        e[0] = 1.0
    elif target is Target.TREATMENT:
        e[1] = 1.0
    elif target is Target.SCORE:
        e[2] = 1.0
    elif target is Target.SCORE_BY_TREATMENT:
        if spec is not ModelSpec.ANHECOVA:
            raise InvalidTarget(f"{target.value} requires the anhecova model, not {spec.value}")
        e[3] = 1.0
    else:
        if not spec.centered:
            raise InvalidTarget(f"{target.value} requires a centered score model")
        e[0] = e[1] = 1.0
    return e


@dataclass(frozen=True)
class SecondStageDesign:
    """Second-stage regressors together with the score they were built from.

    Attributes
    ----------
    design : ndarray, shape (n, p)
        Columns ``(1, A, s)`` or ``(1, A, s, A*s)`` where ``s`` is the
        (possibly centered) score.
    centering_offset : float
        Sample mean subtracted from the raw scores, 0 for plain ANCOVA.
    score_column : ndarray, shape (n,)
        Raw, uncentered scores ``theta' W_i``.
    spec : ModelSpec
    """

    design: np.ndarray
    centering_offset: float
    score_column: np.ndarray
    spec: ModelSpec

    @property
    def treatment(self) -> np.ndarray:
        return self.design[:, 1]

    @property
    def score_derivative_columns(self) -> np.ndarray:
        """``dX_i / ds_i`` stacked by row: (0,0,1) or (0,0,1,A_i)."""
        n, p = self.design.shape
        c = np.zeros((n, p))
        c[:, 2] = 1.0
        if p == 4:
            c[:, 3] = self.design[:, 1]
        return c


def prognostic_design(historical: HistoricalDataset) -> np.ndarray:
    """First-stage design: the rows ``W~_i'`` of the historical sample."""
    if historical.n == 0:
        raise EmptyData("historical dataset has no rows")
    return np.array(historical.covariates)


def design_from_scores(treatment, scores, spec: ModelSpec = ModelSpec.ANCOVA) -> SecondStageDesign:
    """Assemble the second-stage design from precomputed prognostic scores.

    This is the entry point for score models other than the linear
    ``theta' W`` (any fitted ``rho(W_i)`` can be passed as ``scores``).
    """
    spec = ModelSpec.parse(spec)
    a = as_vector(treatment, "treatment")
    s = as_vector(scores, "scores")
    if a.shape != s.shape:
        raise DimensionMismatch(f"{a.size} treatment values but {s.size} scores")
    offset = float(s.mean()) if spec.centered and s.size else 0.0
    sc = s - offset
    cols = [np.ones_like(s), a, sc]
    if spec is ModelSpec.ANHECOVA:
        cols.append(a * sc)
    design = np.column_stack(cols)
    design.setflags(write=False)
    s = s.copy()
    s.setflags(write=False)
    return SecondStageDesign(design=design, centering_offset=offset, score_column=s, spec=spec)


def second_stage_design(trial: TrialDataset, theta, spec: ModelSpec = ModelSpec.ANCOVA) -> SecondStageDesign:
    theta = as_vector(theta, "theta")
    if theta.size != trial.n_covariates:
        raise DimensionMismatch(
            f"theta has {theta.size} entries but trial covariates have {trial.n_covariates}"
        )
    return design_from_scores(trial.treatment, trial.covariates @ theta, spec)


def estimating_function_mean(trial: TrialDataset, beta, theta, spec: ModelSpec = ModelSpec.ANCOVA) -> np.ndarray:
    """Empirical mean ``(1/n) sum_i (Y_i - beta'X_i) X_i`` of the second-stage
    estimating function at ``(beta, theta)``.

    For centered variants the score is recentered at the sample mean of
    ``theta' W_j`` for this ``theta``, so the map differentiates exactly
    like the fitted model.
    """
    d = second_stage_design(trial, theta, spec)
    beta = as_vector(beta, "beta")
    if beta.size != d.design.shape[1]:
        raise DimensionMismatch(f"beta has {beta.size} entries, model needs {d.design.shape[1]}")
    resid = trial.outcome - d.design @ beta
    return d.design.T @ resid / trial.n
