"""Prognostic covariate adjustment (PROCOVA) for randomized trials.

A prognostic score is learned by OLS on historical control data and used as
a covariate in the trial regression. Standard errors come from two sandwich
estimators: ``V_fix`` treats the score as known, ``V_est`` also accounts for
the first-stage estimation.

>>> from procova import fit_prognostic, fit_procova, summarize
>>> fit = fit_procova(trial, fit_prognostic(historical))      # doctest: +SKIP
>>> summarize(fit)                                            # doctest: +SKIP
"""

__version__ = "0.1.0"

from .data import HistoricalDataset, TrialDataset
from .estimation import PrognosticFit, ProcovaFit, fit_procova, fit_prognostic
from .exceptions import (
    AllReplicationsFailed,
    DegenerateScore,
    DimensionMismatch,
    EmptyData,
    InvalidProbability,
    InvalidTarget,
    ProcovaError,
    RankDeficient,
    SingleArm,
    Singular,
)
from .inference import InferenceResult, summarize, t_quantile
from .models import ModelSpec, Target, contrast_vector, design_from_scores, second_stage_design

__all__ = [
    "TrialDataset",
    "HistoricalDataset",
    "PrognosticFit",
    "ProcovaFit",
    "fit_prognostic",
    "fit_procova",
    "summarize",
    "t_quantile",
    "InferenceResult",
    "ModelSpec",
    "Target",
    "contrast_vector",
    "design_from_scores",
    "second_stage_design",
    "ProcovaError",
    "RankDeficient",
    "Singular",
    "SingleArm",
    "EmptyData",
    "DimensionMismatch",
    "InvalidTarget",
    "InvalidProbability",
    "DegenerateScore",
    "AllReplicationsFailed",
]
