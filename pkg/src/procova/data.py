"""Trial and historical datasets.

Covariate matrices always carry the intercept as their first column; the
ingestion layer (:mod:`procova.io`) prepends it, nothing downstream infers
it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DimensionMismatch, EmptyData


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.float64, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class TrialDataset:
    """Randomized trial sample ``(W_i, A_i, Y_i)``.

    Parameters
    ----------
    covariates : ndarray, shape (n, q)
        Covariate rows, intercept first.
    treatment : ndarray, shape (n,)
        Assignments in ``{0, 1}``.
    outcome : ndarray, shape (n,)
    covariate_names : tuple of str, optional
        Names of the non-intercept covariates.
    """

    covariates: np.ndarray
    treatment: np.ndarray
    outcome: np.ndarray
    covariate_names: tuple = field(default=())

    def __post_init__(self):
        w = _frozen(self.covariates)
        a = _frozen(self.treatment)
        y = _frozen(self.outcome)
        if w.ndim != 2 or a.ndim != 1 or y.ndim != 1:
            raise DimensionMismatch("covariates must be 2-d; treatment and outcome 1-d")
        if not (w.shape[0] == a.shape[0] == y.shape[0]):
            raise DimensionMismatch(
                f"row counts differ: covariates {w.shape[0]}, treatment {a.shape[0]}, "
                f"outcome {y.shape[0]}"
            )
        if not np.all(np.isin(a, (0.0, 1.0))):
            raise ValueError("treatment entries must be 0 or 1")
        for name, arr in (("covariates", w), ("outcome", y)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite entries")
        object.__setattr__(self, "covariates", w)
        object.__setattr__(self, "treatment", a)
        object.__setattr__(self, "outcome", y)
        object.__setattr__(self, "covariate_names", tuple(self.covariate_names))

    @property
    def n(self) -> int:
        return self.covariates.shape[0]

    @property
    def n_covariates(self) -> int:
        """Length of each covariate vector, intercept included."""
        return self.covariates.shape[1]


@dataclass(frozen=True)
class HistoricalDataset:
    """Historical control sample ``(W~_i, Y~_i)``; treatment is identically 0."""

    covariates: np.ndarray
    outcome: np.ndarray
    covariate_names: tuple = field(default=())

    def __post_init__(self):
        w = _frozen(self.covariates)
        y = _frozen(self.outcome)
        if w.ndim != 2 or y.ndim != 1:
            raise DimensionMismatch("covariates must be 2-d and outcome 1-d")
        if w.shape[0] != y.shape[0]:
            raise DimensionMismatch(
                f"row counts differ: covariates {w.shape[0]}, outcome {y.shape[0]}"
            )
        if w.shape[0] == 0:
            raise EmptyData("historical dataset has no rows")
        for name, arr in (("covariates", w), ("outcome", y)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite entries")
        object.__setattr__(self, "covariates", w)
        object.__setattr__(self, "outcome", y)
        object.__setattr__(self, "covariate_names", tuple(self.covariate_names))

    @property
    def n(self) -> int:
        return self.covariates.shape[0]

    @property
    def n_covariates(self) -> int:
        return self.covariates.shape[1]
