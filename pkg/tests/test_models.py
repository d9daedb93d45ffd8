import numpy as np
import pytest

from procova.data import HistoricalDataset, TrialDataset
from procova.estimation import fit_prognostic
from procova.exceptions import DimensionMismatch, EmptyData, InvalidTarget
from procova.io import read_historical_csv
from procova.linalg import solve_least_squares
from procova.models import (
    ModelSpec,
    Target,
    contrast_vector,
    design_from_scores,
    prognostic_design,
    second_stage_design,
)

from .conftest import DATA, random_trial


def test_prognostic_design_rows():
    w = np.array([[1, 2.0], [1, -1.0], [1, 0.5]])
    hist = HistoricalDataset(w, np.zeros(3))
    np.testing.assert_array_equal(prognostic_design(hist), w)


def test_prognostic_design_empty():
    with pytest.raises(EmptyData):
        prognostic_design(HistoricalDataset(np.empty((0, 2)), np.empty(0)))


def test_prognostic_design_seven_covariates():
    hist = read_historical_csv(DATA / "hist7.csv")
    d = prognostic_design(hist)
    assert d.shape == (20, 8)
    np.testing.assert_array_equal(d[:, 0], 1.0)


def test_ancova_design_rows():
    w = np.column_stack([np.ones(4), [0.3, -1.0, 2.0, 0.0]])
    trial = TrialDataset(w, [1, 0, 1, 0], np.zeros(4))
    d = second_stage_design(trial, [0.0, 1.0], ModelSpec.ANCOVA)
    np.testing.assert_array_equal(d.design, np.column_stack([np.ones(4), [1, 0, 1, 0], w[:, 1]]))
    assert d.centering_offset == 0.0


def test_centered_score_column():
    d = design_from_scores([0, 1, 0], [1.0, 2.0, 3.0], ModelSpec.ANCOVA_CENTERED)
    np.testing.assert_allclose(d.design[:, 2], [-1, 0, 1])
    assert d.centering_offset == 2.0
    np.testing.assert_array_equal(d.score_column, [1, 2, 3])


def test_anhecova_interaction_column():
    d = design_from_scores([1, 0, 1], [1.0, 2.0, 3.0], ModelSpec.ANHECOVA)
    np.testing.assert_allclose(d.design[:, 2], [-1, 0, 1])
    np.testing.assert_allclose(d.design[:, 3], [-1, 0, 1])


@pytest.mark.parametrize("spec", list(ModelSpec))
def test_design_invariants(spec):
    trial = random_trial(np.random.default_rng(4), 50)
    d = second_stage_design(trial, [0.3, 1.2, -0.4], spec).design
    assert d.shape[1] == spec.n_params
    np.testing.assert_array_equal(d[:, 0], 1.0)
    assert set(np.unique(d[:, 1])) <= {0.0, 1.0}
    if spec.centered:
        assert abs(d[:, 2].mean()) <= 1e-10 * np.abs(d[:, 2]).max()
    if spec is ModelSpec.ANHECOVA:
        np.testing.assert_array_equal(d[:, 3], d[:, 1] * d[:, 2])


def test_theta_dimension_checked():
    trial = random_trial(np.random.default_rng(0), 10)
    with pytest.raises(DimensionMismatch):
        second_stage_design(trial, [1.0, 2.0], ModelSpec.ANCOVA)


def test_contrast_vectors():
    np.testing.assert_array_equal(contrast_vector(ModelSpec.ANCOVA, Target.TREATMENT), [0, 1, 0])
    np.testing.assert_array_equal(contrast_vector(ModelSpec.ANHECOVA, Target.CONTROL_MEAN_PLUS_EFFECT), [1, 1, 0, 0])
    np.testing.assert_array_equal(contrast_vector(ModelSpec.ANHECOVA, Target.SCORE_BY_TREATMENT), [0, 0, 0, 1])
    with pytest.raises(InvalidTarget):
        contrast_vector(ModelSpec.ANCOVA, Target.SCORE_BY_TREATMENT)
    with pytest.raises(InvalidTarget):
        contrast_vector(ModelSpec.ANCOVA, Target.CONTROL_MEAN_PLUS_EFFECT)


def test_model_spec_parse():
    assert ModelSpec.parse(None) is ModelSpec.ANCOVA
    assert ModelSpec.parse("ancova_centered") is ModelSpec.ANCOVA_CENTERED
    with pytest.raises(ValueError):
        ModelSpec.parse("ols")


def centering_identity_gap(trial, theta):
    """Largest violation of the centered-vs-uncentered coefficient relations
    for the interaction model."""
    s = trial.covariates @ theta
    a = trial.treatment
    dbar = s.mean()
    uncentered = np.column_stack([np.ones_like(s), a, s, a * s])
    b = solve_least_squares(uncentered, trial.outcome)
    emp = solve_least_squares(second_stage_design(trial, theta, ModelSpec.ANHECOVA).design, trial.outcome)
    scale = max(1.0, np.abs(b).max())
    return max(
        abs(emp[0] - (b[0] + dbar * b[2])),
        abs(emp[1] - (b[1] + dbar * b[3])),
        abs(emp[2] - b[2]),
        abs(emp[3] - b[3]),
    ) / scale


def test_centering_identity_single_dataset():
    rng = np.random.default_rng(5)
    trial = random_trial(rng, 80)
    assert centering_identity_gap(trial, rng.normal(size=3) + [3, 0, 0]) < 1e-8


@pytest.mark.parametrize("spec", [ModelSpec.ANCOVA_CENTERED, ModelSpec.ANHECOVA])
def test_treatment_effect_invariant_to_score_shift(spec):
    rng = np.random.default_rng(8)
    trial = random_trial(rng, 60)
    s = trial.covariates @ [0.5, 1.0, -2.0]
    fit = lambda scores: solve_least_squares(design_from_scores(trial.treatment, scores, spec).design, trial.outcome)
    for shift in (-100.0, 3.7, 1e3):
        assert abs(fit(s)[1] - fit(s + shift)[1]) < 1e-8


def test_historical_fit_feeds_design():
    hist = read_historical_csv(DATA / "hist30.csv")
    prog = fit_prognostic(hist)
    trial = random_trial(np.random.default_rng(1), 20)
    d = second_stage_design(trial, prog.theta_hat)
    np.testing.assert_allclose(d.score_column, trial.covariates @ prog.theta_hat)
