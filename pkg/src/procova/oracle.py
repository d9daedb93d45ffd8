"""Exact population moments on a finite covariate support.

A :class:`DiscretePopulation` puts probability mass on finitely many
covariate vectors, assigns treatment independently with probability ``pi``
and specifies the conditional outcome mean ``m(a, W)``. Every expectation
below is therefore an exact finite sum, which lets the orthogonality
identities ``e' Q0^-1 Q1 = 0`` and the derivative identity
``d(e' beta*(theta))/dtheta' = -e' Q0^-1 Q1`` be checked to rounding
precision instead of Monte Carlo precision.

Centered variants use the population centering ``E[theta'W]`` here, not the
sample mean used by the estimators.

The code deliberately loops over support points and arms rather than
reusing the vectorized estimation path, so that it stays an independent
check on :mod:`procova.variance`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateScore, DimensionMismatch
from .linalg import invert
from .models import ModelSpec

__all__ = [
    "DiscretePopulation",
    "random_population",
    "population_moments",
    "expected_psi",
    "beta_star",
    "beta_star_jacobian_fd",
    "orthogonality_check",
    "beta_star_derivative_check",
]


@dataclass(frozen=True)
class DiscretePopulation:
    """Finite-support joint law of ``(W, A, Y)`` with ``A`` independent of ``W``.

    Attributes
    ----------
    support : ndarray, shape (K, q)
        Covariate vectors, intercept first.
    probability : ndarray, shape (K,)
    pi : float
        ``P[A = 1]``.
    outcome_mean : ndarray, shape (K, 2)
        ``outcome_mean[k, a] = E[Y | W = support[k], A = a]``.
    outcome_variance : float
        Conditional variance of the two-point outcome law
        ``m +/- sqrt(outcome_variance)``.
    """

    support: np.ndarray
    probability: np.ndarray
    pi: float
    outcome_mean: np.ndarray
    outcome_variance: float = 1.0

    def __post_init__(self):
        w = np.asarray(self.support, dtype=float)
        p = np.asarray(self.probability, dtype=float)
        m = np.asarray(self.outcome_mean, dtype=float)
        if w.ndim != 2 or p.shape != (w.shape[0],) or m.shape != (w.shape[0], 2):
            raise DimensionMismatch("support, probability and outcome_mean disagree in shape")
        if abs(p.sum() - 1.0) > 1e-14 or np.any(p < 0):
            raise ValueError(f"probabilities must be nonnegative and sum to 1 (sum={p.sum()!r})")
        if not 0.0 < self.pi < 1.0:
            raise ValueError("pi must lie in (0, 1)")
        object.__setattr__(self, "support", w)
        object.__setattr__(self, "probability", p)
        object.__setattr__(self, "outcome_mean", m)

    def cells(self):
        """Yield ``(weight, W, a, m(a, W))`` over the product support."""
        for k in range(self.support.shape[0]):
            for a, pa in ((0, 1.0 - self.pi), (1, self.pi)):
                yield self.probability[k] * pa, self.support[k], a, self.outcome_mean[k, a]

    def mean_covariates(self) -> np.ndarray:
        return self.probability @ self.support


def random_population(rng: np.random.Generator, size: int | None = None, dim: int = 3) -> DiscretePopulation:
    """Random population with ``size`` support points and ``dim``-vectors
    ``(1, w_1, ..., w_{dim-1})``; ``pi`` drawn from ``[0.1, 0.9]``."""
    if size is None:
        size = int(rng.integers(3, 9))
    w = np.column_stack([np.ones(size), rng.normal(size=(size, dim - 1))])
    p = rng.dirichlet(np.ones(size))
    p = p / p.sum()
    # force an exact unit sum in floating point
    p[-1] = 1.0 - p[:-1].sum()
    m = rng.normal(scale=2.0, size=(size, 2))
    return DiscretePopulation(w, p, float(rng.uniform(0.1, 0.9)), m, float(rng.uniform(0.5, 2.0)))


def _regressors(pop, theta, spec, w, a):
    s = float(theta @ w)
    d = np.array(w, dtype=float)
    if spec.centered:
        mw = pop.mean_covariates()
        s -= float(theta @ mw)
        d = d - mw
    if spec is ModelSpec.ANHECOVA:
        x = np.array([1.0, a, s, a * s])
        c = np.array([0.0, 0.0, 1.0, float(a)])
    else:
        x = np.array([1.0, a, s])
        c = np.array([0.0, 0.0, 1.0])
    return x, c, d


def _check(pop, theta, spec):
    spec = ModelSpec.parse(spec)
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (pop.support.shape[1],):
        raise DimensionMismatch(f"theta has shape {theta.shape}, support rows have {pop.support.shape[1]}")
    s = pop.support @ theta
    var = float(pop.probability @ (s - pop.probability @ s) ** 2)
    if var <= 1e-14 * max(1.0, float(pop.probability @ s**2)):
        raise DegenerateScore(f"Var[theta'W] = {var:.3g} under the population")
    return spec, theta


def beta_star(pop: DiscretePopulation, theta, spec=ModelSpec.ANCOVA) -> np.ndarray:
    """Solve ``E[X X'] beta = E[X Y]`` exactly."""
    spec, theta = _check(pop, theta, spec)
    p = spec.n_params
    gram = np.zeros((p, p))
    cross = np.zeros(p)
    for wt, w, a, m in pop.cells():
        x, _, _ = _regressors(pop, theta, spec, w, a)
        gram += wt * np.outer(x, x)
        cross += wt * x * m
    return np.linalg.solve(gram, cross)


def expected_psi(pop: DiscretePopulation, beta, theta, spec=ModelSpec.ANCOVA) -> np.ndarray:
    """``E[(Y - beta'X) X]`` under the population."""
    spec, theta = _check(pop, theta, spec)
    beta = np.asarray(beta, dtype=float)
    out = np.zeros(spec.n_params)
    for wt, w, a, m in pop.cells():
        x, _, _ = _regressors(pop, theta, spec, w, a)
        out += wt * (m - beta @ x) * x
    return out


def population_moments(pop: DiscretePopulation, theta, spec=ModelSpec.ANCOVA) -> tuple:
    """Return ``(Q0, Q1, beta_star)`` at ``theta``.

    ``Q0 = -E[X X']`` and ``Q1 = E[d psi / d theta']`` evaluated at
    ``(beta*(theta), theta)``.
    """
    spec, theta = _check(pop, theta, spec)
    b = beta_star(pop, theta, spec)
    p, q = spec.n_params, theta.size
    q0 = np.zeros((p, p))
    q1 = np.zeros((p, q))
    for wt, w, a, m in pop.cells():
        x, c, d = _regressors(pop, theta, spec, w, a)
        resid = m - b @ x
        q0 -= wt * np.outer(x, x)
        q1 += wt * (-(b @ c) * np.outer(x, d) + resid * np.outer(c, d))
    return q0, q1, b


def beta_star_jacobian_fd(pop: DiscretePopulation, theta, spec=ModelSpec.ANCOVA, step: float = 1e-6) -> np.ndarray:
    """Central finite-difference Jacobian of ``theta -> beta*(theta)``."""
    spec, theta = _check(pop, theta, spec)
    cols = []
    for j in range(theta.size):
        h = np.zeros_like(theta)
        h[j] = step
        cols.append((beta_star(pop, theta + h, spec) - beta_star(pop, theta - h, spec)) / (2 * step))
    return np.column_stack(cols)


def orthogonality_check(pop: DiscretePopulation, theta, spec, e) -> float:
    """Largest entry of ``|e' Q0^-1 Q1|``."""
    q0, q1, _ = population_moments(pop, theta, spec)
    e = np.asarray(e, dtype=float)
    if e.size != q0.shape[0]:
        raise DimensionMismatch(f"contrast has {e.size} entries, model has {q0.shape[0]}")
    return float(np.max(np.abs(e @ invert(q0) @ q1)))


def beta_star_derivative_check(pop: DiscretePopulation, theta, spec=ModelSpec.ANCOVA, step: float = 1e-6) -> float:
    """Largest entrywise gap between the finite-difference Jacobian of
    ``beta*`` and ``-Q0^-1 Q1``."""
    q0, q1, _ = population_moments(pop, theta, spec)
    analytic = -invert(q0) @ q1
    return float(np.max(np.abs(beta_star_jacobian_fd(pop, theta, spec, step) - analytic)))
