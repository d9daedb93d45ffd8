"""
Exact population checks on a discrete covariate law
===================================================

With finitely many support points every expectation is a finite sum, so
the orthogonality and derivative identities can be confirmed to rounding
precision.
"""

import numpy as np

from procova.models import ModelSpec
from procova.oracle import beta_star, beta_star_derivative_check, orthogonality_check, random_population

rng = np.random.default_rng(3)
pop = random_population(rng, size=6)
theta = rng.normal(size=3)

for spec in ModelSpec:
    print(spec.value)
    print("  beta*:", np.round(beta_star(pop, theta, spec), 4))
    print("  treatment contrast:", orthogonality_check(pop, theta, spec, np.eye(spec.n_params)[1]))
    print("  score contrast:    ", orthogonality_check(pop, theta, spec, np.eye(spec.n_params)[2]))
    print("  derivative gap:    ", beta_star_derivative_check(pop, theta, spec))

##############################################################################
# The treatment coefficient equals the difference in arm means for any
# theta.

m0, m1 = pop.probability @ pop.outcome_mean
print("\nE[Y|A=1] - E[Y|A=0] =", m1 - m0)
print("beta*_A at three thetas:", [round(float(beta_star(pop, rng.normal(size=3))[1]), 12) for _ in range(3)])
