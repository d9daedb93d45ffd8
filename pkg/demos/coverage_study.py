"""
Coverage and variance ratios under covariate shift
==================================================

Replicates scenario D-5 (nonlinear outcomes, shifted historical W1 and U)
at a small scale. Increase ``reps`` for smoother numbers.
"""

from procova.simulation import ScenarioConfig, run_replications

reps = 200

for n, n_hist in ((100, 1000), (500, 5000), (100, 25)):
    m = run_replications(ScenarioConfig("D", 5, n, n_hist, replications=reps, seed=0))
    print(f"\nn={n} n_hist={n_hist} ({m.replications_completed} completed)")
    for label, c in m.coefficients.items():
        print(f"  {label:<6} cover fix={c.coverage_fix:.3f} est={c.coverage_est:.3f}  mean ratio={c.mean_variance_ratio:.3f}")

##############################################################################
# The same runs from the shell::
#
#     procova simulate --scenario D --shift 5 --n 100 500 --hist-ratio 10 --reps 1000 --out d5
