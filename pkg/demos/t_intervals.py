"""
Student-t critical values
=========================
"""

from scipy import stats

from procova.inference import t_quantile

for df in (1, 5, 30, 197, 10**6):
    q = t_quantile(df, 0.975)
    print(f"df={df:<8} q={q:.12f}  scipy={stats.t.ppf(0.975, df):.12f}")
