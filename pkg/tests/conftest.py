import pathlib

import numpy as np

from procova.data import HistoricalDataset, TrialDataset

DATA = pathlib.Path(__file__).parent / "data"


def random_trial(rng, n, dim=2, effect=0.7):
    w = np.column_stack([np.ones(n), rng.normal(size=(n, dim))])
    a = np.zeros(n)
    a[rng.permutation(n)[: n // 2]] = 1.0
    y = 1.0 + effect * a + w[:, 1:] @ np.linspace(1.0, -0.5, dim) + 0.4 * w[:, 1] ** 2 + rng.normal(size=n)
    return TrialDataset(w, a, y)


def random_historical(rng, n, dim=2):
    w = np.column_stack([np.ones(n), rng.normal(size=(n, dim))])
    y = 1.0 + w[:, 1:] @ np.linspace(1.0, -0.5, dim) + 0.4 * w[:, 1] ** 2 + rng.normal(size=n)
    return HistoricalDataset(w, y)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
