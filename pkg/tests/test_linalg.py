from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from procova.exceptions import DimensionMismatch, RankDeficient, Singular
from procova.linalg import invert, quadratic_form, solve_least_squares


def exact_normal_equations(x, y):
    """Solve X'X b = X'y in rational arithmetic (Gauss-Jordan)."""
    x = [[Fraction(v) for v in row] for row in x]
    y = [Fraction(v) for v in y]
    p = len(x[0])
    a = [[sum(r[i] * r[j] for r in x) for j in range(p)] + [sum(r[i] * yy for r, yy in zip(x, y))] for i in range(p)]
    for c in range(p):
        piv = next(r for r in range(c, p) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        a[c] = [v / a[c][c] for v in a[c]]
        for r in range(p):
            if r != c and a[r][c] != 0:
                a[r] = [u - a[r][c] * v for u, v in zip(a[r], a[c])]
    return [row[-1] for row in a]


def test_intercept_only_mean():
    np.testing.assert_allclose(solve_least_squares(np.ones((4, 1)), [3, 3, 3, 3]), [3.0])


def test_exact_line():
    x = np.array([[1, 0], [1, 1], [1, 2], [1, 3]], float)
    np.testing.assert_allclose(solve_least_squares(x, [1, 3, 5, 7]), [1.0, 2.0], atol=1e-14)


def test_matches_exact_normal_equations():
    x = [[1, 2, -1], [1, 0, 3], [1, -1, 2], [1, 4, 0], [1, 1, 1]]
    y = [3, -1, 2, 5, 0]
    # frozen from the rational oracle below: (125/67, 33/67, -44/67)
    expected = [125 / 67, 33 / 67, -44 / 67]
    assert exact_normal_equations(x, y) == [Fraction(125, 67), Fraction(33, 67), Fraction(-44, 67)]
    np.testing.assert_allclose(solve_least_squares(x, y), expected, rtol=0, atol=1e-10)


def test_rank_deficient_design():
    x = np.column_stack([np.ones(5), np.arange(5.0), 2 * np.arange(5.0)])
    with pytest.raises(RankDeficient):
        solve_least_squares(x, np.arange(5.0))


def test_too_few_rows():
    with pytest.raises(RankDeficient):
        solve_least_squares(np.ones((1, 2)), [1.0])


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        solve_least_squares(np.ones((3, 1)), [1.0, np.nan, 2.0])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(3, 40), st.integers(1, 6))
def test_residual_orthogonal_to_columns(seed, extra, p):
    rng = np.random.default_rng(seed)
    n = p + extra
    x = rng.normal(size=(n, p)) * rng.uniform(0.1, 10, size=p)
    y = rng.normal(size=n) * 5
    b = solve_least_squares(x, y)
    r = y - x @ b
    for j in range(p):
        assert abs(x[:, j] @ r) <= 1e-8 * np.linalg.norm(y) * np.linalg.norm(x[:, j])


def test_invert_examples():
    np.testing.assert_array_equal(invert(np.eye(3)), np.eye(3))
    np.testing.assert_allclose(invert(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))


def test_invert_multiply_back():
    m = np.array([[4.0, -2.0, 1.0], [3.0, 6.0, -4.0], [2.0, 1.0, 8.0]])
    np.testing.assert_allclose(m @ invert(m), np.eye(3), atol=1e-10)
    np.testing.assert_allclose(invert(m) @ m, np.eye(3), atol=1e-10)


def test_invert_errors():
    with pytest.raises(Singular):
        invert(np.array([[1.0, 2.0], [2.0, 4.0]]))
    with pytest.raises(DimensionMismatch):
        invert(np.ones((2, 3)))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_double_inverse_recovers_matrix(seed, p):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.normal(size=(p, p)))
    s = np.exp(rng.uniform(0, np.log(1e5), size=p))
    m = (q * s) @ q.T  # condition number below 1e5
    np.testing.assert_allclose(invert(invert(m)), m, rtol=1e-8, atol=1e-8 * np.abs(m).max())


def test_quadratic_form_examples():
    assert quadratic_form([1, 0], np.diag([5.0, 7.0])) == 5.0
    assert quadratic_form([1, 1], [[1.0, 2.0], [2.0, 1.0]]) == 6.0
    with pytest.raises(DimensionMismatch):
        quadratic_form([1, 0, 0], np.eye(2))


def test_quadratic_form_psd_cholesky_construction():
    rng = np.random.default_rng(11)
    low = np.tril(rng.normal(size=(5, 5)))
    m = low @ low.T
    for _ in range(100):
        assert quadratic_form(rng.normal(size=5), m) >= 0.0


@given(
    arrays(np.float64, 4, elements=st.floats(-10, 10)),
    st.floats(-5, 5),
    st.floats(-3, 3),
)
def test_quadratic_form_scaling(e, c, k):
    m = np.array([[2.0, 0.5, 0, 0], [0.5, 1.0, 0.2, 0], [0, 0.2, 3.0, 0.1], [0, 0, 0.1, 1.5]])
    base = quadratic_form(e, m)
    assert quadratic_form(c * e, m) == pytest.approx(c * c * base, rel=1e-12, abs=1e-12)
    assert quadratic_form(e, k * m) == pytest.approx(k * base, rel=1e-12, abs=1e-12)
