"""Small dense linear algebra used by every estimator.

All designs in this package are ``n x p`` with ``p <= 10``, so the helpers
favour clarity and numerical stability over raw speed: least squares goes
through a QR factorization and conditioning is measured with the SVD of the
triangular factor.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import solve_triangular

from .exceptions import DimensionMismatch, RankDeficient, Singular

__all__ = [
    "RCOND_THRESHOLD",
    "as_matrix",
    "as_vector",
    "rcond",
    "solve_least_squares",
    "invert",
    "quadratic_form",
    "symmetrize",
]

#: Reciprocal condition number below which a factor is treated as singular.
RCOND_THRESHOLD = 1e-12


def as_vector(x, name: str = "vector") -> np.ndarray:
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-d, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    return v


def as_matrix(x, name: str = "matrix") -> np.ndarray:
    m = np.asarray(x, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-d, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def rcond(m: np.ndarray) -> float:
    """Reciprocal 2-norm condition number (0 for an exactly singular matrix)."""
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0.0
    return float(s[-1] / s[0])


def solve_least_squares(design, response) -> np.ndarray:
    """Ordinary least squares by Householder QR.

    Parameters
    ----------
    design : array_like, shape (n, p)
    response : array_like, shape (n,)

    Returns
    -------
    ndarray, shape (p,)
        Coefficients minimizing ``||response - design @ beta||``.

    Raises
    ------
    RankDeficient
        If ``n < p`` or the triangular factor has reciprocal condition
        number below :data:`RCOND_THRESHOLD`.
    """
    x = as_matrix(design, "design")
    y = as_vector(response, "response")
    n, p = x.shape
    if y.shape[0] != n:
        raise DimensionMismatch(f"design has {n} rows but response has {y.shape[0]}")
    if n < p:
        raise RankDeficient(f"{n} observations cannot identify {p} coefficients")
    q, r = np.linalg.qr(x, mode="reduced")
    rc = rcond(r)
    if rc < RCOND_THRESHOLD:
        raise RankDeficient(f"design is rank deficient (rcond={rc:.3g})")
    return solve_triangular(r, q.T @ y, lower=False)


def invert(m) -> np.ndarray:
    """Inverse of a square matrix, refusing numerically singular input."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"cannot invert non-square matrix of shape {a.shape}")
    rc = rcond(a)
    if rc < RCOND_THRESHOLD:
        raise Singular(f"matrix is singular to working precision (rcond={rc:.3g})")
    return np.linalg.inv(a)


def quadratic_form(e, m) -> float:
    """Return ``e' m e``."""
    v = as_vector(e, "e")
    a = as_matrix(m)
    if a.shape != (v.size, v.size):
        raise DimensionMismatch(f"e has length {v.size} but matrix is {a.shape}")
    return float(v @ a @ v)


def symmetrize(m: np.ndarray) -> np.ndarray:
    return (m + m.T) / 2.0
