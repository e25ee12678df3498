"""Reference solvers the new algorithms are compared against.

* :func:`bph_solve` -- Newton divided differences followed by the nested
  Horner-style conversion into a three-term-recurrence basis.
* :func:`bp_monomial_solve` -- the same conversion into monomials.
* :func:`ge_solve` -- Gaussian elimination with partial pivoting on the
  Vandermonde-like matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .direct import VandermondeLike, _check_distinct
from .exceptions import InterpolationError, LengthMismatchError, NumericalOverflow

U = 2.0 ** -52


def _pair(nodes, values):
    x = np.asarray(nodes, dtype=float)
    f = np.asarray(values, dtype=float)
    if x.ndim != 1 or x.shape != f.shape:
        raise LengthMismatchError(
            f"nodes {x.shape} and values {f.shape} must be matching 1-D arrays")
    if x.size == 0:
        raise InterpolationError("at least one node is required")
    _check_distinct(x)
    return x, f


def divided_differences(nodes, values):
    """Newton coefficients ``a[i] = f[x_0, ..., x_i]``."""
    x, f = _pair(nodes, values)
    a = f.copy()
    n = x.size - 1
    for j in range(1, n + 1):
        # afterwards a[i] = f[x_{i-j}, ..., x_i] for i >= j
        a[j:] = (a[j:] - a[j - 1:-1]) / (x[j:] - x[:n + 1 - j])
    return a


def bph_solve(basis, nodes, values):
    """Interpolation coefficients in ``basis`` via divided differences.

    Starting from ``q_n = a_n``, each step forms
    ``q_{k-1}(x) = (x - x_{k-1}) q_k(x) + a_{k-1}`` directly in the basis.
    """
    x, f = _pair(nodes, values)
    with np.errstate(all="ignore"):
        a = divided_differences(x, f)
    n = x.size - 1
    alpha, beta, gamma = basis.coefficients(n)
    c = np.array([a[n]])
    with np.errstate(all="ignore"):
        for k in range(n, 0, -1):
            m = c.size
            new = np.zeros(m + 1)
            new[1:] += alpha[:m] * c
            new[:m] -= (x[k - 1] + beta[:m]) * c
            new[:m - 1] += gamma[1:m] * c[1:]
            new[0] += a[k - 1]
            c = new
    if not np.all(np.isfinite(c)):
        raise NumericalOverflow("non-finite coefficient in divided-difference conversion")
    return c


def bp_monomial_solve(nodes, values):
    """Monomial coefficients ``b`` of the interpolant, lowest degree first."""
    x, f = _pair(nodes, values)
    a = divided_differences(x, f)
    n = x.size - 1
    b = np.array([a[n]])
    with np.errstate(all="ignore"):
        for k in range(n, 0, -1):
            new = np.empty(b.size + 1)
            new[-1] = b[-1]
            new[1:-1] = b[:-1] - x[k - 1] * b[1:]
            new[0] = -b[0] * x[k - 1] + a[k - 1]
            b = new
    if not np.all(np.isfinite(b)):
        raise NumericalOverflow("non-finite coefficient in divided-difference conversion")
    return b


@dataclass(frozen=True)
class LUFactors:
    """Packed LU factors of ``A[perm]``, with ``L`` unit lower triangular."""

    LU: np.ndarray
    perm: np.ndarray
    singular: bool


def lu_factor(A):
    """Gaussian elimination with partial pivoting.

    Ties between equal-magnitude pivot candidates go to the lowest current
    row index. A pivot below ``n * U * max|row|`` of its original row marks
    the factorisation as numerically singular; elimination still runs to
    completion with the tiny pivot.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise LengthMismatchError(f"square matrix required, got {A.shape}")
    row_norms = np.max(np.abs(A), axis=1)
    perm = np.arange(n)
    singular = False
    with np.errstate(all="ignore"):
        for k in range(n):
            p = k + int(np.argmax(np.abs(A[k:, k])))
            if p != k:
                A[[k, p]] = A[[p, k]]
                perm[[k, p]] = perm[[p, k]]
            piv = A[k, k]
            if not abs(piv) > n * U * row_norms[perm[k]]:
                singular = True
            if k + 1 < n:
                A[k + 1:, k] /= piv
                A[k + 1:, k + 1:] -= np.outer(A[k + 1:, k], A[k, k + 1:])
    return LUFactors(LU=A, perm=perm, singular=singular)


def lu_solve(factors, b):
    LU, perm = factors.LU, factors.perm
    n = LU.shape[0]
    y = np.array(b, dtype=float)[perm]
    with np.errstate(all="ignore"):
        for i in range(1, n):
            y[i] -= LU[i, :i] @ y[:i]
        for i in range(n - 1, -1, -1):
            y[i] = (y[i] - LU[i, i + 1:] @ y[i + 1:]) / LU[i, i]
    return y


@dataclass(frozen=True)
class GESolution:
    coef: np.ndarray
    status: str  # "ok" or "singular"


def ge_solve(matrix, values):
    """Solve ``P c = f`` by pivoted elimination, reporting near-singularity.

    ``matrix`` may be a :class:`VandermondeLike` or a plain square array.
    """
    P = matrix.P if isinstance(matrix, VandermondeLike) else np.asarray(matrix, dtype=float)
    f = np.asarray(values, dtype=float)
    if f.shape != (P.shape[0],):
        raise LengthMismatchError(f"expected {P.shape[0]} values, got shape {f.shape}")
    factors = lu_factor(P)
    c = lu_solve(factors, f)
    return GESolution(coef=c, status="singular" if factors.singular else "ok")
