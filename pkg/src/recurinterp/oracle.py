"""High-precision reference values used to score the binary64 solvers.

All arithmetic here runs in :mod:`mpmath` at a configurable number of
decimal digits (50 by default). Nodes and values are taken exactly as
given, so a binary64 node set is scored against the interpolant of those
very floating-point numbers, not of the real numbers they approximate.
For rational inputs :func:`exact_coefficients_rational` solves the same
system in exact :class:`fractions.Fraction` arithmetic as a cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np

from .exceptions import LengthMismatchError, SingularExactError, ZeroNormError
from .incremental import newton_step

DEFAULT_DIGITS = 50
U = 2.0 ** -52

mp = mpmath.mp


def to_mpf(v):
    """Exact conversion of int, float, Fraction or mpf to the current context."""
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    if isinstance(v, mpmath.mpf):
        return +v
    return mpmath.mpf(v)


def to_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, np.integer)):
        return Fraction(int(v))
    if isinstance(v, mpmath.mpf):
        if not mpmath.isfinite(v):
            raise ValueError(f"cannot convert {v} to a fraction")
        sign, man, exp, _ = v._mpf_  # man_exp drops the sign
        q = Fraction(int(man)) * Fraction(2) ** int(exp)
        return -q if sign else q
    return Fraction(float(v))


def basis_coefficients_mp(basis, n):
    """``alpha, beta, gamma`` over ``0..n`` as object arrays of mpf."""
    rows = [basis.exact(k) for k in range(n + 1)]
    return tuple(np.array([to_mpf(r[i]) for r in rows], dtype=object) for i in range(3))


def basis_matrix_mp(basis, nodes, ncols=None):
    """Vandermonde-like matrix in the current mpmath precision (list of rows)."""
    xs = [to_mpf(x) for x in nodes]
    ncols = len(xs) if ncols is None else ncols
    alpha, beta, gamma = basis_coefficients_mp(basis, max(ncols - 1, 0))
    rows = []
    for x in xs:
        row = [mpmath.mpf(1)]
        if ncols > 1:
            row.append((x + beta[0]) / alpha[0])
        for k in range(2, ncols):
            row.append(((x + beta[k - 1]) * row[k - 1] - gamma[k - 1] * row[k - 2])
                       / alpha[k - 1])
        rows.append(row)
    return rows


def _eliminate(A, b, zero):
    """Solve ``A x = b`` in place with partial pivoting; generic element type."""
    n = len(A)
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(A[i][k]))
        if A[p][k] == zero:
            raise SingularExactError(f"no nonzero pivot in column {k}")
        if p != k:
            A[k], A[p] = A[p], A[k]
            b[k], b[p] = b[p], b[k]
        piv = A[k][k]
        for i in range(k + 1, n):
            m = A[i][k] / piv
            if m == zero:
                continue
            Ai, Ak = A[i], A[k]
            for j in range(k + 1, n):
                Ai[j] -= m * Ak[j]
            b[i] -= m * b[k]
    x = [zero] * n
    for i in range(n - 1, -1, -1):
        s = b[i]
        for j in range(i + 1, n):
            s -= A[i][j] * x[j]
        x[i] = s / A[i][i]
    return x


def _check_lengths(nodes, values):
    if len(nodes) != len(values):
        raise LengthMismatchError(f"{len(nodes)} nodes but {len(values)} values")
    if len(nodes) == 0:
        raise LengthMismatchError("at least one node is required")


def exact_coefficients(basis, nodes, values, digits=DEFAULT_DIGITS):
    """Interpolation coefficients computed at ``digits`` decimal digits.

    Returns an object array of :class:`mpmath.mpf`.
    """
    _check_lengths(nodes, values)
    with mp.workdps(digits):
        A = basis_matrix_mp(basis, nodes)
        b = [to_mpf(v) for v in values]
        return np.array(_eliminate(A, b, mpmath.mpf(0)), dtype=object)


def exact_coefficients_rational(basis, nodes, values):
    """Interpolation coefficients in exact rational arithmetic.

    Every node, value and recurrence coefficient must be exactly
    representable as a fraction (binary64 numbers always are).
    """
    _check_lengths(nodes, values)
    xs = [to_fraction(x) for x in nodes]
    n = len(xs) - 1
    rows = [tuple(to_fraction(v) for v in basis.exact(k)) for k in range(n + 1)]
    A = []
    for x in xs:
        row = [Fraction(1)]
        if n >= 1:
            row.append((x + rows[0][1]) / rows[0][0])
        for k in range(2, n + 1):
            a, b, g = rows[k - 1]
            row.append(((x + b) * row[k - 1] - g * row[k - 2]) / a)
        A.append(row)
    return _eliminate(A, [to_fraction(v) for v in values], Fraction(0))


def exact_eta(basis, nodes, digits=DEFAULT_DIGITS):
    """Coefficients of ``prod_i (x - x_i)`` at high precision."""
    with mp.workdps(digits):
        n = len(nodes)
        alpha, beta, gamma = basis_coefficients_mp(basis, max(n, 1))
        eta = np.array([mpmath.mpf(1)], dtype=object)
        for x in nodes:
            eta = newton_step(eta, to_mpf(x), alpha, beta, gamma)
        return eta


def _matvec(A, v):
    return [mpmath.fsum(a * x for a, x in zip(row, v)) for row in A]


def _rmatvec(A, v):
    n = len(A[0])
    return [mpmath.fsum(A[i][j] * v[i] for i in range(len(A))) for j in range(n)]


def _lu(A):
    n = len(A)
    A = [row[:] for row in A]
    perm = list(range(n))
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(A[i][k]))
        if A[p][k] == 0:
            raise SingularExactError(f"no nonzero pivot in column {k}")
        A[k], A[p] = A[p], A[k]
        perm[k], perm[p] = perm[p], perm[k]
        for i in range(k + 1, n):
            A[i][k] /= A[k][k]
            m = A[i][k]
            for j in range(k + 1, n):
                A[i][j] -= m * A[k][j]
    return A, perm


def _lu_solve(LU, perm, b):
    n = len(LU)
    y = [b[p] for p in perm]
    for i in range(n):
        y[i] -= mpmath.fsum(LU[i][j] * y[j] for j in range(i))
    for i in range(n - 1, -1, -1):
        y[i] = (y[i] - mpmath.fsum(LU[i][j] * y[j] for j in range(i + 1, n))) / LU[i][i]
    return y


def _lu_solve_transpose(LU, perm, b):
    # A[perm] = L U  =>  A^T z = b  <=>  U^T L^T (z[perm]) = b
    n = len(LU)
    y = list(b)
    for i in range(n):
        y[i] = (y[i] - mpmath.fsum(LU[j][i] * y[j] for j in range(i))) / LU[i][i]
    for i in range(n - 1, -1, -1):
        y[i] -= mpmath.fsum(LU[j][i] * y[j] for j in range(i + 1, n))
    z = [None] * n
    for k, p in enumerate(perm):
        z[p] = y[k]
    return z


def _normalize(v):
    s = mpmath.sqrt(mpmath.fsum(x * x for x in v))
    return [x / s for x in v], s


def _power(apply, n, max_iter, rtol):
    v, _ = _normalize([mpmath.mpf(1) + mpmath.mpf(k) / n for k in range(n)])
    est = None
    for _ in range(max_iter):
        v, lam = _normalize(apply(v))
        if est is not None and abs(lam - est) <= rtol * abs(lam):
            est = lam
            break
        est = lam
    return est


def condition_number(basis, nodes, digits=DEFAULT_DIGITS, max_iter=200, rtol=1e-20):
    """2-norm condition number of the Vandermonde-like matrix.

    The extreme singular values come from power iteration on ``P^T P`` and
    on its inverse (via a high-precision LU of ``P``). A matrix that is
    exactly singular at this precision yields ``mpmath.inf``.
    """
    return _condition_cached(basis, tuple(float(x) for x in nodes), digits, max_iter,
                             rtol)


@lru_cache(maxsize=128)
def _condition_cached(basis, nodes, digits, max_iter, rtol):
    with mp.workdps(digits):
        A = basis_matrix_mp(basis, nodes)
        n = len(A)
        tol = mpmath.mpf(rtol)
        big = _power(lambda v: _rmatvec(A, _matvec(A, v)), n, max_iter, tol)
        try:
            LU, perm = _lu(A)
        except SingularExactError:
            return mpmath.inf
        small_inv = _power(
            lambda v: _lu_solve(LU, perm, _lu_solve_transpose(LU, perm, v)),
            n, max_iter, tol)
        return mpmath.sqrt(big * small_inv)


def relative_error(c, c_star, digits=DEFAULT_DIGITS):
    """``||c - c*||_2 / (U ||c*||_2)`` with ``U = 2**-52``."""
    if len(c) != len(c_star):
        raise LengthMismatchError(f"{len(c)} coefficients vs {len(c_star)} reference")
    with mp.workdps(digits):
        ref = [to_mpf(v) for v in c_star]
        scale = mpmath.sqrt(mpmath.fsum(v * v for v in ref))
        if scale == 0:
            raise ZeroNormError("reference coefficients are all zero")
        diff = mpmath.sqrt(mpmath.fsum((to_mpf(a) - b) ** 2 for a, b in zip(c, ref)))
        return float(diff / (U * scale))


def err_res(c, c_star, matrix, values, digits=DEFAULT_DIGITS):
    """Coefficient error and residual, both in units of ``U = 2**-52``.

    ``ERR = ||c - c*|| / (U ||c*||)`` and ``RES = ||f - P c|| / (U ||c*||)``.
    The residual is evaluated at ``digits`` precision with ``P`` rebuilt
    from ``matrix.basis`` and ``matrix.nodes``.
    """
    c = [float(v) for v in c]
    if not (len(c) == len(c_star) == len(values) == len(matrix.nodes)):
        raise LengthMismatchError("coefficient, reference, value and node counts differ")
    err = relative_error(c, c_star, digits)
    with mp.workdps(digits):
        ref = [to_mpf(v) for v in c_star]
        scale = mpmath.sqrt(mpmath.fsum(v * v for v in ref))
        P = basis_matrix_mp(matrix.basis, matrix.nodes)
        cm = [mpmath.mpf(v) for v in c]
        r = [to_mpf(f) - s for f, s in zip(values, _matvec(P, cm))]
        res = mpmath.sqrt(mpmath.fsum(v * v for v in r)) / (U * scale)
        return err, float(res)


def round_to_float(vs):
    """Round high-precision values to the nearest binary64 numbers."""
    return np.array([float(v) for v in vs])
