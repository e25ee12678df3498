"""Direct solution of Vandermonde-like systems by successive deflation.

The last equation of ``P c = f`` is eliminated with the Lagrange weights
that extrapolate degree-``< k`` polynomials from the first ``k`` nodes to
node ``k``. That isolates the last coefficient, which is then deflated out
of the right-hand side, and the process repeats on the leading block.

The weights depend on the nodes only, so :func:`solve_many` reuses one
:class:`LagrangeWeights` object for any number of right-hand sides.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .basis import RecurrenceBasis
from .exceptions import (DuplicateNodeError, InterpolationError,
                         LengthMismatchError, SingularPivotError)

#: Work counters, keyed by ``"weight_builds"``, ``"weight_entries"``
#: and ``"solves"``. Tests reset and inspect these.
counters = Counter()


def _check_distinct(nodes):
    s = np.sort(nodes)
    dup = s[1:] == s[:-1]
    if np.any(dup):
        raise DuplicateNodeError(f"duplicate node {s[1:][dup][0]!r}")


@dataclass(frozen=True)
class VandermondeLike:
    """Matrix with entries ``P[i, k] = p_k(x_i)``."""

    basis: RecurrenceBasis
    nodes: np.ndarray
    P: np.ndarray

    @property
    def n(self):
        return len(self.nodes) - 1

    def column(self, k):
        return self.P[:, k]


def build_matrix(basis, nodes):
    """Fill the Vandermonde-like matrix column by column from the recurrence."""
    nodes = np.array(nodes, dtype=float)
    if nodes.ndim != 1 or nodes.size == 0:
        raise InterpolationError("nodes must be a nonempty 1-D array")
    _check_distinct(nodes)
    n = nodes.size - 1
    alpha, beta, gamma = basis.coefficients(n)
    P = np.empty((n + 1, n + 1))
    P[:, 0] = 1.0
    if n >= 1:
        P[:, 1] = (nodes + beta[0]) / alpha[0]
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(2, n + 1):
            P[:, k] = ((nodes + beta[k - 1]) * P[:, k - 1]
                       - gamma[k - 1] * P[:, k - 2]) / alpha[k - 1]
    nodes.flags.writeable = False
    P.flags.writeable = False
    return VandermondeLike(basis=basis, nodes=nodes, P=P)


@dataclass(frozen=True)
class LagrangeWeights:
    """Extrapolation weights ``ell[k]`` (length ``k``) for ``k = 1..n``.

    ``ell[k] @ q(x[:k]) == q(x[k])`` for every polynomial ``q`` of degree
    below ``k``. ``ell[0]`` is an empty placeholder so indices line up.
    ``w[k]`` is the nodal product ``prod_{j<k} (x_k - x_j)``.
    """

    nodes: np.ndarray
    ell: tuple
    w: np.ndarray


def build_weights(nodes):
    """Construct all extrapolation weight vectors in O(n^2) operations."""
    x = np.array(nodes, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise InterpolationError("at least two nodes are required for weights")
    _check_distinct(x)
    n = x.size - 1
    w = np.empty(n + 1)
    w[0] = 1.0
    w[1] = x[1] - x[0]
    ell = [np.empty(0), np.ones(1)]
    entries = 1
    with np.errstate(all="ignore"):
        for i in range(2, n + 1):
            wi = 1.0
            for j in range(i):
                wi *= x[i] - x[j]
            w[i] = wi
            if wi == 0 or not np.isfinite(wi):
                raise SingularPivotError(f"nodal product w[{i}] = {wi!r}")
            ratio = wi / w[i - 1]
            new = np.empty(i)
            new[:i - 1] = -ell[i - 1] / (x[i] - x[:i - 1]) * ratio
            new[i - 1] = wi / (w[i - 1] * (x[i] - x[i - 1]))
            ell.append(new)
            entries += i
    for a in ell:
        a.flags.writeable = False
    x.flags.writeable = False
    w.flags.writeable = False
    counters["weight_builds"] += 1
    counters["weight_entries"] += entries
    return LagrangeWeights(nodes=x, ell=tuple(ell), w=w)


def solve(matrix, weights, f):
    """Coefficients ``c`` with ``matrix.P @ c = f``.

    Raises:
        LengthMismatchError: ``f`` does not match the matrix size.
        SingularPivotError: an elimination denominator is zero or non-finite.
    """
    P = matrix.P
    n = matrix.n
    f = np.array(f, dtype=float)
    if f.shape != (n + 1,):
        raise LengthMismatchError(f"expected {n + 1} values, got shape {f.shape}")
    if n >= 1 and (weights is None or len(weights.ell) != n + 1):
        raise LengthMismatchError("weights were built for a different node count")
    counters["solves"] += 1
    c = np.empty(n + 1)
    with np.errstate(all="ignore"):
        for i in range(n, 0, -1):
            ell = weights.ell[i]
            col = P[:, i]
            denom = ell @ col[:i] - col[i]
            if denom == 0 or not np.isfinite(denom):
                raise SingularPivotError(f"elimination denominator for c[{i}] is {denom!r}")
            c[i] = (ell @ f[:i] - f[i]) / denom
            f = f - c[i] * col
    c[0] = f[0] / P[0, 0]
    return c


def solve_many(matrix, weights, fs):
    """Solve for several right-hand sides sharing one set of weights."""
    return [solve(matrix, weights, f) for f in fs]


def direct_solve(basis, nodes, values):
    """Build matrix and weights, then solve for a single right-hand side."""
    matrix = build_matrix(basis, nodes)
    weights = build_weights(matrix.nodes) if matrix.n >= 1 else None
    return solve(matrix, weights, values)
