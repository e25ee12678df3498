"""Interpolants that can be updated and downdated one node at a time.

The state kept for an interpolant over nodes ``x_0..x_n`` is the coefficient
vector ``c`` of the interpolating polynomial and the coefficient vector
``eta`` of the Newton polynomial ``pi_{n+1}(x) = prod_i (x - x_i)``, both
relative to the same three-term-recurrence basis. Adding a node costs O(n),
removing one costs O(n), so building an n-node interpolant costs O(n^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis import RecurrenceBasis, evaluate_basis_row
from .exceptions import (DegenerateDowndateError, DuplicateNodeError,
                         InterpolationError, LengthMismatchError,
                         NumericalOverflow)

# unit roundoff of binary64 in the standard rounding model
_ROUNDOFF = 2.0 ** -53


def _gamma(m):
    return m * _ROUNDOFF / (1.0 - m * _ROUNDOFF)


def newton_step(eta, x, alpha, beta, gamma):
    """Coefficients of ``(t - x) * pi(t)`` given those of ``pi``.

    This applies the ``(k+2) x (k+1)`` tridiagonal multiplication-by-``t``
    matrix, shifted by ``x``, to ``eta`` (length ``k+1``). The coefficient
    arrays must cover indices ``0..k``. Works on float arrays as well as
    object arrays of high-precision numbers.
    """
    k = len(eta) - 1
    out = np.zeros(k + 2, dtype=np.result_type(eta, alpha))
    out[1:] = out[1:] + alpha[:k + 1] * eta
    out[:-1] = out[:-1] - (x + beta[:k + 1]) * eta
    out[:k] = out[:k] + gamma[1:k + 1] * eta[1:]
    return out


def newton_unstep(eta_next, x, alpha, beta, gamma):
    """Divide the root ``x`` out of a Newton polynomial.

    Solves the upper-tridiagonal system obtained by dropping the first row
    of ``newton_step`` by back-substitution. ``eta_next`` has length
    ``n+2``; the result has length ``n+1``.
    """
    n = len(eta_next) - 2
    eta = np.zeros(n + 1, dtype=np.result_type(eta_next, alpha))
    eta[n] = eta_next[n + 1] / alpha[n]
    if n >= 1:
        eta[n - 1] = (eta_next[n] + (x + beta[n]) * eta[n]) / alpha[n - 1]
    for i in range(n - 2, -1, -1):
        eta[i] = (eta_next[i + 1] + (x + beta[i + 1]) * eta[i + 1]
                  - gamma[i + 2] * eta[i + 2]) / alpha[i]
    return eta


def _frozen(a):
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class Interpolant:
    """Interpolation state over the nodes added so far.

    Attributes:
        basis: basis the coefficients refer to.
        nodes: nodes in insertion order.
        values: function values paired with ``nodes``.
        c: coefficients of the interpolating polynomial, ``len(nodes)``.
        eta: coefficients of the Newton polynomial over all nodes,
            ``len(nodes) + 1``.
        flops: floating-point operations spent building this state.
    """

    basis: RecurrenceBasis
    nodes: np.ndarray
    values: np.ndarray
    c: np.ndarray
    eta: np.ndarray
    flops: int = field(default=0, compare=False)

    def __post_init__(self):
        for name in ("nodes", "values", "c", "eta"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        if not (len(self.nodes) == len(self.values) == len(self.c)
                == len(self.eta) - 1):
            raise LengthMismatchError(
                f"inconsistent interpolant sizes: {len(self.nodes)} nodes, "
                f"{len(self.values)} values, {len(self.c)} coefficients, "
                f"{len(self.eta)} Newton coefficients")

    @property
    def degree(self):
        return len(self.nodes) - 1

    def __call__(self, x):
        rows = evaluate_basis_row(self.basis, self.degree, x)
        return rows @ self.c


def new_interpolant(basis, x0, f0):
    """Interpolant of the single data point ``(x0, f0)``."""
    alpha, beta, _ = basis.coefficients(0)
    x0 = float(x0)
    return Interpolant(
        basis=basis,
        nodes=[x0],
        values=[float(f0)],
        c=[float(f0)],
        eta=[-x0 - beta[0], alpha[0]],
        flops=2,
    )


def newton_pi_at(interp, x):
    """Value at ``x`` of the Newton polynomial over the interpolant's nodes."""
    rows = evaluate_basis_row(interp.basis, len(interp.eta) - 1, x)
    return rows @ interp.eta


def add_node(interp, x, f):
    """Return the interpolant extended by the data point ``(x, f)``.

    The new Newton coefficient is chosen so the updated polynomial matches
    ``f`` at ``x``; previous Newton coefficients are never needed.

    Raises:
        DuplicateNodeError: ``x`` equals a stored node.
        NumericalOverflow: the update produced non-finite numbers, or the
            computed ``pi(x)`` is smaller than its own rounding-error bound
            so that the new coefficient carries no correct digits.
    """
    x = float(x)
    f = float(f)
    if np.any(interp.nodes == x):
        raise DuplicateNodeError(f"node {x!r} is already part of the interpolant")
    k = len(interp.nodes)
    alpha, beta, gamma = interp.basis.coefficients(k)

    v = evaluate_basis_row(interp.basis, k, x)
    with np.errstate(all="ignore"):
        g = v[:k] @ interp.c
        pi = v @ interp.eta
        pi_bound = _gamma(k + 1) * (np.abs(v) @ np.abs(interp.eta))
        a = (f - g) / pi
    if not (np.isfinite(pi) and np.isfinite(a)):
        raise NumericalOverflow(
            f"non-finite Newton coefficient while adding node {x!r} "
            f"(pi = {pi!r}, a = {a!r})")
    if abs(pi) <= pi_bound:
        raise NumericalOverflow(
            f"Newton polynomial at node {x!r} is below its rounding-error "
            f"bound (|pi| = {abs(pi):.3e} <= {pi_bound:.3e}); "
            "the update would carry no correct digits")

    with np.errstate(all="ignore"):
        c = np.append(interp.c, 0.0) + a * interp.eta
        eta = newton_step(interp.eta, x, alpha, beta, gamma)
    if not (np.all(np.isfinite(c)) and np.all(np.isfinite(eta))):
        raise NumericalOverflow(f"coefficients overflowed while adding node {x!r}")

    # row: 5 per recurrence entry; dots g, pi and the bound; a; c; eta
    cost = 5 * max(k - 1, 0) + 2 + 2 * k + 2 * (k + 1) + 4 * (k + 1) + 3 \
        + 2 * (k + 1) + 7 * (k + 1)
    return Interpolant(
        basis=interp.basis,
        nodes=np.append(interp.nodes, x),
        values=np.append(interp.values, f),
        c=c,
        eta=eta,
        flops=interp.flops + cost,
    )


def remove_node(interp, j):
    """Return the interpolant with the ``j``-th stored node removed.

    Raises:
        IndexError: ``j`` is not a valid node index.
        InterpolationError: fewer than two nodes are stored.
        DegenerateDowndateError: the leading downdated Newton coefficient
            is zero or non-finite.
    """
    m = len(interp.nodes)
    if m < 2:
        raise InterpolationError("cannot remove a node from a one-node interpolant")
    if not -m <= j < m:
        raise IndexError(f"node index {j} out of range for {m} nodes")
    j = j % m
    n = m - 1
    alpha, beta, gamma = interp.basis.coefficients(n)
    xj = interp.nodes[j]

    with np.errstate(all="ignore"):
        eta = newton_unstep(interp.eta, xj, alpha, beta, gamma)
    lead = eta[n]
    if lead == 0 or not np.isfinite(lead):
        raise DegenerateDowndateError(
            f"leading Newton coefficient is {lead!r} after removing node {xj!r}")
    with np.errstate(all="ignore"):
        a = interp.c[n] / lead
        c = (interp.c - a * eta)[:n]
    if not np.all(np.isfinite(c)):
        raise DegenerateDowndateError(f"non-finite coefficients after removing node {xj!r}")

    keep = np.arange(m) != j
    return Interpolant(
        basis=interp.basis,
        nodes=interp.nodes[keep],
        values=interp.values[keep],
        c=c,
        eta=eta,
        flops=interp.flops + 7 * n + 2 * (n + 1) + 1,
    )


def build_interpolant(basis, nodes, values):
    """Add the given data points one after another, in the given order."""
    nodes = np.asarray(nodes, dtype=float)
    values = np.asarray(values, dtype=float)
    if nodes.shape != values.shape or nodes.ndim != 1:
        raise LengthMismatchError(
            f"nodes {nodes.shape} and values {values.shape} must be matching 1-D arrays")
    if nodes.size == 0:
        raise InterpolationError("at least one node is required")
    interp = new_interpolant(basis, nodes[0], values[0])
    for x, f in zip(nodes[1:], values[1:]):
        interp = add_node(interp, x, f)
    return interp


def incremental_solve(basis, nodes, values):
    """Coefficients of the interpolant built by successive node additions."""
    return build_interpolant(basis, nodes, values).c.copy()
