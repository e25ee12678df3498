"""scikit-learn compatible front ends.

``X`` is the column of interpolation nodes (shape ``(n,)`` or ``(n, 1)``)
and ``y`` the function values. Fitted coefficients are stored in ``coef_``
relative to the chosen basis, so e.g. ``evaluate_expansion(basis, coef_, t)``
reproduces ``predict(t)``.
"""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import direct, incremental
from ._validation import check_distinct, check_nodes, check_values
from .basis import evaluate_basis_row, get_basis
from .exceptions import InterpolationError
from .ordering import make_ordering
from .reference import bph_solve, ge_solve

METHODS = ("direct", "incremental", "bph", "ge")


class RecurrenceInterpolator(RegressorMixin, BaseEstimator):
    """Polynomial interpolant through all training points.

    Parameters
    ----------
    basis : str or RecurrenceBasis, default="chebyshev"
        ``"chebyshev"``, ``"legendre"``, ``"monomial"`` or a custom basis.
    method : {"direct", "incremental", "bph", "ge"}, default="direct"
        Solver for the Vandermonde-like system. Only ``"direct"`` reuses
        its node-dependent work across the columns of a 2-D ``y``.
    ordering : {"higham", "natural"}, default="higham"
        Node order used inside the solver. The fitted polynomial does not
        depend on it in exact arithmetic.

    Attributes
    ----------
    coef_ : ndarray of shape (n_nodes,) or (n_nodes, n_targets)
    nodes_ : ndarray, training nodes in solver order
    basis_ : RecurrenceBasis
    """

    def __init__(self, basis="chebyshev", method="direct", ordering="higham"):
        self.basis = basis
        self.method = method
        self.ordering = ordering

    def fit(self, X, y):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        basis = get_basis(self.basis)
        x = check_distinct(check_nodes(X))
        y = check_values(y, x.size)
        order = make_ordering(self.ordering, basis, x)
        x = x[order.permutation]
        y = y[order.permutation]
        columns = [y] if y.ndim == 1 else list(y.T)

        if self.method == "direct":
            matrix = direct.build_matrix(basis, x)
            weights = direct.build_weights(x) if x.size > 1 else None
            coefs = direct.solve_many(matrix, weights, columns)
        elif self.method == "incremental":
            coefs = [incremental.incremental_solve(basis, x, f) for f in columns]
        elif self.method == "bph":
            coefs = [bph_solve(basis, x, f) for f in columns]
        else:
            matrix = direct.build_matrix(basis, x)
            coefs = [ge_solve(matrix, f).coef for f in columns]

        self.basis_ = basis
        self.nodes_ = x
        self.coef_ = coefs[0] if y.ndim == 1 else np.column_stack(coefs)
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        t = check_nodes(X)
        rows = evaluate_basis_row(self.basis_, self.nodes_.size - 1, t)
        return rows @ self.coef_


class IncrementalInterpolator(RegressorMixin, BaseEstimator):
    """Interpolant that grows with :meth:`partial_fit` and shrinks with
    :meth:`remove`, each in time linear in the current number of nodes.

    Attributes
    ----------
    coef_ : ndarray of shape (n_nodes,)
    eta_ : ndarray of shape (n_nodes + 1,)
        Basis coefficients of ``prod_i (x - x_i)``.
    nodes_, values_ : ndarray
        Data in insertion order.
    interpolant_ : Interpolant
    """

    def __init__(self, basis="chebyshev"):
        self.basis = basis

    def _sync(self, interp):
        self.interpolant_ = interp
        self.coef_ = interp.c
        self.eta_ = interp.eta
        self.nodes_ = interp.nodes
        self.values_ = interp.values
        self.n_features_in_ = 1
        return self

    def fit(self, X, y):
        for attr in ("interpolant_", "coef_", "eta_", "nodes_", "values_"):
            self.__dict__.pop(attr, None)
        return self.partial_fit(X, y)

    def partial_fit(self, X, y):
        """Add the given points in order."""
        x = check_nodes(X)
        f = check_values(y, x.size, allow_multi=False)
        if x.size == 0:
            raise InterpolationError("no points given")
        interp = getattr(self, "interpolant_", None)
        start = 0
        if interp is None:
            interp = incremental.new_interpolant(get_basis(self.basis), x[0], f[0])
            start = 1
        for xi, fi in zip(x[start:], f[start:]):
            interp = incremental.add_node(interp, xi, fi)
        return self._sync(interp)

    def remove(self, index):
        """Drop the node stored at ``index`` (insertion order)."""
        check_is_fitted(self, "interpolant_")
        return self._sync(incremental.remove_node(self.interpolant_, index))

    def remove_node(self, node):
        """Drop the stored node equal to ``node``."""
        check_is_fitted(self, "interpolant_")
        hits = np.flatnonzero(self.nodes_ == float(node))
        if hits.size == 0:
            raise KeyError(f"node {node!r} is not part of the interpolant")
        return self.remove(int(hits[0]))

    def predict(self, X):
        check_is_fitted(self, "interpolant_")
        return self.interpolant_(check_nodes(X))


class VandermondeFeatures(TransformerMixin, BaseEstimator):
    """Expand a single feature into ``p_0(x), ..., p_degree(x)``.

    Pairs with a linear model to fit least-squares polynomials in any
    three-term-recurrence basis.
    """

    def __init__(self, degree=3, basis="chebyshev"):
        self.degree = degree
        self.basis = basis

    def fit(self, X, y=None):
        check_nodes(X)
        if int(self.degree) < 0:
            raise ValueError(f"degree must be non-negative, got {self.degree}")
        self.basis_ = get_basis(self.basis)
        self.n_features_in_ = 1
        self.n_output_features_ = int(self.degree) + 1
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        return evaluate_basis_row(self.basis_, int(self.degree), check_nodes(X))

    def get_feature_names_out(self, input_features=None):
        name = "x0" if input_features is None else str(input_features[0])
        return np.array([f"p{k}({name})" for k in range(int(self.degree) + 1)], dtype=object)
