"""Input validation shared by the estimators and the CLI."""

import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import DuplicateNodeError, LengthMismatchError


def check_nodes(X, name="X"):
    """Return nodes as a finite 1-D float array.

    Accepts a 1-D array or a single-column 2-D array, the latter being the
    usual scikit-learn feature-matrix layout.
    """
    X = np.asarray(X)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    X = check_array(X, dtype=np.float64, ensure_2d=True, input_name=name)
    if X.shape[1] != 1:
        raise ValueError(f"{name} must have exactly one column, got {X.shape[1]}")
    return X[:, 0].copy()


def check_distinct(x):
    s = np.sort(x)
    dup = s[1:] == s[:-1]
    if np.any(dup):
        raise DuplicateNodeError(f"duplicate node {s[1:][dup][0]!r}")
    return x


def check_values(y, n_nodes, allow_multi=True):
    """Return values as float array of shape ``(n,)`` or ``(n, m)``."""
    y = check_array(np.asarray(y), dtype=np.float64, ensure_2d=False, input_name="y")
    if y.ndim == 2 and y.shape[1] == 1:
        y = y[:, 0]
    if y.ndim == 2 and not allow_multi:
        raise ValueError("only a single right-hand side is supported here")
    if y.ndim not in (1, 2) or y.shape[0] != n_nodes:
        raise LengthMismatchError(f"{n_nodes} nodes but values of shape {y.shape}")
    return y.copy()
