"""Node orderings applied before any solver runs.

The pivoting order of Gaussian elimination on the Vandermonde-like matrix
is a good ordering for Newton-based solvers: each successive node then
maximises the magnitude of the next pivot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .direct import build_matrix
from .exceptions import InterpolationError, LengthMismatchError
from .reference import lu_factor

MODES = ("higham", "natural", "given")


@dataclass(frozen=True)
class NodeOrdering:
    permutation: np.ndarray
    mode: str = "given"

    def __post_init__(self):
        perm = np.array(self.permutation, dtype=int)
        if sorted(perm.tolist()) != list(range(perm.size)):
            raise InterpolationError(f"not a permutation: {perm.tolist()}")
        if self.mode not in MODES:
            raise InterpolationError(f"unknown ordering mode {self.mode!r}")
        if self.mode == "natural" and np.any(perm != np.arange(perm.size)):
            raise InterpolationError("natural ordering must be the identity")
        perm.flags.writeable = False
        object.__setattr__(self, "permutation", perm)

    def __len__(self):
        return self.permutation.size

    def inverse(self):
        inv = np.empty_like(self.permutation)
        inv[self.permutation] = np.arange(self.permutation.size)
        return NodeOrdering(inv, mode="given")

    def is_identity(self):
        return bool(np.all(self.permutation == np.arange(self.permutation.size)))


def natural_ordering(nodes):
    return NodeOrdering(np.arange(len(nodes)), mode="natural")


def higham_ordering(basis, nodes):
    """Row order chosen by partial pivoting on the Vandermonde-like matrix.

    ``nodes[ordering.permutation]`` lists the nodes in pivot order. Ties go
    to the lowest row index, so the ordering is idempotent.
    """
    matrix = build_matrix(basis, nodes)
    return NodeOrdering(lu_factor(matrix.P).perm, mode="higham")


def make_ordering(mode, basis, nodes):
    if mode == "higham":
        return higham_ordering(basis, nodes)
    if mode == "natural":
        return natural_ordering(nodes)
    raise InterpolationError(f"cannot construct ordering for mode {mode!r}")


def apply_ordering(ordering, nodes, values):
    """Permute nodes and values identically."""
    x = np.asarray(nodes, dtype=float)
    f = np.asarray(values, dtype=float)
    if not (x.shape == f.shape == (len(ordering),)):
        raise LengthMismatchError(
            f"ordering of length {len(ordering)} applied to nodes {x.shape} "
            f"and values {f.shape}")
    return x[ordering.permutation], f[ordering.permutation]
