"""Polynomial interpolation in bases defined by a three-term recurrence.

Coefficients can be computed from scratch (:func:`direct_solve`), grown one
point at a time (:func:`add_node`) or shrunk (:func:`remove_node`), each in
O(n^2) total or O(n) per update. Reference solvers, a high-precision oracle
and a benchmark harness are included for stability studies.
"""

from .basis import (BUILTIN_BASES, RecurrenceBasis, chebyshev_basis, evaluate_basis,
                    evaluate_basis_row, evaluate_expansion, get_basis, legendre_basis,
                    monomial_basis, table_basis)
from .direct import (LagrangeWeights, VandermondeLike, build_matrix, build_weights,
                     direct_solve, solve, solve_many)
from .estimators import IncrementalInterpolator, RecurrenceInterpolator, VandermondeFeatures
from .exceptions import (DegenerateDowndateError, DuplicateNodeError, InterpolationError,
                         LengthMismatchError, NumericalOverflow, SingularExactError,
                         SingularPivotError, UnknownFamilyError, ZeroNormError)
from .incremental import (Interpolant, add_node, build_interpolant, incremental_solve,
                          new_interpolant, remove_node)
from .ordering import NodeOrdering, apply_ordering, higham_ordering, make_ordering
from .reference import bph_solve, bp_monomial_solve, ge_solve

__all__ = [
    "BUILTIN_BASES", "RecurrenceBasis", "chebyshev_basis", "legendre_basis", "monomial_basis",
    "table_basis", "get_basis", "evaluate_basis", "evaluate_basis_row", "evaluate_expansion",
    "VandermondeLike", "LagrangeWeights", "build_matrix", "build_weights", "solve",
    "solve_many", "direct_solve", "Interpolant", "new_interpolant", "add_node", "remove_node",
    "build_interpolant", "incremental_solve", "NodeOrdering", "higham_ordering",
    "make_ordering", "apply_ordering", "bph_solve", "bp_monomial_solve", "ge_solve",
    "RecurrenceInterpolator", "IncrementalInterpolator", "VandermondeFeatures",
    "InterpolationError", "DuplicateNodeError", "LengthMismatchError", "UnknownFamilyError",
    "NumericalOverflow", "DegenerateDowndateError", "SingularPivotError",
    "SingularExactError", "ZeroNormError",
]
