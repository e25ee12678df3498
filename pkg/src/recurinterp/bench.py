"""Stability experiments over standard node sets and right-hand sides.

Node families (``i = 0..n``):

* ``A1`` -- extrema of ``T_n``: ``x_i = -cos(i pi / n)``
* ``A2`` -- zeros of ``T_{n+1}``: ``x_i = -cos((i + 1/2) pi / (n + 1))``
* ``A3`` -- equidistant on ``[-1, 1]``: ``x_i = -1 + 2 i / n``
* ``A4`` -- equidistant on ``[0, 1]``: ``x_i = i / n``

Right-hand sides: ``F1`` alternating signs, ``F2`` first unit vector,
``F3`` the Runge function ``1 / (1 + 25 x^2)``.

Each solver runs in binary64 on the reordered data and is scored against
the high-precision solution for exactly the same binary64 nodes and values.
"""

from __future__ import annotations

import time
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .basis import get_basis
from .direct import build_matrix, build_weights, solve
from .exceptions import (InterpolationError, NumericalOverflow, UnknownFamilyError)
from .incremental import Interpolant, incremental_solve, remove_node
from .oracle import DEFAULT_DIGITS, err_res, exact_coefficients, exact_eta, round_to_float
from .ordering import apply_ordering, make_ordering
from .reference import bph_solve, ge_solve

NODE_FAMILIES = ("A1", "A2", "A3", "A4")
RHS_FAMILIES = ("F1", "F2", "F3")
ALGORITHMS = ("GE", "BPH", "INCR", "DIRECT", "DEL")
DEFAULT_NS = (5, 10, 20, 30)


def make_nodes(family, n, digits=DEFAULT_DIGITS):
    """Nodes of a standard family, each correctly rounded to binary64.

    The cosine families are evaluated at ``digits`` precision in the
    equivalent sine form, which keeps symmetric pairs exact negatives of
    each other and the centre node exactly zero.
    """
    if n < 1:
        raise InterpolationError(f"n must be at least 1, got {n}")
    if family == "A1":
        with mpmath.mp.workdps(digits):
            return np.array([float(mpmath.sinpi(mpmath.mpf(2 * k - n) / (2 * n)))
                             for k in range(n + 1)])
    if family == "A2":
        with mpmath.mp.workdps(digits):
            return np.array([float(mpmath.sinpi(mpmath.mpf(2 * k - n) / (2 * n + 2)))
                             for k in range(n + 1)])
    if family == "A3":
        return np.array([float(Fraction(2 * k - n, n)) for k in range(n + 1)])
    if family == "A4":
        return np.arange(n + 1) / n
    raise UnknownFamilyError(f"unknown node family {family!r}")


def make_rhs(family, nodes, digits=DEFAULT_DIGITS):
    """Right-hand side of a standard family over ``nodes`` (in given order)."""
    nodes = np.asarray(nodes, dtype=float)
    m = nodes.size
    if family == "F1":
        return np.where(np.arange(m) % 2 == 0, 1.0, -1.0)
    if family == "F2":
        f = np.zeros(m)
        f[0] = 1.0
        return f
    if family == "F3":
        with mpmath.mp.workdps(digits):
            return np.array([float(1 / (1 + 25 * mpmath.mpf(x) ** 2)) for x in nodes])
    raise UnknownFamilyError(f"unknown right-hand-side family {family!r}")


@dataclass(frozen=True)
class ExperimentSpec:
    """One benchmark cell.

    ``node_family``/``rhs_family`` may be ``"file"``, in which case the data
    come from ``nodes``/``values`` instead of the generators.
    """

    node_family: str
    rhs_family: str
    n: int
    basis: object = "chebyshev"
    ordering: str = "higham"
    algorithms: tuple = ALGORITHMS
    digits: int = DEFAULT_DIGITS
    nodes: tuple | None = None
    values: tuple | None = None

    def __post_init__(self):
        if not self.algorithms:
            raise InterpolationError("at least one algorithm is required")
        bad = [a for a in self.algorithms if a not in ALGORITHMS]
        if bad:
            raise InterpolationError(f"unknown algorithms {bad}; choose from {ALGORITHMS}")
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        if self.node_family == "file":
            if self.nodes is None:
                raise InterpolationError("node_family='file' needs explicit nodes")
            object.__setattr__(self, "n", len(self.nodes) - 1)
        if self.n < 1:
            raise InterpolationError(f"n must be at least 1, got {self.n}")
        if self.rhs_family == "file" and self.values is None:
            raise InterpolationError("rhs_family='file' needs explicit values")

    def data(self):
        """Nodes and values in their natural (unordered) order."""
        if self.node_family == "file":
            x = np.asarray(self.nodes, dtype=float)
        else:
            x = make_nodes(self.node_family, self.n, self.digits)
        if self.rhs_family == "file":
            f = np.asarray(self.values, dtype=float)
            if f.shape != x.shape:
                raise InterpolationError(f"{x.size} nodes but {f.size} values")
        else:
            f = make_rhs(self.rhs_family, x, self.digits)
        return x, f


@dataclass
class SolveReport:
    """Outcome of one solver on one cell.

    ``status`` is ``"ok"``, ``"overflow"`` or ``"singular"``; only ``"ok"``
    reports carry coefficients and scores. ``note`` records diagnostics
    that do not invalidate the result, such as a near-singular pivot.
    """

    algorithm: str
    status: str
    coef: np.ndarray | None = None
    err: float | None = None
    res: float | None = None
    wall_time: float = 0.0
    note: str = ""
    node_family: str = ""
    rhs_family: str = ""
    n: int = 0

    @property
    def failed(self):
        return self.status != "ok"


def _status_for(exc):
    return "overflow" if isinstance(exc, NumericalOverflow) else "singular"


def _solve_with(algorithm, basis, matrix, nodes, values):
    if algorithm == "GE":
        sol = ge_solve(matrix, values)
        note = "near-singular pivot" if sol.status == "singular" else ""
        return sol.coef, note
    if algorithm == "BPH":
        return bph_solve(basis, nodes, values), ""
    if algorithm == "INCR":
        return incremental_solve(basis, nodes, values), ""
    if algorithm == "DIRECT":
        return solve(matrix, build_weights(nodes), values), ""
    raise InterpolationError(f"no working-precision solver for {algorithm!r}")


def run_cell(spec):
    """Run every requested solver on one cell and score it.

    Solver failures become report statuses; the cell itself never aborts.
    """
    basis = get_basis(spec.basis)
    x0, f0 = spec.data()
    order = make_ordering(spec.ordering, basis, x0)
    nodes, values = apply_ordering(order, x0, f0)
    matrix = build_matrix(basis, nodes)
    tag = dict(node_family=spec.node_family, rhs_family=spec.rhs_family, n=spec.n)
    c_star = None
    reports = []
    for algorithm in spec.algorithms:
        if algorithm == "DEL":
            reports.append(_run_downdate(basis, nodes, values, spec.digits, tag))
            continue
        if c_star is None:
            c_star = exact_coefficients(basis, nodes, values, spec.digits)
        start = time.perf_counter()
        try:
            coef, note = _solve_with(algorithm, basis, matrix, nodes, values)
        except InterpolationError as exc:
            reports.append(SolveReport(algorithm, _status_for(exc), note=str(exc),
                                       wall_time=time.perf_counter() - start, **tag))
            continue
        elapsed = time.perf_counter() - start
        if not np.all(np.isfinite(coef)):
            reports.append(SolveReport(algorithm, "overflow", note="non-finite coefficients",
                                       wall_time=elapsed, **tag))
            continue
        err, res = err_res(coef, c_star, matrix, values, spec.digits)
        reports.append(SolveReport(algorithm, "ok", coef, err, res, elapsed, note, **tag))
    return reports


def downdate_from_exact(basis, nodes, values, digits=DEFAULT_DIGITS):
    """Start from rounded exact ``c`` and ``eta``; remove the rightmost node.

    Returns ``(interpolant, j)`` with ``j`` the removed index.
    """
    c_star = exact_coefficients(basis, nodes, values, digits)
    eta_star = exact_eta(basis, nodes, digits)
    start = Interpolant(basis=basis, nodes=nodes, values=values,
                        c=round_to_float(c_star), eta=round_to_float(eta_star))
    j = int(np.argmax(nodes))
    return remove_node(start, j), j


def _run_downdate(basis, nodes, values, digits, tag):
    t0 = time.perf_counter()
    try:
        reduced, j = downdate_from_exact(basis, nodes, values, digits)
    except InterpolationError as exc:
        return SolveReport("DEL", _status_for(exc), note=str(exc),
                           wall_time=time.perf_counter() - t0, **tag)
    elapsed = time.perf_counter() - t0
    keep = np.arange(nodes.size) != j
    rest_x, rest_f = nodes[keep], values[keep]
    c_hat = exact_coefficients(basis, rest_x, rest_f, digits)
    err, res = err_res(reduced.c, c_hat, build_matrix(basis, rest_x), rest_f, digits)
    return SolveReport("DEL", "ok", reduced.c.copy(), err, res, elapsed, **tag)


@dataclass
class ResultTable:
    """Reports keyed by ``(node_family, rhs_family, n, algorithm)``."""

    reports: list = field(default_factory=list)

    def __len__(self):
        return len(self.reports)

    def __iter__(self):
        return iter(self.reports)

    def get(self, node_family, rhs_family, n, algorithm):
        for r in self.reports:
            if (r.node_family, r.rhs_family, r.n, r.algorithm) == (
                    node_family, rhs_family, n, algorithm):
                return r
        raise KeyError((node_family, rhs_family, n, algorithm))

    def problems(self):
        """Distinct ``(node_family, rhs_family)`` pairs in first-seen order."""
        seen = {}
        for r in self.reports:
            seen.setdefault((r.node_family, r.rhs_family), None)
        return list(seen)


def make_grid(node_families=NODE_FAMILIES, rhs_families=RHS_FAMILIES, ns=DEFAULT_NS,
              basis="chebyshev", ordering="higham", algorithms=ALGORITHMS,
              digits=DEFAULT_DIGITS):
    return [ExperimentSpec(a, f, n, basis, ordering, tuple(algorithms), digits)
            for a in node_families for f in rhs_families for n in ns]


def run_grid(specs, n_jobs=1):
    """Run all cells; with ``n_jobs > 1`` cells run in worker processes.

    Report order follows ``specs`` either way.
    """
    specs = list(specs)
    if n_jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            chunks = list(pool.map(run_cell, specs))
    else:
        chunks = [run_cell(s) for s in specs]
    return ResultTable([r for chunk in chunks for r in chunk])
