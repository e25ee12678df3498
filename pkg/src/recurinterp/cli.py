"""Command line front end.

Exit status is 0 on success, 2 on usage or input errors and 1 when a
working-precision solver fails numerically. ``bench`` records failing cells
in its table and still exits 0.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from . import fileio
from .basis import BUILTIN_BASES, evaluate_expansion, get_basis
from .bench import (ALGORITHMS, DEFAULT_NS, NODE_FAMILIES, RHS_FAMILIES, ExperimentSpec,
                    make_grid, make_nodes, make_rhs, run_grid)
from .direct import build_matrix, build_weights, solve as direct_solve_system
from .exceptions import InterpolationError
from .incremental import add_node, build_interpolant, incremental_solve, remove_node
from .oracle import DEFAULT_DIGITS, condition_number
from .ordering import apply_ordering, make_ordering
from .reference import bph_solve, ge_solve

FAIL = "−"
SOLVERS = ("ge", "bph", "incr", "direct")


# -- argument types --------------------------------------------------------

def basis_arg(text):
    """``chebyshev``, ``legendre``, ``monomial`` or ``custom:<path>``."""
    if text.startswith("custom:"):
        path = text[len("custom:"):]
        try:
            return fileio.read_basis_table(path)
        except OSError as exc:
            raise argparse.ArgumentTypeError(f"cannot read basis table: {exc}") from None
        except fileio.FormatError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    if text in BUILTIN_BASES:
        return get_basis(text)
    choices = ", ".join([*BUILTIN_BASES, "custom:<path>"])
    raise argparse.ArgumentTypeError(f"unknown basis {text!r} (choose from {choices})")


def _choice_list(choices, upper=False):
    def parse(text):
        items = [s.strip() for s in text.split(",") if s.strip()]
        items = [s.upper() if upper else s.lower() for s in items]
        if not items:
            raise argparse.ArgumentTypeError("empty list")
        bad = [s for s in items if s not in choices]
        if bad:
            raise argparse.ArgumentTypeError(
                f"invalid choice(s) {', '.join(bad)} (choose from {', '.join(choices)})")
        return tuple(dict.fromkeys(items))
    return parse


def int_list(text):
    try:
        ns = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None
    if not ns:
        raise argparse.ArgumentTypeError("empty list")
    if min(ns) < 1:
        raise argparse.ArgumentTypeError("every n must be at least 1")
    return ns


def positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


# -- table rendering -------------------------------------------------------

def format_number(v):
    """Table style: two decimals below 10, else three significant digits
    in compact scientific notation (161.3 -> ``1.61e2``)."""
    if v is None:
        return FAIL
    v = float(v)
    if not np.isfinite(v):
        return repr(v)
    if abs(v) < 9.995:
        return f"{v:.2f}"
    mant, exp = f"{v:.2e}".split("e")
    return f"{mant}e{int(exp)}"


def _csv_cell(v):
    return FAIL if v is None else repr(float(v))


def render_csv(table):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["nodes", "rhs", "n", "algo", "ERR", "RES", "status"])
    for r in table:
        w.writerow([r.node_family, r.rhs_family, r.n, r.algorithm,
                    _csv_cell(r.err), _csv_cell(r.res), r.status])
    return buf.getvalue()


def render_markdown(table):
    """One table per problem: a row per ``n``, an ERR/RES pair per solver.

    The solver with the largest ERR in each row is set in bold.
    """
    out = []
    for nodes, rhs in table.problems():
        reports = [r for r in table if (r.node_family, r.rhs_family) == (nodes, rhs)]
        algos = list(dict.fromkeys(r.algorithm for r in reports))
        ns = list(dict.fromkeys(r.n for r in reports))
        cells = {(r.n, r.algorithm): r for r in reports}
        head = ["n"] + [f"{a} {m}" for a in algos for m in ("ERR", "RES")]
        out.append(f"Results for problem {nodes}/{rhs}.")
        out.append("")
        out.append("| " + " | ".join(head) + " |")
        out.append("|" + "|".join(["---"] + ["---:"] * (len(head) - 1)) + "|")
        for n in ns:
            row = [r for a in algos if (r := cells.get((n, a))) is not None]
            errs = [r.err for r in row if not r.failed and r.err is not None]
            worst = max(errs) if len(errs) > 1 else None
            line = [str(n)]
            for a in algos:
                r = cells.get((n, a))
                if r is None or r.failed:
                    line += [FAIL, FAIL]
                    continue
                pair = [format_number(r.err), format_number(r.res)]
                if worst is not None and r.err == worst:
                    pair = [f"**{s}**" for s in pair]
                line += pair
            out.append("| " + " | ".join(line) + " |")
        out.append("")
    return "\n".join(out)


def render_table(table, fmt="csv"):
    if len(table) == 0:
        raise InterpolationError("cannot render an empty table")
    if fmt == "csv":
        return render_csv(table)
    if fmt == "md":
        return render_markdown(table)
    raise InterpolationError(f"unknown table format {fmt!r}")


# -- parser ----------------------------------------------------------------

def _add_basis(p):
    p.add_argument("--basis", type=basis_arg, default="chebyshev", metavar="BASIS",
                   help="chebyshev (default), legendre, monomial or custom:<path> "
                        "to a 'k,alpha,beta,gamma' CSV table")


def _add_output(p):
    p.add_argument("--output", "-o", metavar="PATH",
                   help="write the result here instead of stdout")


def _add_data_sources(p, need_values=True):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--nodes", choices=NODE_FAMILIES, metavar="FAMILY",
                   help=f"standard node family ({', '.join(NODE_FAMILIES)}); needs --n")
    g.add_argument("--nodes-file", metavar="PATH",
                   help="text file with one node per line ('#' starts a comment)")
    p.add_argument("--n", type=positive_int, metavar="N",
                   help="degree for --nodes (the family has N+1 nodes)")
    if need_values:
        v = p.add_mutually_exclusive_group(required=True)
        v.add_argument("--rhs", choices=RHS_FAMILIES, metavar="FAMILY",
                       help=f"standard right-hand side ({', '.join(RHS_FAMILIES)})")
        v.add_argument("--values-file", metavar="PATH",
                       help="text file with one function value per line")
    p.add_argument("--digits", type=positive_int, default=DEFAULT_DIGITS,
                   help=f"decimal digits for high-precision work (default {DEFAULT_DIGITS})")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="recurinterp",
        description="Polynomial interpolation in bases defined by a three-term "
                    "recurrence: solve, evaluate, update, downdate and benchmark.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("solve", help="interpolation coefficients for given data")
    _add_basis(p)
    _add_data_sources(p)
    p.add_argument("--algo", choices=SOLVERS, default="direct",
                   help="solver (default direct)")
    p.add_argument("--ordering", choices=("higham", "natural"), default="higham",
                   help="node order used by the solver (default higham)")
    _add_output(p)

    p = sub.add_parser("eval", help="evaluate a coefficient file")
    _add_basis(p)
    p.add_argument("--coeffs-file", required=True, metavar="PATH",
                   help="coefficient CSV with header 'k,c_k'")
    p.add_argument("--at", type=float, nargs="+", required=True, metavar="X",
                   help="evaluation point(s)")
    _add_output(p)

    p = sub.add_parser("update", help="add points to an interpolant in O(n) each")
    _add_basis(p)
    p.add_argument("--nodes-file", required=True, metavar="PATH", help="existing nodes")
    p.add_argument("--values-file", required=True, metavar="PATH", help="existing values")
    p.add_argument("--add-node", type=float, nargs="+", required=True, metavar="X",
                   help="node(s) to add, in order")
    p.add_argument("--add-value", type=float, nargs="+", required=True, metavar="F",
                   help="value(s) at the added nodes")
    _add_output(p)

    p = sub.add_parser("downdate", help="remove one point from an interpolant in O(n)")
    _add_basis(p)
    p.add_argument("--nodes-file", required=True, metavar="PATH", help="existing nodes")
    p.add_argument("--values-file", required=True, metavar="PATH", help="existing values")
    r = p.add_mutually_exclusive_group(required=True)
    r.add_argument("--remove-index", type=int, metavar="J",
                   help="zero-based line index of the node to remove")
    r.add_argument("--remove-node", type=float, metavar="X",
                   help="value of the node to remove")
    _add_output(p)

    p = sub.add_parser("bench", help="stability experiment grid")
    _add_basis(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--nodes", type=_choice_list(NODE_FAMILIES, upper=True),
                   default=NODE_FAMILIES, metavar="LIST",
                   help=f"comma-separated node families (default {','.join(NODE_FAMILIES)})")
    g.add_argument("--nodes-file", metavar="PATH",
                   help="run one cell on these nodes instead of the families")
    v = p.add_mutually_exclusive_group()
    v.add_argument("--rhs", type=_choice_list(RHS_FAMILIES, upper=True),
                   default=RHS_FAMILIES, metavar="LIST",
                   help=f"comma-separated right-hand sides (default {','.join(RHS_FAMILIES)})")
    v.add_argument("--values-file", metavar="PATH",
                   help="values matching --nodes-file")
    p.add_argument("--n", type=int_list, default=DEFAULT_NS, metavar="LIST",
                   help=f"comma-separated degrees (default {','.join(map(str, DEFAULT_NS))})")
    p.add_argument("--algos", type=_choice_list(ALGORITHMS, upper=True), default=ALGORITHMS,
                   metavar="LIST",
                   help="comma-separated algorithms among ge,bph,incr,direct,del (default all)")
    p.add_argument("--ordering", choices=("higham", "natural"), default="higham",
                   help="node order applied before every solver (default higham)")
    p.add_argument("--digits", type=positive_int, default=DEFAULT_DIGITS,
                   help=f"decimal digits of the reference solution (default {DEFAULT_DIGITS})")
    p.add_argument("--format", choices=("csv", "md"), default="csv",
                   help="output format (default csv)")
    p.add_argument("--jobs", type=positive_int, default=1,
                   help="worker processes for independent cells (default 1)")
    _add_output(p)

    p = sub.add_parser("condition", help="2-norm condition number of the matrix")
    _add_basis(p)
    _add_data_sources(p, need_values=False)
    _add_output(p)
    return parser


def parse_args(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if isinstance(args.basis, str):
        args.basis = get_basis(args.basis)
    if args.command in ("solve", "condition"):
        if args.nodes is not None and args.n is None:
            parser.error("argument --n: required with --nodes")
        if args.nodes_file is not None and args.n is not None:
            parser.error("argument --n: not allowed with --nodes-file")
    if args.command == "update" and len(args.add_node) != len(args.add_value):
        parser.error("argument --add-value: needs one value per --add-node")
    if args.command == "bench" and (args.nodes_file is None) != (args.values_file is None):
        parser.error("argument --values-file: --nodes-file and --values-file go together")
    return args


# -- commands --------------------------------------------------------------

class UsageError(Exception):
    """Bad input discovered after argument parsing (exit status 2)."""


def _read(path, reader=fileio.read_numbers):
    try:
        return reader(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except fileio.FormatError as exc:
        raise UsageError(str(exc)) from None


def _load_data(args, need_values=True):
    if args.nodes_file is not None:
        x = _read(args.nodes_file)
    else:
        x = make_nodes(args.nodes, args.n, args.digits)
    if not need_values:
        return x, None
    if args.values_file is not None:
        f = _read(args.values_file)
    else:
        f = make_rhs(args.rhs, x, args.digits)
    if f.size != x.size:
        raise UsageError(f"{x.size} nodes but {f.size} values")
    return x, f


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def solve_coefficients(basis, nodes, values, algo="direct", ordering="higham"):
    """Coefficients of the interpolant, computed by the chosen solver."""
    order = make_ordering(ordering, basis, nodes)
    x, f = apply_ordering(order, nodes, values)
    if algo == "direct":
        return direct_solve_system(build_matrix(basis, x),
                                   build_weights(x) if x.size > 1 else None, f)
    if algo == "incr":
        return incremental_solve(basis, x, f)
    if algo == "bph":
        return bph_solve(basis, x, f)
    if algo == "ge":
        sol = ge_solve(build_matrix(basis, x), f)
        if sol.status == "singular":
            print("warning: near-singular pivot in Gaussian elimination", file=sys.stderr)
        return sol.coef
    raise InterpolationError(f"unknown solver {algo!r}")


def cmd_solve(args):
    x, f = _load_data(args)
    c = solve_coefficients(args.basis, x, f, args.algo, args.ordering)
    if not np.all(np.isfinite(c)):
        raise ArithmeticError("solver produced non-finite coefficients")
    _emit(fileio.format_coefficients(c), args.output)


def cmd_eval(args):
    c = _read(args.coeffs_file, fileio.read_coefficients)
    y = evaluate_expansion(args.basis, c, np.array(args.at))
    _emit(fileio.format_numbers(np.atleast_1d(y)), args.output)


def _load_interpolant(args):
    x, f = _read(args.nodes_file), _read(args.values_file)
    if x.size != f.size:
        raise UsageError(f"{x.size} nodes but {f.size} values")
    if x.size == 0:
        raise UsageError(f"{args.nodes_file} contains no nodes")
    return build_interpolant(args.basis, x, f)


def cmd_update(args):
    interp = _load_interpolant(args)
    for xn, fn in zip(args.add_node, args.add_value):
        interp = add_node(interp, xn, fn)
    _emit(fileio.format_coefficients(interp.c), args.output)


def cmd_downdate(args):
    interp = _load_interpolant(args)
    if args.remove_node is not None:
        hits = np.flatnonzero(interp.nodes == args.remove_node)
        if hits.size == 0:
            raise UsageError(f"argument --remove-node: {args.remove_node!r} is not a node")
        j = int(hits[0])
    else:
        j = args.remove_index
        if not 0 <= j < interp.nodes.size:
            raise UsageError(f"argument --remove-index: {j} outside 0..{interp.nodes.size - 1}")
    _emit(fileio.format_coefficients(remove_node(interp, j).c), args.output)


def cmd_bench(args):
    if args.nodes_file is not None:
        x, f = _read(args.nodes_file), _read(args.values_file)
        specs = [ExperimentSpec("file", "file", max(x.size - 1, 1), args.basis, args.ordering,
                                args.algos, args.digits, tuple(x), tuple(f))]
    else:
        specs = make_grid(args.nodes, args.rhs, args.n, args.basis, args.ordering,
                          args.algos, args.digits)
    table = run_grid(specs, n_jobs=args.jobs)
    _emit(render_table(table, args.format), args.output)


def cmd_condition(args):
    x, _ = _load_data(args, need_values=False)
    kappa = condition_number(args.basis, x, args.digits)
    _emit(f"{float(kappa)!r}\n", args.output)


COMMANDS = {"solve": cmd_solve, "eval": cmd_eval, "update": cmd_update,
            "downdate": cmd_downdate, "bench": cmd_bench, "condition": cmd_condition}


def main(argv=None):
    args = parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"recurinterp {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (InterpolationError, ArithmeticError) as exc:
        # input problems (duplicates, bad lengths) are usage errors; the rest is numerical
        numerical = isinstance(exc, ArithmeticError)
        print(f"recurinterp {args.command}: error: {exc}", file=sys.stderr)
        return 1 if numerical else 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
