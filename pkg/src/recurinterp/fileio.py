"""Plain-text file formats used by the command line tool.

* node/value files: UTF-8, one decimal number per line, ``#`` starts a
  comment, blank lines are skipped.
* coefficient files: CSV with header ``k,c_k``.
* basis tables: CSV with header ``k,alpha,beta,gamma``, rows ``k = 0, 1, ...``
  in order; ``gamma`` is ignored on row 0.

Floats are written with :func:`repr`, the shortest string that reads back
to the same binary64 value.
"""

import csv
import io
from fractions import Fraction

import numpy as np

from .basis import table_basis
from .exceptions import InterpolationError


class FormatError(InterpolationError):
    """A data file does not follow the expected layout."""


def _open_text(path):
    return open(path, encoding="utf-8", newline="")


def parse_numbers(text, source="<string>"):
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(float(line))
        except ValueError:
            raise FormatError(f"{source}:{lineno}: not a number: {line!r}") from None
    return np.array(out)


def read_numbers(path):
    with _open_text(path) as fh:
        return parse_numbers(fh.read(), str(path))


def format_numbers(values):
    return "".join(f"{float(v)!r}\n" for v in values)


def write_numbers(path, values):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_numbers(values))


def format_coefficients(c):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "c_k"])
    for k, v in enumerate(c):
        w.writerow([k, repr(float(v))])
    return buf.getvalue()


def parse_coefficients(text, source="<string>"):
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and not r[0].lstrip().startswith("#")]
    if not rows or [h.strip() for h in rows[0]] != ["k", "c_k"]:
        raise FormatError(f"{source}: expected header 'k,c_k'")
    c = []
    for i, row in enumerate(rows[1:]):
        try:
            k, val = int(row[0]), float(row[1])
        except (ValueError, IndexError):
            raise FormatError(f"{source}: malformed row {row!r}") from None
        if k != i:
            raise FormatError(f"{source}: expected k = {i}, found {k}")
        c.append(val)
    if not c:
        raise FormatError(f"{source}: no coefficients")
    return np.array(c)


def read_coefficients(path):
    with _open_text(path) as fh:
        return parse_coefficients(fh.read(), str(path))


def write_coefficients(path, c):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_coefficients(c))


def parse_basis_table(text, name="custom", source="<string>"):
    """Build a basis from ``k,alpha,beta,gamma`` rows.

    Entries are parsed as exact decimal fractions, so ``0.1`` means one
    tenth for the high-precision oracle and the nearest binary64 number for
    the floating-point solvers.
    """
    rows = [r for r in csv.reader(io.StringIO(text))
            if r and not r[0].lstrip().startswith("#")]
    if not rows or [h.strip() for h in rows[0]] != ["k", "alpha", "beta", "gamma"]:
        raise FormatError(f"{source}: expected header 'k,alpha,beta,gamma'")
    alphas, betas, gammas = [], [], []
    for i, row in enumerate(rows[1:]):
        if len(row) != 4:
            raise FormatError(f"{source}: row {i} needs 4 fields, got {row!r}")
        try:
            k = int(row[0])
            a, b, g = (Fraction(s.strip()) for s in row[1:])
        except ValueError:
            raise FormatError(f"{source}: malformed row {row!r}") from None
        if k != i:
            raise FormatError(f"{source}: expected k = {i}, found {k}")
        alphas.append(a)
        betas.append(b)
        gammas.append(g if k > 0 else Fraction(0))
    if not alphas:
        raise FormatError(f"{source}: no rows")
    return table_basis(alphas, betas, gammas, name=name)


def read_basis_table(path):
    with _open_text(path) as fh:
        return parse_basis_table(fh.read(), name=f"custom:{path}", source=str(path))
