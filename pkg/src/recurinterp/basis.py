"""Polynomial bases defined by a three-term recurrence.

A basis is described by three coefficient sequences so that

    alpha(k) * p[k+1](x) = (x + beta(k)) * p[k](x) - gamma(k) * p[k-1](x)

with ``p[-1] = 0`` and ``p[0] = 1``. The sequences are plain functions of
``k`` and may return exact numbers (``int`` or :class:`fractions.Fraction`)
so that high-precision code can evaluate the same basis without first
rounding the coefficients to binary64.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .exceptions import InterpolationError


@dataclass(frozen=True, eq=False)
class RecurrenceBasis:
    """Coefficient sequences of a three-term recurrence.

    ``gamma`` is never queried at ``k = 0`` since it multiplies ``p[-1]``.
    Instances are immutable and hash by identity, which lets float
    coefficient tables be cached per basis.
    """

    alpha: Callable[[int], object]
    beta: Callable[[int], object]
    gamma: Callable[[int], object]
    name: str = "custom"
    length: int | None = field(default=None)

    def __repr__(self):
        return f"RecurrenceBasis({self.name!r})"

    def exact(self, k):
        """Return ``(alpha(k), beta(k), gamma(k))`` as given by the definition.

        ``gamma`` is reported as 0 at ``k = 0``.
        """
        if k < 0:
            raise InterpolationError(f"negative recurrence index {k}")
        if self.length is not None and k >= self.length:
            raise InterpolationError(
                f"basis {self.name!r} only defines rows 0..{self.length - 1}, "
                f"row {k} requested")
        a = self.alpha(k)
        if a == 0:
            raise InterpolationError(f"alpha({k}) = 0 in basis {self.name!r}")
        g = self.gamma(k) if k > 0 else 0
        return a, self.beta(k), g

    def coefficients(self, n):
        """Float arrays ``alpha[0:n+1], beta[0:n+1], gamma[0:n+1]``.

        ``gamma[0]`` is a zero placeholder. The arrays are shared between
        callers and marked read-only.
        """
        return _coefficient_table(self, int(n))


@lru_cache(maxsize=256)
def _coefficient_table(basis, n):
    rows = [basis.exact(k) for k in range(n + 1)]
    out = tuple(np.array([float(r[i]) for r in rows]) for i in range(3))
    for arr in out:
        arr.flags.writeable = False
    return out


def chebyshev_basis():
    """Chebyshev polynomials of the first kind, ``T_k``."""
    return _CHEBYSHEV


def legendre_basis():
    """Legendre polynomials ``P_k`` (``(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}``)."""
    return _LEGENDRE


def monomial_basis():
    """Monomials ``x**k``."""
    return _MONOMIAL


_CHEBYSHEV = RecurrenceBasis(
    alpha=lambda k: 1 if k == 0 else Fraction(1, 2),
    beta=lambda k: 0,
    gamma=lambda k: Fraction(1, 2),
    name="chebyshev",
)

_LEGENDRE = RecurrenceBasis(
    alpha=lambda k: Fraction(k + 1, 2 * k + 1),
    beta=lambda k: 0,
    gamma=lambda k: Fraction(k, 2 * k + 1),
    name="legendre",
)

_MONOMIAL = RecurrenceBasis(
    alpha=lambda k: 1,
    beta=lambda k: 0,
    gamma=lambda k: 0,
    name="monomial",
)

BUILTIN_BASES = {
    "chebyshev": chebyshev_basis,
    "legendre": legendre_basis,
    "monomial": monomial_basis,
}


def table_basis(alphas: Sequence, betas: Sequence, gammas: Sequence, name="custom"):
    """Basis backed by finite coefficient tables.

    Queries past the end of the tables raise instead of extrapolating.
    ``gammas[0]`` is ignored.
    """
    if not (len(alphas) == len(betas) == len(gammas)):
        raise InterpolationError("coefficient tables differ in length")
    alphas, betas, gammas = tuple(alphas), tuple(betas), tuple(gammas)
    for k, a in enumerate(alphas):
        if a == 0:
            raise InterpolationError(f"alpha({k}) = 0 in basis {name!r}")
    return RecurrenceBasis(
        alpha=alphas.__getitem__,
        beta=betas.__getitem__,
        gamma=gammas.__getitem__,
        name=name,
        length=len(alphas),
    )


def get_basis(basis):
    """Resolve a basis name or pass a :class:`RecurrenceBasis` through."""
    if isinstance(basis, RecurrenceBasis):
        return basis
    try:
        return BUILTIN_BASES[basis]()
    except (KeyError, TypeError):
        raise InterpolationError(
            f"unknown basis {basis!r}; expected one of {sorted(BUILTIN_BASES)} "
            "or a RecurrenceBasis") from None


def evaluate_basis_row(basis, n, x):
    """Values ``(p_0(x), ..., p_n(x))`` from one forward recurrence pass.

    ``x`` may be a scalar or an array; the degree axis is appended last.
    Overflow is not trapped and shows up as ``inf``/``nan`` entries.
    """
    if n < 0:
        raise InterpolationError(f"degree must be non-negative, got {n}")
    alpha, beta, gamma = basis.coefficients(n)
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape + (n + 1,))
    out[..., 0] = 1.0
    if n >= 1:
        out[..., 1] = (x + beta[0]) / alpha[0]
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(2, n + 1):
            out[..., k] = ((x + beta[k - 1]) * out[..., k - 1]
                           - gamma[k - 1] * out[..., k - 2]) / alpha[k - 1]
    return out


def evaluate_basis(basis, k, x):
    """Value of the single basis polynomial ``p_k`` at ``x``."""
    row = evaluate_basis_row(basis, k, x)
    val = row[..., k]
    return float(val) if val.ndim == 0 else val


def evaluate_expansion(basis, c, x):
    """Evaluate ``sum_k c[k] * p_k(x)``."""
    c = np.asarray(c, dtype=float)
    if c.ndim != 1 or c.size == 0:
        raise InterpolationError("coefficient vector must be 1-D and nonempty")
    rows = evaluate_basis_row(basis, c.size - 1, x)
    with np.errstate(over="ignore", invalid="ignore"):
        val = rows @ c
    return float(val) if np.ndim(val) == 0 else val
