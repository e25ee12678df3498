from fractions import Fraction

import mpmath
import numpy as np
import pytest

from recurinterp import direct
from recurinterp.basis import chebyshev_basis, legendre_basis
from recurinterp.bench import make_nodes, make_rhs
from recurinterp.exceptions import LengthMismatchError, SingularExactError, ZeroNormError
from recurinterp.oracle import (basis_matrix_mp, condition_number, err_res,
                                exact_coefficients, exact_coefficients_rational, exact_eta,
                                relative_error, round_to_float, to_fraction, to_mpf)
from recurinterp.ordering import apply_ordering, higham_ordering
from recurinterp.reference import ge_solve

from reference_tables import TABLES

CHEB = chebyshev_basis()
U = 2.0 ** -52


def test_exact_coefficients_of_x_squared():
    c = exact_coefficients(CHEB, [-1, 0, 1], [1, 0, 1])
    assert [float(v) for v in c] == [0.5, 0.0, 0.5]
    q = exact_coefficients_rational(CHEB, [-1, 0, 1], [1, 0, 1])
    assert q == [Fraction(1, 2), 0, Fraction(1, 2)]


def test_single_node():
    assert [float(v) for v in exact_coefficients(CHEB, [0.3], [2.5])] == [2.5]
    assert exact_coefficients_rational(CHEB, [0.3], [2.5]) == [Fraction(2.5)]


def test_exact_eta_example():
    eta = exact_eta(CHEB, [0, 1])
    assert [float(v) for v in eta] == [0.5, -1.0, 0.5]


def test_rational_and_mp_paths_agree():
    x = make_nodes("A3", 10)
    f = make_rhs("F3", x)
    mp_c = exact_coefficients(CHEB, x, f)
    q_c = exact_coefficients_rational(CHEB, x, f)
    scale = max(abs(v) for v in q_c)
    assert max(abs(to_fraction(a) - b) for a, b in zip(mp_c, q_c)) <= scale * Fraction(1, 10 ** 40)


def test_precision_monotonicity():
    x = make_nodes("A2", 12)
    f = make_rhs("F3", x)
    lo = exact_coefficients(CHEB, x, f, digits=30)
    hi = exact_coefficients(CHEB, x, f, digits=60)
    with mpmath.workdps(60):
        diff = max(abs(a - b) for a, b in zip(lo, hi))
        scale = max(abs(b) for b in hi)
        assert diff / scale < mpmath.mpf(10) ** -15


def test_singular_exact_raises():
    with pytest.raises(SingularExactError):
        exact_coefficients(CHEB, [0.5, 0.5], [1, 2])
    with pytest.raises(LengthMismatchError):
        exact_coefficients(CHEB, [0.5, 0.25], [1])


def test_conversions():
    assert to_fraction(mpmath.mpf(-0.75)) == Fraction(-3, 4)
    assert to_fraction(np.int64(3)) == 3
    assert to_fraction(0.1) == Fraction(0.1)
    assert to_mpf(Fraction(1, 3)) == mpmath.mpf(1) / 3
    with pytest.raises(ValueError):
        to_fraction(mpmath.inf)


def test_basis_matrix_mp_matches_float():
    x = make_nodes("A1", 6)
    P = basis_matrix_mp(CHEB, x)
    np.testing.assert_allclose(np.array(P, dtype=float), direct.build_matrix(CHEB, x).P,
                               atol=1e-15)


@pytest.mark.parametrize("family", ["A1", "A2"])
def test_condition_of_chebyshev_families_is_at_most_two(family):
    for n in (5, 10, 20, 30):
        assert float(condition_number(CHEB, make_nodes(family, n))) <= 2.0


def test_condition_a3_n30():
    assert float(condition_number(CHEB, make_nodes("A3", 30))) == pytest.approx(5.11e6, rel=0.1)


def test_condition_agrees_with_svd():
    x = make_nodes("A3", 8)
    for basis in (CHEB, legendre_basis()):
        s = np.linalg.svd(direct.build_matrix(basis, x).P, compute_uv=False)
        assert float(condition_number(basis, x)) == pytest.approx(s[0] / s[-1], rel=1e-10)


def test_condition_of_singular_matrix_is_infinite():
    assert condition_number(CHEB, [0.25, 0.25]) == mpmath.inf


def test_relative_error_definition():
    c_star = [mpmath.mpf(1), mpmath.mpf(0)]
    assert relative_error([1.0, 0.0], c_star) == 0.0
    # 1 + u is exactly representable, so the error is one unit of u * |c*|
    assert relative_error([1.0 + U, 0.0], c_star) == pytest.approx(1.0, rel=1e-6)
    with pytest.raises(ZeroNormError):
        relative_error([1.0], [mpmath.mpf(0)])
    with pytest.raises(LengthMismatchError):
        relative_error([1.0], c_star)


def test_err_res_on_a1_f1_n5():
    x0 = make_nodes("A1", 5)
    x, f = apply_ordering(higham_ordering(CHEB, x0), x0, make_rhs("F1", x0))
    m = direct.build_matrix(CHEB, x)
    err, res = err_res(ge_solve(m, f).coef, exact_coefficients(CHEB, x, f), m, f)
    tab_err, tab_res = TABLES[("A1", "F1")][5]["GE"]
    assert abs(err - tab_err) <= 2 and abs(res - tab_res) <= 2


def test_err_res_of_exact_solution():
    x = make_nodes("A2", 5)
    f = make_rhs("F3", x)
    m = direct.build_matrix(CHEB, x)
    c_star = exact_coefficients(CHEB, x, f)
    err, res = err_res(round_to_float(c_star), c_star, m, f)
    assert err <= 0.5 and res <= 2


def test_a3_f3_n10_reference_scores_solvers_in_table_range():
    x0 = make_nodes("A3", 10)
    x, f = apply_ordering(higham_ordering(CHEB, x0), x0, make_rhs("F3", x0))
    m = direct.build_matrix(CHEB, x)
    err = relative_error(ge_solve(m, f).coef, exact_coefficients(CHEB, x, f))
    assert err <= 100 * (TABLES[("A3", "F3")][10]["GE"][0] + 0.005)
