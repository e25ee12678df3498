import numpy as np
import pytest

from recurinterp import direct
from recurinterp.basis import chebyshev_basis, evaluate_basis_row, legendre_basis
from recurinterp.bench import make_nodes, make_rhs
from recurinterp.exceptions import (DuplicateNodeError, InterpolationError,
                                    LengthMismatchError, SingularPivotError)
from recurinterp.oracle import exact_coefficients, relative_error
from recurinterp.ordering import apply_ordering, higham_ordering

from reference_tables import TABLES

CHEB = chebyshev_basis()
LEG = legendre_basis()
U = 2.0 ** -52


def test_matrix_examples():
    m = direct.build_matrix(CHEB, [-1, 0, 1])
    assert m.P.tolist() == [[1, -1, 1], [1, 0, -1], [1, 1, 1]]
    assert direct.build_matrix(LEG, [0.0]).P.tolist() == [[1.0]]
    assert direct.build_matrix(CHEB, [0.5]).n == 0


def test_matrix_matches_basis_rows(rng):
    x = rng.uniform(-1, 1, 9)
    m = direct.build_matrix(LEG, x)
    np.testing.assert_array_equal(m.P, evaluate_basis_row(LEG, 8, x))
    np.testing.assert_array_equal(m.column(3), m.P[:, 3])
    with pytest.raises(ValueError):
        m.P[0, 0] = 2.0


def test_matrix_rejects_duplicates():
    with pytest.raises(DuplicateNodeError):
        direct.build_matrix(CHEB, [0.0, 0.5, 0.0])
    with pytest.raises(InterpolationError):
        direct.build_matrix(CHEB, [])


def test_weights_small_case():
    w = direct.build_weights([0.0, 1.0, 2.0])
    # linear extrapolation from 0 and 1 to 2
    np.testing.assert_allclose(w.ell[2], [-1.0, 2.0])
    np.testing.assert_allclose(w.ell[1], [1.0])
    assert w.ell[0].size == 0
    np.testing.assert_allclose(w.w, [1.0, 1.0, 2.0])


def test_weights_match_product_formula(rng):
    x = rng.uniform(-1, 1, 9)
    w = direct.build_weights(x)
    for k in range(1, 9):
        cardinal = [np.prod([(x[k] - x[i]) / (x[j] - x[i]) for i in range(k) if i != j])
                    for j in range(k)]
        np.testing.assert_allclose(w.ell[k], cardinal, rtol=1e-12)


def test_weights_errors():
    with pytest.raises(DuplicateNodeError):
        direct.build_weights([0.0, 1.0, 1.0])
    with pytest.raises(InterpolationError):
        direct.build_weights([0.0])
    with pytest.raises(SingularPivotError):
        direct.build_weights(np.linspace(0, 1e-120, 5))


def test_solve_examples():
    m = direct.build_matrix(CHEB, [-1, 0, 1])
    w = direct.build_weights(m.nodes)
    np.testing.assert_allclose(direct.solve(m, w, [1, 0, 1]), [0.5, 0, 0.5], atol=1e-16)
    assert direct.solve(m, w, [0, 0, 0]).tolist() == [0, 0, 0]
    single = direct.build_matrix(CHEB, [0.3])
    assert direct.solve(single, None, [4.0]).tolist() == [4.0]


def test_solve_errors():
    m = direct.build_matrix(CHEB, [-1, 0, 1])
    w = direct.build_weights(m.nodes)
    with pytest.raises(LengthMismatchError):
        direct.solve(m, w, [1, 2])
    with pytest.raises(LengthMismatchError):
        direct.solve(m, direct.build_weights([0.0, 1.0]), [1, 2, 3])


def test_a1_f1_n10_error_order_of_magnitude():
    x0 = make_nodes("A1", 10)
    x, f = apply_ordering(higham_ordering(CHEB, x0), x0, make_rhs("F1", x0))
    c = direct.direct_solve(CHEB, x, f)
    assert relative_error(c, exact_coefficients(CHEB, x, f)) <= 1e2


def test_columns_as_right_hand_sides_give_unit_vectors():
    x = make_nodes("A2", 8)
    m = direct.build_matrix(CHEB, x)
    w = direct.build_weights(x)
    cs = direct.solve_many(m, w, [m.column(k) for k in range(9)])
    np.testing.assert_allclose(np.array(cs), np.eye(9), atol=1e-13)


def test_solve_many_repeated_rhs_is_deterministic():
    x = make_nodes("A1", 6)
    m = direct.build_matrix(CHEB, x)
    f = make_rhs("F3", x)
    a, b = direct.solve_many(m, direct.build_weights(x), [f, f])
    assert np.array_equal(a, b)


def test_solve_many_on_a2_within_table_band():
    x0 = make_nodes("A2", 10)
    order = higham_ordering(CHEB, x0)
    x = x0[order.permutation]
    m = direct.build_matrix(CHEB, x)
    fs = [make_rhs(r, x0)[order.permutation] for r in ("F1", "F2", "F3")]
    for rhs, f, c in zip(("F1", "F2", "F3"), fs, direct.solve_many(m, direct.build_weights(x), fs)):
        err = relative_error(c, exact_coefficients(CHEB, x, f))
        assert err <= 100 * (TABLES[("A2", rhs)][10]["DIRECT"][0] + 0.005)


@pytest.mark.parametrize("family", ["A1", "A2"])
def test_residual_property(family):
    for n in (5, 10, 20, 30):
        x0 = make_nodes(family, n)
        x, f = apply_ordering(higham_ordering(CHEB, x0), x0, make_rhs("F3", x0))
        m = direct.build_matrix(CHEB, x)
        c = direct.solve(m, direct.build_weights(x), f)
        assert np.linalg.norm(f - m.P @ c) <= 1e4 * U * np.linalg.norm(c)


def test_counters_track_weight_work():
    x = make_nodes("A1", 12)
    m = direct.build_matrix(CHEB, x)
    before = direct.counters.copy()
    w = direct.build_weights(x)
    direct.solve_many(m, w, [np.ones(13)] * 4)
    assert direct.counters["weight_builds"] - before["weight_builds"] == 1
    assert direct.counters["weight_entries"] - before["weight_entries"] == 12 * 13 // 2
    assert direct.counters["solves"] - before["solves"] == 4


def test_singular_denominator_reported():
    # a constant basis row makes the elimination denominator vanish
    m = direct.build_matrix(CHEB, [-1.0, 1.0])
    fake = direct.VandermondeLike(basis=CHEB, nodes=m.nodes, P=np.ones((2, 2)))
    with pytest.raises(SingularPivotError):
        direct.solve(fake, direct.build_weights(m.nodes), [1.0, 2.0])
