import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.linear_model import LinearRegression
from sklearn.pipeline import make_pipeline

from recurinterp import (IncrementalInterpolator, RecurrenceInterpolator,
                         VandermondeFeatures)
from recurinterp.basis import evaluate_expansion, legendre_basis
from recurinterp.bench import make_nodes
from recurinterp.exceptions import DuplicateNodeError, LengthMismatchError


def test_params_and_clone():
    est = RecurrenceInterpolator(basis="legendre", method="bph", ordering="natural")
    assert est.get_params() == {"basis": "legendre", "method": "bph", "ordering": "natural"}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est


@pytest.mark.parametrize("method", ["direct", "incremental", "bph", "ge"])
def test_fit_predict_interpolates(method):
    x = make_nodes("A2", 12)
    y = np.sin(2 * x)
    est = RecurrenceInterpolator(method=method).fit(x.reshape(-1, 1), y)
    np.testing.assert_allclose(est.predict(x.reshape(-1, 1)), y, atol=1e-13)
    assert est.score(x.reshape(-1, 1), y) == pytest.approx(1.0)
    np.testing.assert_allclose(evaluate_expansion(est.basis_, est.coef_, 0.3),
                               est.predict([0.3])[0], atol=1e-15)


def test_methods_agree():
    x = make_nodes("A1", 15)
    y = 1 / (1 + 25 * x ** 2)
    coefs = [RecurrenceInterpolator(method=m).fit(x, y).coef_
             for m in ("direct", "incremental", "bph", "ge")]
    for c in coefs[1:]:
        np.testing.assert_allclose(c, coefs[0], atol=1e-12)


def test_multi_output():
    x = make_nodes("A2", 8)
    Y = np.column_stack([np.cos(x), x ** 3, np.ones_like(x)])
    est = RecurrenceInterpolator().fit(x, Y)
    assert est.coef_.shape == (9, 3)
    np.testing.assert_allclose(est.predict(x), Y, atol=1e-13)


def test_input_validation():
    est = RecurrenceInterpolator()
    with pytest.raises(ValueError):
        est.fit(np.ones((4, 2)), np.ones(4))
    with pytest.raises(DuplicateNodeError):
        est.fit([0.0, 0.5, 0.5], [1, 2, 3])
    with pytest.raises(LengthMismatchError):
        est.fit([0.0, 0.5], [1, 2, 3])
    with pytest.raises(ValueError):
        RecurrenceInterpolator(method="qr").fit([0.0, 1.0], [1, 2])
    with pytest.raises(NotFittedError):
        est.predict([0.0])


def test_partial_fit_matches_fit(rng):
    x = rng.uniform(-1, 1, 10)
    y = rng.standard_normal(10)
    whole = IncrementalInterpolator().fit(x, y)
    parts = IncrementalInterpolator().partial_fit(x[:4], y[:4]).partial_fit(x[4:], y[4:])
    assert np.array_equal(whole.coef_, parts.coef_)
    assert whole.nodes_.tolist() == x.tolist()
    refit = parts.fit(x[:3], y[:3])
    assert refit.nodes_.size == 3


def test_remove_and_remove_node(rng):
    x = rng.uniform(-1, 1, 6)
    y = rng.standard_normal(6)
    est = IncrementalInterpolator(basis="legendre").fit(x, y)
    est.remove_node(x[2])
    assert est.nodes_.tolist() == np.delete(x, 2).tolist()
    est.remove(0)
    keep_x, keep_y = np.delete(x, [0, 2]), np.delete(y, [0, 2])
    ref = RecurrenceInterpolator(basis=legendre_basis(), method="ge",
                                 ordering="natural").fit(keep_x, keep_y)
    np.testing.assert_allclose(est.predict(keep_x), keep_y, atol=1e-10)
    np.testing.assert_allclose(est.coef_, ref.coef_, atol=1e-10)
    with pytest.raises(KeyError):
        est.remove_node(5.0)
    with pytest.raises(NotFittedError):
        IncrementalInterpolator().remove(0)


def test_vandermonde_features_pipeline():
    x = np.linspace(-1, 1, 40)
    y = 3 - x + 0.5 * (2 * x ** 2 - 1)
    model = make_pipeline(VandermondeFeatures(degree=4), LinearRegression(fit_intercept=False))
    model.fit(x.reshape(-1, 1), y)
    np.testing.assert_allclose(model.predict(x.reshape(-1, 1)), y, atol=1e-12)
    feats = VandermondeFeatures(degree=2, basis="legendre").fit(x)
    assert feats.transform(x).shape == (40, 3)
    assert feats.get_feature_names_out().tolist() == ["p0(x0)", "p1(x0)", "p2(x0)"]
