import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from hochster.estimators import RingFingerprinter
from hochster.graded_ring import sphere_product_ring
from hochster.zoo import zoo


def test_params_and_clone():
    est = RingFingerprinter(coefficients="fp:2", max_degree=9)
    assert est.get_params() == {"coefficients": "fp:2", "max_degree": 9}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est


def test_transform_shape_and_names():
    X = ["square", zoo("pentagon"), (4, [(1, 2), (2, 3), (3, 4), (4, 1)])]
    est = RingFingerprinter().fit(X)
    out = est.transform(X)
    assert out.shape == (3, est.n_features_out_)
    assert out.dtype == np.int64
    assert len(est.get_feature_names_out()) == est.n_features_out_
    # the square given by name and by facet list agree
    assert (out[0] == out[2]).all()
    assert not (out[0] == out[1]).all()


def test_fit_transform_matches_and_accepts_rings():
    X = [sphere_product_ring(3, 3), zoo("square")]
    a = RingFingerprinter().fit_transform(X)
    b = RingFingerprinter().fit(X).transform(X)
    assert (a == b).all()
    assert (a[0] == a[1]).all()


def test_not_fitted():
    with pytest.raises(NotFittedError):
        RingFingerprinter().transform(["square"])


def test_rejects_integer_coefficients():
    with pytest.raises(ValueError):
        RingFingerprinter(coefficients="z").fit(["square"])
