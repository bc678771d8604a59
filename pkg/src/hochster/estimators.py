"""scikit-learn transformer turning complexes or rings into fingerprint vectors.

Fitting only fixes the feature layout (the largest degree seen), so vectors
from different complexes line up column by column.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graded_ring import GradedAlgebra, RingFingerprint, fingerprint
from .validation import check_coefficients, check_complex


class RingFingerprinter(TransformerMixin, BaseEstimator):
    """Map complexes (or graded algebras) to fixed-length fingerprint rows.

    Each row holds the Hilbert function, the decomposable dimensions and
    the multiplication ranks up to ``max_degree_``.
    """

    def __init__(self, coefficients="q", max_degree=None):
        self.coefficients = coefficients
        self.max_degree = max_degree

    def _fingerprints(self, X):
        check_coefficients(self.coefficients, field=True)
        out = []
        for item in X:
            if isinstance(item, RingFingerprint):
                out.append(item)
            elif isinstance(item, GradedAlgebra):
                out.append(fingerprint(item))
            else:
                from .moment_angle import hochster_ring

                out.append(hochster_ring(check_complex(item), self.coefficients).fingerprint())
        return out

    def fit(self, X, y=None):
        fps = self._fingerprints(X)
        if self.max_degree is not None:
            self.max_degree_ = int(self.max_degree)
        else:
            self.max_degree_ = max((d for fp in fps for d, _ in fp.hilbert), default=0)
        self.n_features_out_ = len(RingFingerprint((), (), ()).feature_vector(self.max_degree_))
        return self

    def transform(self, X):
        check_is_fitted(self, "max_degree_")
        fps = self._fingerprints(X)
        return np.array([fp.feature_vector(self.max_degree_) for fp in fps], dtype=np.int64).reshape(len(fps), -1)

    def fit_transform(self, X, y=None, **fit_params):
        fps = self._fingerprints(X)
        return self.fit(fps).transform(fps)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "max_degree_")
        top = self.max_degree_
        names = [f"hilbert_{d}" for d in range(top + 1)]
        names += [f"decomposable_{d}" for d in range(top + 1)]
        names += [f"mult_{i}_{j}" for i in range(top + 1) for j in range(i, top + 1 - i)]
        return np.array(names, dtype=object)
