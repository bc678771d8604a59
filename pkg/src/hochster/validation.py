"""Input coercion shared by the estimator layer and scripts."""

from __future__ import annotations

from .complex_core import SimplicialComplex
from .exact_linalg import Coefficients
from .graded_ring import GradedAlgebra


def check_complex(obj) -> SimplicialComplex:
    """Accept a complex, an ``(m, facets)`` pair or a built-in expression."""
    if isinstance(obj, SimplicialComplex):
        return obj
    if isinstance(obj, str):
        from .zoo import zoo

        K = zoo(obj)
        if not isinstance(K, SimplicialComplex):
            raise TypeError(f"{obj!r} is not a simplicial complex")
        return K
    if isinstance(obj, tuple) and len(obj) == 2:
        m, facets = obj
        return SimplicialComplex.from_facets(int(m), facets)
    raise TypeError(f"cannot interpret {type(obj).__name__} as a simplicial complex")


def check_coefficients(spec, field: bool = False) -> Coefficients:
    coeffs = Coefficients.parse(spec)
    if field and not coeffs.is_field:
        raise ValueError("field coefficients required (q or fp:P)")
    return coeffs


def check_algebra(obj, coefficients="q") -> GradedAlgebra:
    """A graded algebra, or the cohomology ring of a complex-like input."""
    if isinstance(obj, GradedAlgebra):
        return obj
    from .moment_angle import hochster_ring

    return hochster_ring(check_complex(obj), check_coefficients(coefficients, field=True)).algebra
