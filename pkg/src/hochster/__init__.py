"""Cohomology rings of moment-angle complexes from simplicial complexes.

The ring of ``Z_K`` is assembled from the reduced cohomology of all full
subcomplexes ``K_J``; the package also builds the algebraic models for
connected sums, stellar subdivisions and gyrations and compares them with
direct computation through ring fingerprints.
"""

from .complex_core import (
    MissingFace,
    SimplicialComplex,
    belt_through_missing_edge,
    cone,
    connected_sum,
    find_belts,
    from_facets,
    full_subcomplex,
    irreducible_decomposition,
    is_flag,
    join,
    link,
    missing_faces,
    star,
    stellar_subdivision,
    suspension,
)
from .exact_linalg import Coefficients, FieldMatrix, SmithForm, quotient_coordinates, smith_normal_form
from .exceptions import HochsterError
from .graded_ring import (
    GradedAlgebra,
    RingFingerprint,
    connected_sum_of_sphere_products,
    connected_sum_ring,
    direct_product,
    fingerprint,
    fingerprints_equal,
    gyration,
    gyration_iter,
    match_factors,
    quotient_by_ideal,
    quotient_by_top,
    sphere_product_ring,
    thm4_ring,
    thm5_ring,
    verify_product_decomposition,
)
from .homology import (
    ChainComplex,
    excision_product,
    fundamental_class,
    induced_map_homology,
    reduced_cohomology_basis,
    reduced_homology,
    union_product,
)
from .moment_angle import (
    HochsterRing,
    alexander_duality_check,
    betti_numbers,
    bigraded_betti,
    complex_report,
    cross_validate_gorenstein,
    generation_by_degree_one,
    hochster_ring,
    is_gorenstein_star,
    lbc_check,
    poincare_pairing_check,
    rank_h3_invariant,
)
from .scx import dump, dumps, load, loads
from .zoo import zoo

__version__ = "0.1.0"

__all__ = [
    "ChainComplex",
    "Coefficients",
    "FieldMatrix",
    "GradedAlgebra",
    "HochsterError",
    "HochsterRing",
    "MissingFace",
    "RingFingerprint",
    "SimplicialComplex",
    "SmithForm",
    "alexander_duality_check",
    "belt_through_missing_edge",
    "betti_numbers",
    "bigraded_betti",
    "complex_report",
    "cone",
    "connected_sum",
    "connected_sum_of_sphere_products",
    "connected_sum_ring",
    "cross_validate_gorenstein",
    "direct_product",
    "dump",
    "dumps",
    "excision_product",
    "find_belts",
    "fingerprint",
    "fingerprints_equal",
    "from_facets",
    "full_subcomplex",
    "fundamental_class",
    "generation_by_degree_one",
    "gyration",
    "gyration_iter",
    "hochster_ring",
    "induced_map_homology",
    "irreducible_decomposition",
    "is_flag",
    "is_gorenstein_star",
    "join",
    "lbc_check",
    "link",
    "load",
    "loads",
    "match_factors",
    "missing_faces",
    "poincare_pairing_check",
    "quotient_by_ideal",
    "quotient_by_top",
    "quotient_coordinates",
    "rank_h3_invariant",
    "reduced_cohomology_basis",
    "reduced_homology",
    "smith_normal_form",
    "sphere_product_ring",
    "star",
    "stellar_subdivision",
    "suspension",
    "thm4_ring",
    "thm5_ring",
    "union_product",
    "verify_product_decomposition",
    "zoo",
]
