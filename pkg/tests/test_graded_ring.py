import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix

from hochster.exceptions import DimensionMismatch, NoMatch, NotHomogeneous, NotPoincareCandidate, NoTopDegree
from hochster.graded_ring import (
    GradedAlgebra,
    connected_sum_of_sphere_products,
    connected_sum_ring,
    direct_product,
    fingerprint,
    gyration,
    gyration_dimension,
    gyration_iter,
    is_poincare_algebra,
    match_factors,
    product_of,
    quotient_by_ideal,
    quotient_by_top,
    sphere_product_ring,
    sphere_ring,
    thm4_lambda,
    thm4_ring,
    thm5_ring,
    thm5_terms,
    verify_product_decomposition,
    zero_ring,
)
from hochster.moment_angle import betti_numbers, hochster_ring
from hochster.zoo import boundary_simplex, polygon, zoo


def ring_of(name, coeff="q"):
    return hochster_ring(zoo(name), coeff).algebra


def hilbert(A):
    return A.hilbert()


# -- gyration -------------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 7))
def test_gyration_of_sphere(n):
    G = gyration(sphere_ring(n))
    assert hilbert(G) == {n + 1: 1}
    assert fingerprint(G) == fingerprint(sphere_ring(n + 1))


def test_gyration_of_s3_x_s3():
    G = gyration(sphere_product_ring(3, 3))
    assert hilbert(G) == {3: 2, 4: 2, 7: 1}
    assert G.top_degree == 7
    assert is_poincare_algebra(G)


@pytest.mark.parametrize("name", ["square", "O6", "pentagon"])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_gyration_dimension_formula(name, r):
    A = ring_of(name)
    G = gyration_iter(A, r)
    assert G.dim == gyration_dimension(A, r) == A.dim * 2 ** r - (2 ** r - 1) * len(A.top_basis())
    assert G.top_degree == A.top_degree + r


@pytest.mark.parametrize("name", ["square", "O6", "B5"])
def test_gyration_keeps_axioms(name):
    G = gyration_iter(ring_of(name), 2)
    assert G.commutativity_violations() == []
    assert G.associativity_violations(G.random_triples(1000, seed=3)) == []
    assert is_poincare_algebra(G)


def test_gyration_needs_top():
    with pytest.raises(NoTopDegree):
        gyration(zero_ring())


# -- products and quotients --------------------------------------------------


def test_direct_product_examples():
    A = sphere_product_ring(3, 4)
    assert fingerprint(direct_product(A, zero_ring())) == fingerprint(A)
    P = direct_product(sphere_ring(3), sphere_ring(3))
    assert hilbert(P) == {3: 2} and P.table == {}
    Q = quotient_by_ideal(P, [])
    assert hilbert(Q) == {3: 2}


def test_quotient_by_top():
    Q = quotient_by_top(sphere_product_ring(3, 3))
    assert hilbert(Q) == {3: 2} and Q.table == {}
    with pytest.raises(NotPoincareCandidate):
        quotient_by_top(Q)


def test_quotient_by_top_of_icosahedron_keeps_products():
    Q = quotient_by_top(hochster_ring(zoo("I12")).algebra)
    assert Q.table
    assert 15 not in hilbert(Q)


def test_quotient_rejects_inhomogeneous():
    A = sphere_product_ring(3, 4)
    with pytest.raises(NotHomogeneous):
        quotient_by_ideal(A, [{0: 1, 1: 1}])


# -- sphere products and connected sums -----------------------------------


def test_sphere_product_ring_signs():
    A = sphere_product_ring(3, 3)
    assert hilbert(A) == {3: 2, 6: 1}
    assert A.mul(0, 1) == {2: 1}
    assert A.mul(1, 0) == {2: -1}
    assert fingerprint(A) == hochster_ring(polygon(4)).fingerprint()
    B = sphere_product_ring(3, 4)
    assert B.mul(1, 0) == {2: 1}


def test_connected_sum_of_sphere_products():
    A = connected_sum_of_sphere_products([(3, 4, 5)])
    assert hilbert(A) == {3: 5, 4: 5, 7: 1}
    betti = betti_numbers(polygon(5))
    assert [hilbert(A).get(d, 0) for d in range(1, 8)] == betti[1:]
    assert connected_sum_of_sphere_products([]).dim == 0
    with pytest.raises(DimensionMismatch):
        connected_sum_of_sphere_products([(3, 3, 1), (3, 4, 1)])


def test_connected_sum_ring_examples():
    S = sphere_product_ring(3, 3)
    C = connected_sum_ring(S, S)
    assert hilbert(C) == {3: 4, 6: 1}
    assert is_poincare_algebra(C)
    A = ring_of("O6")
    assert fingerprint(connected_sum_ring(A, sphere_ring(9))) == fingerprint(A)
    with pytest.raises(DimensionMismatch):
        connected_sum_ring(S, sphere_product_ring(3, 4))


def test_connected_sum_ring_associative_up_to_fingerprint():
    X, Y, Z = sphere_product_ring(3, 4), sphere_product_ring(2, 5), gyration(sphere_product_ring(3, 3))
    left = connected_sum_ring(connected_sum_ring(X, Y), Z)
    right = connected_sum_ring(X, connected_sum_ring(Y, Z))
    assert fingerprint(left) == fingerprint(right)


# -- connected-sum formula -------------------------------------------------


def test_lambda_triangle():
    assert thm4_lambda(3, 3, 2) == {2: 1}


def test_thm4_triangles_give_square():
    H = hochster_ring(boundary_simplex(2)).algebra
    R = thm4_ring(H, H, 3, 3, 2)
    assert fingerprint(R) == hochster_ring(polygon(4)).fingerprint()


@pytest.mark.parametrize("pair", [("T4", "T4"), ("O6", "T4"), ("O6", "O6"), ("B5", "O6")])
def test_thm4_symmetric_and_poincare(pair):
    K1, K2 = zoo(pair[0]), zoo(pair[1])
    R = thm4_ring(hochster_ring(K1).algebra, hochster_ring(K2).algebra, K1.m, K2.m, 3)
    h = hilbert(R)
    top = max(h)
    assert all(h.get(top - d, 0) == c for d, c in h.items() if d != top)
    assert is_poincare_algebra(R)


def test_thm4_with_tetrahedron_matches_gyration_remark():
    K = zoo("O6")
    H = hochster_ring(K).algebra
    m, n = K.m, 3
    R = thm4_ring(H, hochster_ring(boundary_simplex(3)).algebra, m, n + 1, n)
    terms = [(j + 2, m + n - j - 1, comb(m - n, j)) for j in range(1, m - n + 1)]
    expected = connected_sum_ring(gyration(H), connected_sum_of_sphere_products(terms))
    assert fingerprint(R) == fingerprint(expected)


def test_product_decomposition_after_top():
    K1, K2 = zoo("O6"), zoo("B5")
    R = quotient_by_top(thm4_ring(hochster_ring(K1).algebra, hochster_ring(K2).algebra, 6, 5, 3))
    groups = {}
    for i, key in enumerate(R.keys):
        # product keys nest as (0, (0, first)), (0, (1, second)), (1, spheres)
        part = key[1][0] if key[0] == 0 else 2
        groups.setdefault(part, []).append({i: 1})
    parts = [groups[k] for k in sorted(groups)]
    assert len(parts) == 3
    assert verify_product_decomposition(R, parts)
    # the B5 ring modulo its top splits along the same correspondence
    T4 = hochster_ring(zoo("T4")).algebra
    B = quotient_by_top(hochster_ring(K2).algebra)
    T = quotient_by_top(thm4_ring(T4, T4, 4, 4, 3))
    assert fingerprint(B) == fingerprint(T)


# -- stellar formula ---------------------------------------------------------


def test_thm5_worked_example():
    f = [1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1]
    assert thm5_terms(f, 8, 6, 8) == [(7, 8, 2), (12, 3, 1)]
    HK = hochster_ring(zoo("join(T4,T4)")).algebra
    R = thm5_ring(HK, f, 8, 6, 8)
    listed = connected_sum_of_sphere_products([(8, 7, 1), (7, 8, 3), (12, 3, 1)])
    assert hilbert(R) == {3: 1, 7: 4, 8: 4, 12: 1, 15: 1}
    assert fingerprint(R) == fingerprint(listed)


def test_thm5_terms_small_cases():
    # a + b is always m + n + 1
    assert thm5_terms([1, 0, 0, 1], 5, 3, 4) == [(3, 6, 1), (5, 4, 1), (6, 3, 1)]
    # m = s leaves only the j = 0 terms
    assert thm5_terms([1, 0, 0, 1], 4, 3, 4) == [(5, 3, 1)]
    assert thm5_terms([1], 4, 3, 4) == []


# -- fingerprints -----------------------------------------------------------


def test_fingerprint_s3_x_s3():
    F = fingerprint(sphere_product_ring(3, 3))
    assert F.hilbert == ((3, 2), (6, 1))
    assert F.mult_ranks == ((3, 3, 1),)
    trivial = product_of(sphere_ring(3), sphere_ring(3), sphere_ring(6))
    assert fingerprint(trivial).hilbert == F.hilbert
    assert fingerprint(trivial) != F


def _change_basis(A, rng):
    """Same algebra in a random degree-preserving basis."""
    blocks = A.by_degree()
    P = {}
    for d, idx in blocks.items():
        n = len(idx)
        while True:
            M = Matrix(n, n, lambda i, j: rng.randint(-2, 2))
            if M.det() != 0:
                break
        P[d] = (idx, M, M.inv())
    # new basis vector f_(d,k) = sum_i M[i,k] e_idx[i]
    order = [(d, k) for d, (idx, _, _) in P.items() for k in range(len(idx))]
    pos = {key: n for n, key in enumerate(order)}

    def to_new(vec):
        out = {}
        for e, c in vec.items():
            d = A.degrees[e]
            idx, _, Minv = P[d]
            i = idx.index(e)
            for k in range(len(idx)):
                x = Minv[k, i] * c
                if x:
                    out[pos[(d, k)]] = out.get(pos[(d, k)], 0) + Fraction(int(x.p), int(x.q))
        return {k: v for k, v in out.items() if v}

    def as_old(d, k):
        idx, M, _ = P[d]
        return {idx[i]: int(M[i, k]) for i in range(len(idx)) if M[i, k]}

    table = {}
    for a in order:
        for b in order:
            prod = A.multiply(as_old(*a), as_old(*b))
            if prod:
                table[(pos[a], pos[b])] = to_new(prod)
    return GradedAlgebra([d for d, _ in order], table, A.characteristic)


@given(st.sampled_from(["square", "pentagon", "O6", "B5"]), st.integers(0, 10**6))
def test_fingerprint_invariant_under_basis_change(name, seed):
    A = ring_of(name)
    B = _change_basis(A, random.Random(seed))
    assert B.commutativity_violations() == []
    assert fingerprint(B) == fingerprint(A)


def test_fingerprint_invariant_under_permutation():
    A = ring_of("pentagon")
    perm = list(range(A.dim))
    random.Random(5).shuffle(perm)
    inv = {old: new for new, old in enumerate(perm)}
    table = {(inv[i], inv[j]): {inv[k]: c for k, c in v.items()} for (i, j), v in A.table.items()}
    B = GradedAlgebra([A.degrees[old] for old in perm], table)
    assert fingerprint(B) == fingerprint(A)


# -- matching and decomposition ---------------------------------------------


def test_match_factors():
    fs = [fingerprint(sphere_product_ring(3, 3)), fingerprint(sphere_product_ring(3, 4))]
    assert match_factors(fs, fs) == [0, 1]
    assert match_factors(fs, fs[::-1]) == [1, 0]
    trivial = fingerprint(product_of(sphere_ring(3), sphere_ring(3), sphere_ring(6)))
    with pytest.raises(NoMatch):
        match_factors([fs[0]], [trivial])
    with pytest.raises(NoMatch):
        match_factors(fs, fs[:1])


def test_verify_product_decomposition_cases():
    X, Y = sphere_product_ring(3, 4), sphere_product_ring(2, 5)
    P = direct_product(X, Y)
    parts = [[{i: 1} for i in range(X.dim)], [{X.dim + i: 1} for i in range(Y.dim)]]
    assert verify_product_decomposition(P, parts)
    overlapping = [parts[0], parts[0] + parts[1][:1]]
    assert not verify_product_decomposition(P, overlapping)
    mixed = [[{0: 1}, {2: 1}], [{1: 1}] + parts[1]]
    assert not verify_product_decomposition(P, mixed)
    with pytest.raises(NotHomogeneous):
        verify_product_decomposition(P, [[{0: 1, 1: 1}]])


# -- serialization and validation -------------------------------------------


def test_json_roundtrip():
    A = ring_of("O6")
    B = GradedAlgebra.from_json(A.to_json())
    assert B.degrees == A.degrees and B.table == A.table
    data = A.to_dict()
    assert set(data) >= {"basis", "products"}
    assert set(data["basis"][0]) == {"deg", "label"}


def test_rejects_inhomogeneous_table():
    with pytest.raises(NotHomogeneous):
        GradedAlgebra([1, 1, 3], {(0, 1): {2: 1}})
