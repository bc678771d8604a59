from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from hochster import scx
from hochster.complex_core import (
    SimplicialComplex,
    belt_through_missing_edge,
    cone,
    connected_sum,
    find_belts,
    from_facets,
    full_subcomplex,
    irreducible_decomposition,
    is_clique_complex,
    is_flag,
    join,
    link,
    missing_faces,
    star,
    stellar_subdivision,
    suspension,
    to_labels,
    to_mask,
)
from hochster.exceptions import InvalidConnectedSum, InvalidVertex, NotASimplex, NotASphere, NotFound
from hochster.zoo import FLAG9_FACETS, PolyhedralData, boundary_simplex, polygon, zoo

from conftest import spheres_2d
from oracles import all_faces, induced_cycles_of_length, restrict


def labels(K):
    return sorted(K.facet_labels())


def square():
    return from_facets(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


# -- construction ------------------------------------------------------------


def test_triangle_boundary():
    K = from_facets(3, [(1, 2), (2, 3), (1, 3)])
    assert K.dim == 1
    assert K.is_isomorphic(boundary_simplex(2))


def test_flag_fixture_from_facets():
    K = from_facets(9, FLAG9_FACETS)
    assert K.f_vector() == [9, 20, 11]
    assert K == zoo("flag9")


def test_non_maximal_facet_dropped_and_ghost():
    K = from_facets(4, [(1, 2, 3), (1, 2)])
    assert labels(K) == [(1, 2, 3)]
    assert K.ghost_vertices == (4,)
    assert K.vertex_count == 3


def test_out_of_range_vertex():
    with pytest.raises(InvalidVertex):
        from_facets(3, [(1, 4)])


def test_empty_complex():
    K = SimplicialComplex.empty(3)
    assert K.dim == -1
    assert K.is_empty


# -- full subcomplexes, links, stars ------------------------------------------


def test_full_subcomplex_examples():
    K = square()
    assert labels(full_subcomplex(K, (1, 3))) == [(1,), (3,)]
    F = zoo("flag9")
    assert full_subcomplex(F, range(1, 10)) == F
    T = boundary_simplex(3)
    assert labels(full_subcomplex(T, (1, 2, 3))) == [(1, 2, 3)]
    assert full_subcomplex(T, ()).is_empty


def test_link_examples():
    O = zoo("O6")
    lk = link(O, (1,))
    assert lk.vertices == (2, 3, 5, 6)
    assert lk.is_isomorphic(polygon(4).relabel({1: 2, 2: 3, 3: 5, 4: 6}, 6))
    assert labels(link(boundary_simplex(3), (1, 2))) == [(3,), (4,)]
    assert link(O, ()) == O
    with pytest.raises(NotASimplex):
        link(O, (1, 4))


def test_join_cone_suspension():
    b1 = boundary_simplex(1)
    O = join(join(b1, b1), b1)
    assert len(O.facets) == 8
    assert O.is_isomorphic(zoo("O6"))
    C = cone(boundary_simplex(2))
    assert C.dim == 2 and len(C.facets) == 3
    assert suspension(polygon(4)).is_isomorphic(zoo("O6"))


# -- connected sums and subdivisions --------------------------------------


def test_connected_sum_examples():
    t = boundary_simplex(2)
    assert connected_sum(t, None, t, None).is_isomorphic(square())
    K = connected_sum(t, (1, 2), t, (2, 3), {2: 2, 3: 1})
    assert K.is_isomorphic(square())
    B = connected_sum(boundary_simplex(3), None, boundary_simplex(3), None)
    assert len(B.facets) == 6
    assert B.is_isomorphic(zoo("B5"))
    O = zoo("O6")
    assert connected_sum(O, None, boundary_simplex(3), None).vertex_count == 7


def test_connected_sum_errors():
    with pytest.raises(InvalidConnectedSum):
        connected_sum(boundary_simplex(2), None, boundary_simplex(3), None)
    with pytest.raises(InvalidConnectedSum):
        connected_sum(boundary_simplex(2), (1, 2), boundary_simplex(2), (1,))


def test_stellar_examples():
    K = stellar_subdivision(boundary_simplex(2), (1, 2))
    assert K.m == 4
    assert K.is_isomorphic(square())
    assert 4 in K.vertices
    S = stellar_subdivision(boundary_simplex(3), (1, 2, 3))
    assert S.f_vector() == [5, 9, 6]
    O = zoo("O6")
    assert stellar_subdivision(O, (2,)) == O
    with pytest.raises(NotASimplex):
        stellar_subdivision(O, (1, 4))


# -- missing faces and belts ----------------------------------------------


def _naive_missing(K):
    faces = all_faces(K.facet_labels())
    out = []
    verts = range(1, K.m + 1)
    for k in range(1, K.m + 1):
        for c in combinations(verts, k):
            if c not in faces and all(s in faces for s in combinations(c, k - 1)):
                out.append(c)
    return sorted(out)


def test_missing_face_examples():
    O = zoo("O6")
    assert sorted(mf.labels for mf in missing_faces(O)) == [(1, 4), (2, 5), (3, 6)]
    assert is_flag(O)
    T = boundary_simplex(3)
    assert [mf.labels for mf in missing_faces(T)] == [(1, 2, 3, 4)]
    assert not is_flag(T)
    assert is_flag(zoo("flag9"))


@pytest.mark.parametrize("name", ["O6", "I12", "B5", "B7", "flag9", "torus7", "pentagon"])
def test_missing_faces_match_enumeration(name):
    K = zoo(name)
    assert sorted(mf.labels for mf in missing_faces(K)) == _naive_missing(K)


@pytest.mark.parametrize("name", ["O6", "I12", "B5", "B7", "flag9", "T4", "torus7"])
def test_flag_agrees_with_clique_complex(name):
    K = zoo(name)
    assert is_flag(K) == is_clique_complex(K)


def _check_belt(K, e):
    I = belt_through_missing_edge(K, e)
    assert I & to_mask(e) == to_mask(e)
    verts = to_labels(I)
    assert len(verts) >= 4
    edges = [e2 for e2 in K.edges() if set(e2) <= set(verts)]
    assert induced_cycles_of_length(edges, verts, len(verts)) == [tuple(verts)]
    assert full_subcomplex(K, verts).dim == 1
    return I


def test_belt_octahedron():
    I = _check_belt(zoo("O6"), (1, 4))
    assert to_labels(I) in [(1, 2, 4, 5), (1, 3, 4, 6)]


@pytest.mark.parametrize("name", ["O6", "I12", "B7"])
def test_belt_every_missing_edge(name):
    K = zoo(name)
    for mf in missing_faces(K):
        if len(mf) == 2:
            _check_belt(K, mf)


def test_belt_not_found_for_face():
    with pytest.raises(NotFound):
        belt_through_missing_edge(zoo("O6"), (1, 2))


def test_find_belts():
    O = zoo("O6")
    belts = find_belts(O, 4)
    assert len(belts) == 3
    assert find_belts(boundary_simplex(3), 4) == []
    assert find_belts(zoo("I12"), 4) == []
    oracle = induced_cycles_of_length(O.edges(), O.vertices, 4)
    assert sorted(to_labels(b) for b in belts) == sorted(oracle)


# -- decomposition --------------------------------------------------------


def test_decompose_examples():
    parts = irreducible_decomposition(zoo("B5"))
    assert len(parts) == 2
    assert all(p.is_isomorphic(boundary_simplex(3)) for p in parts)
    assert len(irreducible_decomposition(zoo("I12"))) == 1
    assert irreducible_decomposition(zoo("O6"))[0].is_isomorphic(zoo("O6"))
    T = boundary_simplex(3)
    triple = connected_sum(connected_sum(T, None, T, None), None, T, None)
    assert len(irreducible_decomposition(triple)) == 3
    with pytest.raises(NotASphere):
        irreducible_decomposition(zoo("torus7"))


def test_decomposition_reassembles_f_vector():
    K = connected_sum(connected_sum(zoo("O6"), None, boundary_simplex(3), None), (2, 3, 4), zoo("I12"), None)
    parts = irreducible_decomposition(K)
    assert len(parts) == 3
    for order in ([0, 1, 2], [2, 0, 1]):
        acc = parts[order[0]]
        for i in order[1:]:
            acc = connected_sum(acc, None, parts[i], None)
        assert acc.f_vector() == K.f_vector()


# -- statistics -----------------------------------------------------------


def test_statistics():
    assert boundary_simplex(4).is_q_neighborly(4)
    O = zoo("O6")
    assert O.f_vector() == [6, 12, 8]
    assert O.euler_characteristic() == 2
    P = polygon(5)
    assert P.is_q_neighborly(1) and not P.is_q_neighborly(2)
    assert zoo("I12").edge_count() == 30


# -- zoo and file format --------------------------------------------------


def test_zoo_names():
    assert zoo("T4") == boundary_simplex(3)
    assert zoo("bipyramid(7)") == suspension(polygon(5))
    assert zoo("zoo:∂Δ³") == boundary_simplex(3)
    assert isinstance(zoo("C8"), PolyhedralData)
    assert not zoo("D20").is_simplicial
    assert zoo("C8").vertex_count == 8 and len(zoo("C8").facets) == 6
    assert zoo("D20").vertex_count == 20 and len(zoo("D20").facets) == 12
    with pytest.raises(ValueError):
        zoo("Q17")


def test_scx_roundtrip_and_errors():
    K = zoo("I12")
    assert scx.loads(scx.dumps(K)) == K
    text = scx.dumps(from_facets(4, [(3, 1, 2)]))
    assert text.splitlines() == ["m 4", "1 2 3"]
    from hochster.exceptions import ParseError

    with pytest.raises(ParseError, match="line 3"):
        scx.loads("m 3\n# c\n1 x\n")
    with pytest.raises(ParseError, match="line 1"):
        scx.loads("n 3\n")
    with pytest.raises(ParseError, match="line 2"):
        scx.loads("m 3\n1 4\n")


# -- properties -----------------------------------------------------------

random_complex = st.integers(3, 7).flatmap(
    lambda m: st.lists(
        st.sets(st.integers(1, m), min_size=1, max_size=min(4, m)).map(tuple), min_size=1, max_size=8
    ).map(lambda fs: from_facets(m, fs))
)


@given(random_complex, st.integers(0, 127), st.integers(0, 127))
def test_full_subcomplex_composition(K, a, b):
    I, J = a & ((1 << K.m) - 1), b & ((1 << K.m) - 1)
    assert full_subcomplex(full_subcomplex(K, I), J) == full_subcomplex(K, I & J)
    faces = restrict(all_faces(K.facet_labels()), to_labels(I))
    assert {to_labels(f) for f in full_subcomplex(K, I).faces} == faces


@given(random_complex, st.data())
def test_star_is_join_of_simplex_and_link(K, data):
    sigma = data.draw(st.sampled_from(sorted(K.faces)))
    lk = link(K, sigma)
    expected = {to_labels(f | sigma) for f in lk.facets} if lk.facets else {to_labels(sigma)}
    assert set(star(K, sigma).facet_labels()) == expected


@given(st.sampled_from(list(spheres_2d().values())), st.sampled_from(list(spheres_2d().values())), st.data())
def test_connected_sum_pure_with_vertex_count(K1, K2, data):
    f1 = data.draw(st.sampled_from(K1.facets))
    f2 = data.draw(st.sampled_from(K2.facets))
    images = data.draw(st.permutations(to_labels(f1)))
    K = connected_sum(K1, f1, K2, f2, dict(zip(to_labels(f2), images)))
    assert K.is_pure() and K.dim == 2
    assert K.vertex_count == K1.vertex_count + K2.vertex_count - 3
    assert K.euler_characteristic() == 2


@given(st.sampled_from(list(spheres_2d().values())), st.data())
def test_stellar_preserves_euler_characteristic(K, data):
    sigma = data.draw(st.sampled_from([f for f in K.faces if bin(f).count("1") >= 2]))
    assert stellar_subdivision(K, sigma).euler_characteristic() == K.euler_characteristic()


@given(random_complex)
def test_flag_cross_check_random(K):
    if K.dim <= 2:
        assert is_flag(K) == is_clique_complex(K)
