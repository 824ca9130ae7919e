import pytest

from plp1 import complexes as cx
from plp1.fixtures import link_L

from conftest import BIPYRAMID, OCTAHEDRON, RP2_6, oriented


def test_boundary_simplex_counts():
    d3 = cx.boundary_simplex(3)
    assert len(d3.facets) == 4
    assert len(d3.vertices) == 4
    assert len(d3.complex.faces(1)) == 6
    d4 = cx.boundary_simplex(4)
    assert len(d4.facets) == 5 and len(d4.vertices) == 5


def test_build_rejects_duplicates_and_mixed_rows():
    with pytest.raises(cx.DuplicateFacet):
        cx.build_complex([(1, 2, 3), (3, 2, 1)])
    with pytest.raises(cx.NotPure):
        cx.build_complex([(1, 2, 3), (1, 2)])
    with pytest.raises(cx.ComplexError):
        cx.simplex((1, 1, 2))


def test_link_table_is_closed_3_pseudomanifold():
    L = link_L()
    assert L.dim == 3
    assert len(L.vertices) == 8
    assert len(L.facets) == 20
    assert L.complex.is_closed_pseudomanifold()


def test_orientations_of_boundary_simplex():
    K = cx.boundary_simplex(3).complex
    plus = cx.orient(K, 1)
    minus = cx.orient(K, -1)
    assert minus == plus.reverse()
    assert {plus.signs[f] * minus.signs[f] for f in K.facets} == {-1}


def test_boundary_d5_orientable():
    cx.orient(cx.boundary_simplex(5).complex)


def test_projective_plane_is_not_orientable():
    K = cx.build_complex(RP2_6)
    assert K.euler_characteristic() == 1
    assert all(d == 2 for d in K.ridge_degrees().values())
    with pytest.raises(cx.NonOrientable):
        cx.orient(K)


def test_vertex_links():
    d3 = cx.boundary_simplex(3)
    lk = cx.oriented_link(d3, 0)
    assert lk.dim == 1 and len(lk.facets) == 3
    octa = oriented(OCTAHEDRON)
    assert len(cx.oriented_link(octa, 1).facets) == 4


def test_link_of_reversed_ambient_is_mirrored():
    octa = oriented(OCTAHEDRON)
    assert cx.oriented_link(octa.reverse(), 1) == cx.oriented_link(octa, 1).reverse()


def test_star_and_full_subcomplex():
    d3 = cx.boundary_simplex(3)
    st = cx.star(d3.complex, (0,))
    assert len(st.facets) == 3
    assert cx.full_subcomplex(d3.complex, d3.vertices).facets == d3.facets
    octa = oriented(OCTAHEDRON)
    sub = cx.full_subcomplex(octa.complex, (1, 6))  # antipodal pair
    assert sub.facets == frozenset({(1,), (6,)})


def test_link_of_star_equals_link():
    octa = oriented(OCTAHEDRON)
    for s in [(1,), (1, 2)]:
        st = cx.star(octa.complex, s)
        assert cx.link(st, s) == cx.link(octa.complex, s)


def test_join_cone_suspension():
    sq = cx.join(cx.SimplicialComplex([(1,), (2,)]),
                 cx.SimplicialComplex([(3,), (4,)]))
    assert len(sq.facets) == 4 and sq.dim == 1
    c = cx.cone(cx.boundary_simplex(2).complex, 9)
    assert len(c.facets) == 3
    with pytest.raises(cx.VertexCollision):
        cx.join(cx.SimplicialComplex([(1,)]), cx.SimplicialComplex([(1,)]))
    susp = cx.suspension(oriented(OCTAHEDRON))
    assert susp.dim == 3
    assert susp.complex.is_closed_pseudomanifold()


def test_oriented_links_are_closed_pseudomanifolds():
    for L in (cx.boundary_simplex(4), oriented(OCTAHEDRON), link_L()):
        for v in L.vertices:
            lk = cx.oriented_link(L, v)
            assert lk.complex.is_closed_pseudomanifold()
            assert lk.dim == L.dim - 1


def test_two_sphere_euler_characteristic():
    for facets in (OCTAHEDRON, BIPYRAMID):
        assert cx.build_complex(facets).euler_characteristic() == 2


def test_facet_text_round_trip(tmp_path):
    path = tmp_path / "octa.facets"
    lines = ["# test file", "dim=2", "orient=explicit"]
    octa = oriented(OCTAHEDRON)
    for f in sorted(octa.facets):
        row = list(f)
        if octa.signs[f] < 0:
            row[1], row[2] = row[2], row[1]
        lines.append(" ".join(map(str, row)))
    path.write_text("\n".join(lines) + "\n")
    L = cx.load_facet_file(path)
    assert isinstance(L, cx.OrientedComplex)
    assert L == octa
