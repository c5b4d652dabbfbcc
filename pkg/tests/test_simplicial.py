import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.errors import ComplexTooLarge, NotASubcomplex
from modules.coxeter import spherical_subsets
from modules.simplicial import SimplicialComplex, nerve, star_decomposition
from tests.conftest import flag_complex

# ------------------------- Construction ------------------------- #


def test_from_faces_keeps_maximal_faces_only():
    L = SimplicialComplex.from_faces([(0, 1, 2), (0, 1), (2, 3)])
    assert {frozenset(f) for f in L.maximal_faces} == {frozenset({0, 1, 2}), frozenset({2, 3})}
    assert L.f_vector == (4, 4, 1)


def test_listed_vertices_become_isolated_points():
    L = SimplicialComplex.from_faces([(0, 1)], [0, 1, 2])
    assert L.f_vector == (3, 1)
    assert not L.is_connected()


def test_unlisted_vertex_is_rejected():
    with pytest.raises(NotASubcomplex):
        SimplicialComplex.from_faces([(0, 5)], [0, 1])


def test_face_cap():
    with pytest.raises(ComplexTooLarge):
        SimplicialComplex.from_faces([tuple(range(12))], max_faces=100)


def test_dict_round_trip(octahedron):
    assert SimplicialComplex.from_dict(octahedron.to_dict()) == octahedron


# ------------------------- Operations ------------------------- #

def test_f_vectors(icosahedron, sixteen_cell):
    assert icosahedron.f_vector == (12, 30, 20)
    assert sixteen_cell.f_vector == (8, 24, 32, 16)


def test_link_and_star(icosahedron):
    link = icosahedron.link(0)
    assert set(link.vertices) == {1, 2, 3, 4, 5}
    assert link.f_vector == (5, 5)
    assert icosahedron.star(0).f_vector == (6, 10, 5)


def test_flagness(octahedron, tetrahedron_boundary, suspended_triangle):
    assert octahedron.is_flag()
    assert not tetrahedron_boundary.is_flag()
    assert not suspended_triangle.is_flag()
    assert [set(t) for t in suspended_triangle.empty_simplices(2)] == [{"a", "b", "c"}]


def test_full_subcomplexes(icosahedron):
    assert icosahedron.is_full(icosahedron.link(0))
    assert not icosahedron.is_full(SimplicialComplex.boundary_of_simplex([0, 1, 2]))


def test_cone_and_join():
    edge = SimplicialComplex.simplex(["a", "b"])
    assert edge.cone("x").f_vector == (3, 3, 1)
    circle = SimplicialComplex.boundary_of_simplex([0, 1, 2])
    two_points = SimplicialComplex.from_faces([("n",), ("s",)])
    assert circle.join(two_points).f_vector == (5, 9, 6)


def test_boundary_complex_of_a_disk():
    disk = SimplicialComplex.simplex([0, 1, 2])
    assert disk.boundary_complex().f_vector == (3, 3)


def test_is_boundary_of_simplex(tetrahedron_boundary, octahedron):
    assert tetrahedron_boundary.is_boundary_of_simplex()
    assert not octahedron.is_boundary_of_simplex()


# ------------------------- Nerves ------------------------- #

def test_nerve_of_dinfty_is_two_points(dinf):
    L = nerve(spherical_subsets(dinf))
    assert L.f_vector == (2,)


def test_nerve_of_finite_group_is_a_simplex(a3):
    L = nerve(spherical_subsets(a3))
    assert L.f_vector == (3, 3, 1)


def test_nerve_of_right_angled_group_is_the_flag_complex(icosahedral):
    assert nerve(spherical_subsets(icosahedral)).f_vector == (12, 30, 20)


def test_nerve_respects_the_face_cap(icosahedral):
    poset = spherical_subsets(icosahedral)
    with pytest.raises(ComplexTooLarge):
        nerve(poset, max_faces=50)
    assert nerve(poset, max_faces=140).max_faces == 140


def test_star_decomposition(octahedron):
    d = star_decomposition(octahedron, 0)
    assert d.link_is_full
    assert d.star.union(d.rest).all_faces == octahedron.all_faces
    assert d.star.intersection(d.rest).all_faces == d.link.all_faces


# ------------------------- Flag complexes ------------------------- #

@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=3, max_value=8))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return n, edges


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_clique_complexes_have_no_empty_simplices(graph):
    L = flag_complex(*graph)
    if L.is_flag():
        assert all(not L.empty_simplices(k) for k in range(2, L.dimension + 3))


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_removing_a_triangle_breaks_flagness(graph, data):
    L = flag_complex(*graph)
    triangles = L.faces(2)
    if not triangles or L.dimension > 2:
        return
    gone = data.draw(st.sampled_from(triangles))
    holed = SimplicialComplex.from_faces([f for f in L.faces(2) if f != gone] + L.faces(1), L.vertices)
    assert not holed.is_flag()
    assert [set(t) for t in holed.empty_simplices(2)] == [set(gone)]


@pytest.mark.parametrize("fixture", ["icosahedron", "octahedron", "sixteen_cell"])
def test_flag_fixtures_have_no_empty_simplices(request, fixture):
    L = request.getfixturevalue(fixture)
    assert L.is_flag()
    assert all(not L.empty_simplices(k) for k in range(2, L.dimension + 3))
