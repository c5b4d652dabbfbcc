import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.errors import NotASubcomplex
from modules.homology import HomologyGroup, is_point_homology, is_sphere_homology, smith_homology
from modules.simplicial import SimplicialComplex

# ------------------------- Fixtures ------------------------- #


@pytest.fixture
def rp2():
    """Six-vertex real projective plane."""
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
             (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    return SimplicialComplex.from_faces(faces, list(range(6)))


# ------------------------- Tests ------------------------- #

def test_point_and_spheres(icosahedron, sixteen_cell, tetrahedron_boundary):
    assert is_point_homology(smith_homology(SimplicialComplex.simplex([0, 1, 2, 3])))
    assert is_sphere_homology(smith_homology(icosahedron), 2)
    assert is_sphere_homology(smith_homology(tetrahedron_boundary), 2)
    assert is_sphere_homology(smith_homology(sixteen_cell), 3)


def test_two_points_is_zero_sphere():
    L = SimplicialComplex.from_faces([("n",), ("s",)])
    assert smith_homology(L) == [HomologyGroup(2)]
    assert is_sphere_homology(smith_homology(L), 0)


def test_torsion(rp2):
    assert smith_homology(rp2) == [HomologyGroup(1), HomologyGroup(0, (2,)), HomologyGroup(0)]


def test_relative_homology_of_disk_rel_boundary():
    disk = SimplicialComplex.simplex([0, 1, 2])
    rim = disk.boundary_complex()
    assert smith_homology(disk, rim) == [HomologyGroup(0), HomologyGroup(0), HomologyGroup(1)]


def test_relative_needs_a_subcomplex():
    disk = SimplicialComplex.simplex([0, 1, 2])
    with pytest.raises(NotASubcomplex):
        smith_homology(disk, SimplicialComplex.simplex([0, 1, 2, 3]))


def test_cone_is_acyclic(octahedron):
    assert is_point_homology(smith_homology(octahedron.cone("apex")))


def test_group_formatting():
    assert str(HomologyGroup(2, (3,))) == "Z^2 + Z/3"
    assert str(HomologyGroup(0)) == "0"


faces = st.lists(st.sets(st.integers(0, 6), min_size=1, max_size=3), min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(faces)
def test_cones_are_acyclic(raw):
    L = SimplicialComplex.from_faces([sorted(f) for f in raw])
    assert is_point_homology(smith_homology(L.cone(99)))


@settings(max_examples=60, deadline=None)
@given(faces)
def test_euler_characteristic_matches_homology(raw):
    L = SimplicialComplex.from_faces([sorted(f) for f in raw])
    groups = smith_homology(L)
    assert sum((-1) ** k * g.rank for k, g in enumerate(groups)) == L.euler_characteristic()
