import pytest

from models.errors import RuinPreconditionFailed
from modules.coxeter import classify_subset, spherical_subsets
from modules.davis import (
    build_chamber,
    build_ruin,
    build_sigma,
    cell_boundary,
    pseudomanifold_check,
    star_reduction_check,
)
from modules.homology import HomologyGroup, is_point_homology, is_sphere_homology, smith_homology
from modules.simplicial import SimplicialComplex
from tests.conftest import matrix

# ------------------------- Fixtures ------------------------- #


@pytest.fixture
def star_group():
    """m(a,b) = 3, m(a,c) = inf, m(b,c) = 2."""
    return matrix([[1, 3, "inf"], [3, 1, 2], ["inf", 2, 1]], ["a", "b", "c"])


# ------------------------- Chamber ------------------------- #

def test_chamber_of_dinfty_is_an_arc(dinf):
    chamber = build_chamber(spherical_subsets(dinf))
    assert chamber.complex.f_vector == (3, 2)
    assert is_point_homology(smith_homology(chamber.complex))


def test_chamber_of_a2(a2):
    chamber = build_chamber(spherical_subsets(a2))
    assert chamber.complex.f_vector == (4, 5, 2)
    assert chamber.face(["s1"]).f_vector == (2, 1)
    assert set(chamber.to_dict()["vertices"]) == {"{}", "{s1}", "{s2}", "{s1,s2}"}


# ------------------------- Sigma ------------------------- #

def test_sigma_of_a2_is_a_hexagon(a2):
    sigma = build_sigma(a2)
    dims = [c.dimension for c in sigma.cells]
    assert (dims.count(0), dims.count(1), dims.count(2)) == (6, 6, 1)
    assert not sigma.partial
    assert is_point_homology(smith_homology(sigma.order_complex()))


@pytest.mark.parametrize("fixture", ["b2", "a3"])
def test_sigma_of_finite_groups_is_contractible(request, fixture):
    cm = request.getfixturevalue(fixture)
    assert is_point_homology(smith_homology(build_sigma(cm).order_complex()))


def test_cell_counts_are_indices(a3):
    sigma = build_sigma(a3)
    for T in spherical_subsets(a3).elements:
        assert len(sigma.cells_of_type(T)) == 24 // classify_subset(a3, T).order


@pytest.mark.parametrize("fixture", ["a2", "b2", "a3"])
def test_cell_boundaries_are_spheres(request, fixture):
    cm = request.getfixturevalue(fixture)
    sigma = build_sigma(cm)
    for T in spherical_subsets(cm).elements:
        if T:
            cell = sigma.cells_of_type(T)[0]
            assert is_sphere_homology(smith_homology(cell_boundary(sigma, cell.id)), len(T) - 1)


def test_truncated_sigma_of_dinfty(dinf):
    sigma = build_sigma(dinf, radius=3)
    assert sigma.partial
    dims = [c.dimension for c in sigma.cells]
    assert (dims.count(0), dims.count(1)) == (7, 6)
    assert is_point_homology(smith_homology(sigma.order_complex()))


# ------------------------- Ruins ------------------------- #

def test_empty_t_ruin_is_all_of_sigma(a2):
    ruin = build_ruin(a2)
    assert len(ruin.omega) == 13
    assert not ruin.boundary
    assert is_point_homology(ruin.homology())


def test_a2_ruin_along_one_generator(a2):
    ruin = build_ruin(a2, T=["s1"])
    assert len(ruin.omega) == 13
    assert len(ruin.boundary) == 9
    assert ruin.partition_holds()
    assert ruin.homology() == [HomologyGroup(0), HomologyGroup(2), HomologyGroup(0)]
    out = ruin.to_dict(homology=True)
    assert out["star"] == ["s1", "s2"]
    assert out["omega_types"] == {"": 6, "s1": 3, "s1,s2": 1, "s2": 3}


def test_ruin_preconditions(dinf):
    with pytest.raises(RuinPreconditionFailed):
        build_ruin(dinf, T=["s1", "s2"], radius=2)
    with pytest.raises(RuinPreconditionFailed):
        build_ruin(dinf, T=["s1"])


def test_truncated_ruin(dinf):
    ruin = build_ruin(dinf, T=["s1"], radius=3)
    assert ruin.sigma.partial
    assert ruin.partition_holds()
    assert ruin.to_dict()["partial"] is True


def test_star_reduction(star_group):
    assert star_reduction_check(star_group, "c", radius=3)


# ------------------------- Pseudomanifolds ------------------------- #

def test_pseudomanifold_check(sixteen_cell):
    assert pseudomanifold_check(sixteen_cell)
    assert not pseudomanifold_check(SimplicialComplex.simplex([0, 1, 2, 3]))
    shifted = sixteen_cell.relabel({v: v + 8 for v in sixteen_cell.vertices})
    assert pseudomanifold_check(sixteen_cell.union(shifted))
