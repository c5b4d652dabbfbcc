import pytest

from models.errors import BadDiagonal, BadGenerator, LabelOutOfRange, NonSymmetric, TooManyGenerators
from modules.coxeter import (
    INFINITY,
    classify_subset,
    generator_classes,
    gram_matrix,
    lanner_census,
    parse_label,
    product_decomposition,
    spherical_subsets,
    star_generators,
    validate_matrix,
)

# ------------------------- Validation ------------------------- #


def test_labels_accept_infinity_tokens():
    assert parse_label("inf") == INFINITY
    assert parse_label("∞") == INFINITY
    assert parse_label(" 7 ") == 7


def test_default_generator_names():
    cm = validate_matrix([[1, 3], [3, 1]])
    assert cm.generators == ("s1", "s2")
    assert cm.to_dict() == {"generators": ["s1", "s2"], "matrix": [[1, 3], [3, 1]]}


def test_rejects_asymmetric_matrix():
    with pytest.raises(NonSymmetric) as info:
        validate_matrix([[1, 3], [4, 1]])
    assert info.value.code == "coxeter.NonSymmetric"


def test_rejects_bad_diagonal():
    with pytest.raises(BadDiagonal):
        validate_matrix([[2, 3], [3, 1]])


def test_rejects_label_one_off_diagonal():
    with pytest.raises(LabelOutOfRange):
        validate_matrix([[1, 1], [1, 1]])


def test_rejects_duplicate_names():
    with pytest.raises(BadGenerator):
        validate_matrix([[1, 3], [3, 1]], ["s", "s"])


def test_generator_cap():
    raw = [[1 if i == j else 2 for j in range(4)] for i in range(4)]
    with pytest.raises(TooManyGenerators):
        validate_matrix(raw, max_generators=3)


def test_unknown_generator_in_subset(a2):
    with pytest.raises(BadGenerator):
        classify_subset(a2, ["s9"])


# ------------------------- Classification ------------------------- #

@pytest.mark.parametrize("fixture, order", [("a3", 24), ("b3", 48), ("h3", 120), ("h4", 14400)])
def test_finite_orders(request, fixture, order):
    cm = request.getfixturevalue(fixture)
    kind = classify_subset(cm, cm.generators)
    assert kind.is_spherical
    assert kind.order == order


def test_triangle_237_is_lanner(triangle237):
    kind = classify_subset(triangle237, triangle237.generators)
    assert kind.is_lanner
    assert kind.signature == (2, 0, 1)


def test_affine_triangle_is_euclidean():
    cm = validate_matrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    kind = classify_subset(cm, cm.generators)
    assert kind.is_euclidean
    assert kind.signature == (2, 1, 0)


def test_lanner_435(lanner435):
    assert classify_subset(lanner435, lanner435.generators).is_lanner
    assert gram_matrix(lanner435).signature() == (3, 0, 1)


def test_dinfty_pair_is_not_spherical(dinf):
    assert not classify_subset(dinf, dinf.generators).is_spherical
    poset = spherical_subsets(dinf)
    assert poset.elements == [frozenset(), frozenset({"s1"}), frozenset({"s2"})]
    assert poset.maximal() == [frozenset({"s1"}), frozenset({"s2"})]


def test_spherical_subsets_are_downward_closed(h3):
    poset = spherical_subsets(h3)
    for T in poset.elements:
        for s in T:
            assert T - {s} in poset


def test_threads_do_not_change_the_poset(icosahedral):
    assert spherical_subsets(icosahedral, threads=1).elements == spherical_subsets(icosahedral, threads=4).elements


# ------------------------- Classes, products, stars ------------------------- #

def test_generator_classes(a2, b2):
    assert generator_classes(a2).variable_names == ("q",)
    classes = generator_classes(b2)
    assert classes.variable_names == ("q_s1", "q_s2")
    assert classes.multidegree(["s1", "s2", "s1"]) == (2, 1)


def test_product_decomposition(octahedral):
    assert product_decomposition(octahedral) == [("s1", "s2"), ("s3", "s4"), ("s5", "s6")]


def test_star_generators(suspension_group):
    assert star_generators(suspension_group, "n") == frozenset({"n", "a", "b", "c"})
    assert star_generators(suspension_group, "a") == frozenset(suspension_group.generators)


# ------------------------- Census ------------------------- #

def test_lanner_census_rank_four():
    found = lanner_census(max_label=5)
    assert len(found) == 9
    for cm in found:
        assert classify_subset(cm, cm.generators).is_lanner
        assert gram_matrix(cm).signature() == (3, 0, 1)


def test_lanner_census_rank_three():
    # (2,4,5) (2,5,5) (3,3,4) (3,3,5) (3,4,4) (3,4,5) (3,5,5) (4,4,4) (4,4,5) (4,5,5) (5,5,5)
    assert len(lanner_census(max_label=5, rank=3)) == 11


def test_census_warns_when_incomplete(caplog):
    with caplog.at_level("WARNING"):
        lanner_census(max_label=4, rank=3)
    assert "incomplete" in caplog.text
