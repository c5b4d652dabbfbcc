from fractions import Fraction

import pytest

from models.errors import BallCapExceeded, NotSpherical, OrderCapExceeded, PoleEvaluation
from models.verdicts import RegionVerdict
from modules.coxeter import generator_classes, spherical_subsets
from modules.growth import (
    ball_partial_sums,
    cayley_table,
    enumerate_finite,
    evaluate,
    full_growth_series,
    growth_polynomial,
    growth_rate,
    region_membership,
    sphere_sizes,
    steinberg_sum,
)
from modules.rational import MultiRat, growth_ring, reverse
from modules.weights import WeightVector

# ------------------------- Fixtures ------------------------- #


@pytest.fixture
def t():
    return growth_ring(("q",)).gens[0]


def uniform(cm, q):
    return WeightVector.uniform(generator_classes(cm), q)


# ------------------------- Enumeration ------------------------- #

def test_enumerate_a2(a2):
    elements = enumerate_finite(a2)
    assert len(elements) == 6
    assert max(e.length for e in elements) == 3
    assert elements[0].length == 0


def test_enumerate_h3(h3):
    elements = enumerate_finite(h3)
    assert len(elements) == 120
    assert max(e.length for e in elements) == 15


def test_enumerate_h4(h4):
    assert len(enumerate_finite(h4)) == 14400


def test_multidegrees_sum_to_length(b3):
    for e in enumerate_finite(b3):
        assert sum(e.multidegree) == e.length == len(e.word)


def test_infinite_group_is_not_enumerated(triangle237):
    with pytest.raises(NotSpherical):
        enumerate_finite(triangle237)


def test_order_cap(h3):
    with pytest.raises(OrderCapExceeded):
        enumerate_finite(h3, max_order=100)


def test_cayley_table_needs_a_radius(dinf):
    with pytest.raises(OrderCapExceeded):
        cayley_table(dinf)
    table = cayley_table(dinf, radius=3)
    assert table.partial
    assert len(table) == 7


# ------------------------- Growth polynomials ------------------------- #

def test_a1_and_a2_polynomials(a2, t):
    assert growth_polynomial(a2, ["s1"]) == 1 + t
    assert growth_polynomial(a2) == 1 + 2 * t + 2 * t ** 2 + t ** 3


def test_b2_two_variables(b2):
    R = growth_ring(("q_s1", "q_s2"))
    a, b = R.gens
    expected = 1 + a + b + 2 * a * b + a ** 2 * b + a * b ** 2 + a ** 2 * b ** 2
    assert growth_polynomial(b2) == expected


@pytest.mark.parametrize("fixture", ["a2", "b2", "a3", "b3", "h3", "h4"])
def test_finite_growth_polynomials_are_palindromic(request, fixture):
    cm = request.getfixturevalue(fixture)
    p = growth_polynomial(cm)
    assert reverse(p) == p


# ------------------------- Series ------------------------- #

def test_dinfty_series(dinf):
    # m = inf is even, so each generator carries its own variable
    a, b = growth_ring(("q_s1", "q_s2")).gens
    assert full_growth_series(dinf) == MultiRat.reduced((1 + a) * (1 + b), 1 - a * b)
    assert steinberg_sum(spherical_subsets(dinf)) == MultiRat.reduced(a * b - 1, (1 + a) * (1 + b))
    assert evaluate(full_growth_series(dinf), uniform(dinf, "1/2")) == 3


def test_dinfty_pole(dinf):
    with pytest.raises(PoleEvaluation):
        evaluate(full_growth_series(dinf), uniform(dinf, 1))


def test_finite_a1_steinberg(t):
    from modules.coxeter import validate_matrix
    a1 = validate_matrix([[1]])
    assert steinberg_sum(spherical_subsets(a1)) == MultiRat.reduced(t, 1 + t)


@pytest.mark.parametrize("q", ["1/2", "1/3", "1/10", 2])
def test_icosahedral_series_on_the_diagonal(icosahedral, q):
    series = full_growth_series(icosahedral)
    assert len(series.variables) == 12
    t = Fraction(q)
    assert evaluate(series, uniform(icosahedral, q)) == (1 + t) ** 3 / ((1 - t) * (t ** 2 - 8 * t + 1))


def test_orbifold_237(triangle237):
    series = full_growth_series(triangle237)
    assert evaluate(series.reciprocal(), uniform(triangle237, 1)) == Fraction(-1, 84)


def test_steinberg_at_inverse_is_reciprocal(b3, octahedral):
    for cm in (b3, octahedral):
        q = WeightVector.from_values(generator_classes(cm), ["2/3"] * len(generator_classes(cm)))
        F = steinberg_sum(spherical_subsets(cm))
        assert evaluate(F, q.inverse()) == 1 / evaluate(full_growth_series(cm), q)


# ------------------------- Balls ------------------------- #

def test_dinfty_ball_sums(dinf):
    sums = ball_partial_sums(dinf, uniform(dinf, "1/2"), 5)
    assert sums == [1, 2, Fraction(5, 2), Fraction(11, 4), Fraction(23, 8), Fraction(47, 16)]


def test_finite_ball_sums_saturate(a2):
    assert ball_partial_sums(a2, uniform(a2, 1), 5) == [1, 3, 5, 6, 6, 6]


@pytest.mark.parametrize("fixture, radius", [("dinf", 12), ("triangle237", 14)])
def test_ball_sums_converge(request, fixture, radius):
    cm = request.getfixturevalue(fixture)
    q = uniform(cm, "1/4")
    limit = evaluate(full_growth_series(cm), q)
    assert abs(ball_partial_sums(cm, q, radius)[-1] - limit) < Fraction(1, 10 ** 6)


def test_icosahedral_partial_sums_increase_towards_the_limit(icosahedral):
    q = uniform(icosahedral, "1/16")
    sums = ball_partial_sums(icosahedral, q, 4)
    limit = evaluate(full_growth_series(icosahedral), q)
    assert all(a < b for a, b in zip(sums, sums[1:]))
    assert sums[-1] == 1 + Fraction(12, 16) + Fraction(102, 16 ** 2) + Fraction(812, 16 ** 3) + Fraction(6402, 16 ** 4)
    # past radius 4 each sphere is less than 8 times the previous one
    assert 0 < limit - sums[-1] < Fraction(6402, 16 ** 4)


def test_icosahedral_sphere_sizes(icosahedral):
    assert sphere_sizes(icosahedral, 4) == [1, 12, 102, 812, 6402]


def test_ball_cap(dinf):
    with pytest.raises(BallCapExceeded):
        ball_partial_sums(dinf, uniform(dinf, "1/2"), 20, max_ball=14)


def test_sphere_sizes(dinf, a2):
    assert sphere_sizes(dinf, 4) == [1, 2, 2, 2, 2]
    assert sphere_sizes(a2, 10) == [1, 2, 2, 1]


# ------------------------- Region ------------------------- #

def test_dinfty_regions(dinf):
    assert region_membership(dinf, uniform(dinf, "1/2")).kind == RegionVerdict.INTERIOR
    assert region_membership(dinf, uniform(dinf, 1)).kind == RegionVerdict.BOUNDARY
    assert region_membership(dinf, uniform(dinf, 2)).kind == RegionVerdict.OUTSIDE
    assert region_membership(dinf, uniform(dinf, 1)).exact == 1


def test_finite_group_is_everywhere_interior(a3):
    verdict = region_membership(a3, uniform(a3, 100))
    assert verdict.kind == RegionVerdict.INTERIOR
    assert verdict.interval is None


def test_icosahedral_pole_is_isolated(icosahedral):
    verdict = region_membership(icosahedral, uniform(icosahedral, 1))
    assert verdict.kind == RegionVerdict.OUTSIDE
    lo, hi = verdict.interval
    assert hi - lo < Fraction(1, 10 ** 9)
    assert (4 - lo) ** 2 > 15 > (4 - hi) ** 2
    assert verdict.minimal_polynomial == (1, -8, 1)


def test_growth_rates(dinf, a2, icosahedral):
    assert growth_rate(dinf) == (1, 1)
    assert growth_rate(a2) == (0, 0)
    lo, hi = growth_rate(icosahedral)
    # 1 / (4 - sqrt 15) = 4 + sqrt 15
    assert (lo - 4) ** 2 < 15 < (hi - 4) ** 2
