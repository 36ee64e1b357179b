import random

import pytest

from singcensus.algebra.poly import GradedSpace, Poly, parse_poly
from singcensus.errors import CapExceeded, ValidationError
from singcensus.experiments import dh_counting


def _fixture_gens(field):
    return [parse_poly("x1", 4, field), parse_poly("x3", 4, field)]


def test_zero_base_counts_coincide(F2):
    # F0 = 0 makes the two membership sets literally equal
    lhs, rhs = dh_counting(Poly.zero(F2, 3), _fixture_gens(F2), 1, 2, 2, hidden=2)
    assert lhs == rhs == 4


def test_line_fixture_right_count(F2):
    # chart polynomials of degree <= 1 vanishing on the line: the x1 and x3
    # coefficients are free, the rest are pinned
    F0 = parse_poly("x0*x1 + x2^2", 3, F2)
    lhs, rhs = dh_counting(F0, _fixture_gens(F2), 1, 2, 2, hidden=2)
    assert rhs == 4
    assert lhs in (0, rhs)


def test_dichotomy_over_random_bases(F2):
    rng = random.Random(1000)
    space = GradedSpace(F2, 3, 2, GradedSpace.AT_MOST)
    zero_count = equal_count = 0
    for _ in range(100):
        F0 = space.sample(rng)
        lhs, rhs = dh_counting(F0, _fixture_gens(F2), 1, 2, 2, hidden=2)
        assert lhs in (0, rhs)
        assert lhs <= rhs
        if lhs == 0:
            zero_count += 1
        else:
            equal_count += 1
    assert zero_count and equal_count  # both branches actually exercised


def test_default_degree_is_derived_from_tau(F2):
    # omitting l uses l = p*tau + 1; both calls must agree
    F0 = parse_poly("x0 + x2", 3, F2)
    a = dh_counting(F0, _fixture_gens(F2), 1, 2, 2, hidden=2)
    b = dh_counting(F0, _fixture_gens(F2), 1, 2, 2, hidden=2, l=3)
    assert a == b


def test_chart_variable_must_miss_the_subscheme(F2):
    # Z = V(x1, x3) lies inside V(x3): chart 3 is unusable
    with pytest.raises(ValidationError, match="chart"):
        dh_counting(Poly.zero(F2, 3), _fixture_gens(F2), 1, 2, 2, hidden=3)


def test_validations(F2, F3, F5):
    gens = _fixture_gens(F2)
    z3 = Poly.zero(F2, 3)
    with pytest.raises(ValidationError):
        dh_counting(z3, gens, 1, 2, 3)  # q != p
    with pytest.raises(ValidationError):
        dh_counting(z3, gens, -1, 2, 2)  # negative budget
    with pytest.raises(ValidationError):
        dh_counting(z3, _fixture_gens(F3), 1, 2, 2)  # wrong field
    with pytest.raises(ValidationError):
        dh_counting(z3, [Poly.zero(F2, 4)], 1, 2, 2)  # zero generator
    with pytest.raises(ValidationError):
        dh_counting(z3, [parse_poly("x0 + x1^2", 4, F2)], 1, 2, 2)
    with pytest.raises(ValidationError):
        dh_counting(parse_poly("x0^4", 3, F2), gens, 1, 2, 2)  # deg F0 > l-1
    with pytest.raises(ValidationError):
        dh_counting(Poly.zero(F2, 4), gens, 1, 2, 2)  # F0 ring mismatch


def test_enumeration_cap(F2):
    with pytest.raises(CapExceeded):
        dh_counting(Poly.zero(F2, 3), _fixture_gens(F2), 1, 2, 2, hidden=2, cap=3)


def test_point_subscheme_hand_count(F3):
    # Z = the point (1:0:1) in P^2; a chart polynomial g = a + b*x0 + c*x1
    # of degree <= 1 homogenizes to b*x0 + c*x1 + a*x2, which vanishes at
    # the point iff a + b = 0: 9 of the 27 chart polynomials
    gens = [parse_poly("x1", 3, F3), parse_poly("x0 - x2", 3, F3)]
    lhs, rhs = dh_counting(Poly.zero(F3, 2), gens, 1, 3, 3, hidden=2)
    assert rhs == 9
    assert lhs == rhs
