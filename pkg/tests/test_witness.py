import pytest

from singcensus.algebra.poly import Poly, parse_poly
from singcensus.errors import ValidationError
from singcensus.experiments.witness import (
    degree_bound_audit,
    jacobian_witness,
    square_ideal_generators,
)
from singcensus.groebner import buchberger, ideal_membership


def _odd_fixture(F3):
    # n=3, b=1, l=4: f = x1 - x2 through P = (1:1:1:0)
    f = parse_poly("x1 - x2", 3, F3)
    return jacobian_witness(3, 1, 4, 1, f, (1, 1, 1, 0), "odd"), f


def _char2_fixture(F2):
    # f cuts the line V(x2, x3) out of the plane x3 = 0; P is its vertex
    f = parse_poly("x2", 3, F2)
    return jacobian_witness(3, 1, 4, 1, f, (1, 0, 0, 0), "two"), f


def test_odd_characteristic_witness(F3):
    res, f = _odd_fixture(F3)
    assert res.F == parse_poly("x0^2*x1^2 + x0^2*x2^2 + x0^2*x3^2 + x0^2*x1*x2", 4, F3)
    assert res.F.is_homogeneous(4)
    assert res.rank >= 3 - 1
    # gradient row on top of the full Hessian
    assert len(res.jacobian) == 3 + 2
    assert all(len(row) == 4 for row in res.jacobian)


def test_odd_witness_field_values(F3):
    res, f = _odd_fixture(F3)
    P = (1, 1, 1, 0)
    grad = [res.F.partial(i).evaluate(P) for i in range(4)]
    assert list(res.jacobian[0]) == grad
    assert grad == [0, 0, 0, 0]  # P really is a singular point
    assert res.F.evaluate(P) == 0


def test_char2_witness(F2):
    res, f = _char2_fixture(F2)
    assert res.F == parse_poly("x0^2*x2*x3", 4, F2)
    assert res.rank >= 2
    assert len(res.jacobian) == 5


def test_witness_lies_in_square_ideal(F3, F2):
    for build, field in ((_odd_fixture, F3), (_char2_fixture, F2)):
        res, f = build(field)
        gens = square_ideal_generators(f, 3)
        gb = buchberger(gens)
        assert ideal_membership(res.F, gb)


def test_square_ideal_generators_are_products(F3):
    f = parse_poly("x1 - x2", 3, F3)
    gens = square_ideal_generators(f, 3)
    # pairwise products of (f, x3): three distinct quadrics
    assert len(gens) == 3
    for g in gens:
        assert g.is_homogeneous(2)


def test_degree_bound_audit(F3, F2):
    for build, field in ((_odd_fixture, F3), (_char2_fixture, F2)):
        res, _ = build(field)
        assert degree_bound_audit(res.F, 3, 4)


def test_odd_case_validations(F3, F2):
    f = parse_poly("x1 - x2", 3, F3)
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, parse_poly("x1", 3, F2), (1, 0, 0, 0), "odd")
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 1, 1, f, (1, 1, 1, 0), "odd")  # l < 2d
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, f, (1, 1, 0, 0), "odd")  # P off V(f)
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, f, (0, 1, 1, 0), "odd")  # x0 = 0 at P
    with pytest.raises(ValidationError):
        # last head partial vanishes at P
        jacobian_witness(3, 1, 4, 1, parse_poly("x1", 3, F3), (1, 0, 1, 0), "odd")
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 2, f, (1, 1, 1, 0), "odd")  # f not degree d


def test_char2_case_validations(F2, F3):
    f = parse_poly("x2", 3, F2)
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, parse_poly("x2", 3, F3), (1, 0, 0, 0), "two")
    with pytest.raises(ValidationError):
        # n-b odd is impossible in characteristic 2
        jacobian_witness(4, 1, 4, 1, parse_poly("x2", 3, F2), (1, 0, 0, 0, 0), "two")
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, f, (1, 1, 0, 0), "two")  # P not the vertex
    with pytest.raises(ValidationError):
        # f must be linear
        jacobian_witness(3, 1, 4, 2, parse_poly("x2^2", 3, F2), (1, 0, 0, 0), "two")


def test_common_validations(F3):
    f = parse_poly("x1 - x2", 3, F3)
    with pytest.raises(ValidationError):
        jacobian_witness(2, 1, 4, 1, f, (1, 1, 1), "odd")  # n < 3
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, f, (1, 1, 1), "odd")  # short point
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, f, (1, 1, 1, 1), "odd")  # tail not zero
    with pytest.raises(ValidationError):
        jacobian_witness(3, 1, 4, 1, Poly.zero(F3, 3), (1, 1, 1, 0), "odd")


def test_bigger_shape_odd_witness(F3):
    # n=4, b=1: two quadratic tail terms, rank certificate n-b = 3
    f = parse_poly("x1 - x2", 3, F3)
    res = jacobian_witness(4, 1, 4, 1, f, (1, 1, 1, 0, 0), "odd")
    assert res.rank >= 3
    assert len(res.jacobian) == 6
    assert res.F.is_homogeneous(4)


def test_degree_bound_audit_validations(F3):
    with pytest.raises(ValidationError):
        degree_bound_audit(Poly.zero(F3, 4), 3, 4)
    with pytest.raises(ValidationError):
        degree_bound_audit(parse_poly("x0 + x1^2", 4, F3), 3, 2)
