import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singcensus.algebra.field import PrimeField
from singcensus.algebra.poly import (
    GradedSpace,
    Poly,
    format_poly,
    infer_num_vars,
    monomials_of_degree,
    monomials_up_to_degree,
    parse_poly,
)
from singcensus.errors import ParseError, ValidationError

from conftest import random_at_most, random_homogeneous


# ---------------------------------------------------------------- basics


def test_construction_reduces_and_drops_zero_terms(F5):
    f = Poly(F5, 2, {(1, 0): 7, (0, 1): 5, (0, 0): -1})
    assert f.terms == {(1, 0): 2, (0, 0): 4}


def test_zero_and_degree(F3):
    z = Poly.zero(F3, 3)
    assert z.is_zero
    assert z.degree() == -1
    assert Poly.constant(F3, 3, 2).degree() == 0
    assert Poly.variable(F3, 3, 1, power=4).degree() == 4


def test_is_homogeneous(F3):
    x0 = Poly.variable(F3, 2, 0)
    x1 = Poly.variable(F3, 2, 1)
    assert (x0 * x1 + x1**2).is_homogeneous()
    assert (x0 * x1 + x1**2).is_homogeneous(2)
    assert not (x0 * x1 + x1**2).is_homogeneous(3)
    assert not (x0 + x1**2).is_homogeneous()
    assert Poly.zero(F3, 2).is_homogeneous()


def test_ring_operations(F5):
    x0 = Poly.variable(F5, 2, 0)
    x1 = Poly.variable(F5, 2, 1)
    f = x0 + 2 * x1
    g = x0 * x1 - 1
    assert f - f == Poly.zero(F5, 2)
    assert f * g == g * f
    assert f * (g + 1) == f * g + f
    assert (f + g) ** 2 == f * f + 2 * f * g + g * g
    assert f**0 == Poly.constant(F5, 2, 1)
    assert (x0 - x0) * g == Poly.zero(F5, 2)


def test_mixed_rings_rejected(F3, F5):
    with pytest.raises(ValidationError):
        _ = Poly.variable(F3, 2, 0) + Poly.variable(F5, 2, 0)
    with pytest.raises(ValidationError):
        _ = Poly.variable(F3, 2, 0) * Poly.variable(F3, 3, 0)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_distributivity_randomized(p, rng):
    F = PrimeField(p)
    for _ in range(50):
        f = random_at_most(F, 3, 3, rng)
        g = random_at_most(F, 3, 3, rng)
        h = random_at_most(F, 3, 2, rng)
        assert (f + g) * h == f * h + g * h


# ------------------------------------------------------- differentiation


def test_partial_basic(F5):
    x0 = Poly.variable(F5, 2, 0)
    x1 = Poly.variable(F5, 2, 1)
    f = x0**3 * x1 + 2 * x1**2
    assert f.partial(0) == 3 * x0**2 * x1
    assert f.partial(1) == x0**3 + 4 * x1


def test_partial_char_p_kills_pth_powers(F3):
    x0 = Poly.variable(F3, 1, 0)
    assert (x0**3).partial(0).is_zero
    assert (x0**6).partial(0).is_zero
    assert (x0**4).partial(0) == x0**3


@pytest.mark.parametrize("p", [2, 3, 5])
def test_partials_commute(p, rng):
    F = PrimeField(p)
    for _ in range(50):
        f = random_at_most(F, 3, 4, rng)
        for i in range(3):
            for j in range(i):
                assert f.partial(i).partial(j) == f.partial(j).partial(i)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_euler_relation(p):
    # sum_i x_i dF/dx_i = (deg F mod p) F for homogeneous F
    F = PrimeField(p)
    rng = random.Random(600 + p)
    nchecks = 1000
    for _ in range(nchecks):
        nvars = rng.randrange(2, 5)
        degree = rng.randrange(1, 6)
        f = random_homogeneous(F, nvars, degree, rng)
        total = Poly.zero(F, nvars)
        for i in range(nvars):
            total = total + Poly.variable(F, nvars, i) * f.partial(i)
        assert total == f.scale(degree % p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_frobenius_additivity(p, rng):
    F = PrimeField(p)
    for _ in range(100):
        g = random_at_most(F, 3, 3, rng)
        h = random_at_most(F, 3, 3, rng)
        assert (g + h) ** p == g**p + h**p


# ------------------------------------------- homogenization / evaluation


def test_homogenize_pads_with_new_last_variable(F5):
    x0 = Poly.variable(F5, 2, 0)
    x1 = Poly.variable(F5, 2, 1)
    f = x0**2 + x1
    h = f.homogenized(3)
    y0, y1, y2 = (Poly.variable(F5, 3, i) for i in range(3))
    assert h == y0**2 * y2 + y1 * y2**2
    assert h.is_homogeneous(3)


def test_homogenize_at_explicit_index(F5):
    f = Poly.variable(F5, 1, 0) + 1  # x0 + 1
    h = f.homogenized(1, hidden=0)
    # hidden slot inserted in front: old x0 becomes x1
    assert h == Poly.variable(F5, 2, 1) + Poly.variable(F5, 2, 0)


def test_homogenize_degree_too_small_rejected(F5):
    f = Poly.variable(F5, 2, 0) ** 3
    with pytest.raises(ValidationError):
        f.homogenized(2)


def test_homogeneous_input_gains_no_hidden_factor(F5):
    f = Poly.variable(F5, 2, 0) * Poly.variable(F5, 2, 1)
    h = f.homogenized(2)
    assert h == Poly.variable(F5, 3, 0) * Poly.variable(F5, 3, 1)


def test_dehomogenize_examples(F5):
    x0, x1, x2 = (Poly.variable(F5, 3, i) for i in range(3))
    F = x0**2 * x2 + x1 * x2**2
    assert F.dehomogenized(2) == Poly.variable(F5, 2, 0) ** 2 + Poly.variable(F5, 2, 1)
    assert (x2**3).dehomogenized(2) == Poly.constant(F5, 2, 1)


@pytest.mark.parametrize("p", [2, 5])
def test_homogenize_dehomogenize_roundtrip(p, rng):
    F = PrimeField(p)
    for _ in range(200):
        nvars = rng.randrange(1, 4)
        l = rng.randrange(1, 6)
        f = random_at_most(F, nvars, l, rng)
        assert f.homogenized(l).dehomogenized(nvars) == f


@pytest.mark.parametrize("p", [2, 3, 5])
def test_homogenization_commutes_with_partials(p, rng):
    # d/dx_i of the degree-l homogenization = degree-(l-1) homogenization
    # of d/dx_i, for every chart variable i
    F = PrimeField(p)
    for _ in range(100):
        nvars = rng.randrange(1, 4)
        l = rng.randrange(2, 6)
        f = random_at_most(F, nvars, l - 1, rng)
        fh = f.homogenized(l)
        for i in range(nvars):
            assert fh.partial(i) == f.partial(i).homogenized(l - 1)


def test_evaluate(F5):
    x0 = Poly.variable(F5, 2, 0)
    x1 = Poly.variable(F5, 2, 1)
    f = x0**2 * x1 + 3
    assert f.evaluate((2, 4)) == (4 * 4 + 3) % 5
    assert Poly.zero(F5, 2).evaluate((1, 1)) == 0
    with pytest.raises(ValidationError):
        f.evaluate((1,))


# --------------------------------------------------------- text round trip


def test_parse_basics(F5):
    x0 = Poly.variable(F5, 2, 0)
    x1 = Poly.variable(F5, 2, 1)
    assert parse_poly("x0^2*x1 + 3", 2, F5) == x0**2 * x1 + 3
    assert parse_poly("-x0 + 2*x1 - 1", 2, F5) == -x0 + 2 * x1 - 1
    assert parse_poly("7", 2, F5) == Poly.constant(F5, 2, 2)
    assert parse_poly(" x1 ^ 3 ", 2, F5) == x1**3
    assert parse_poly("0", 2, F5).is_zero


def test_parse_rejects_garbage(F5):
    for bad in ("", "x", "x0 +", "2**x0", "x0^", "y1", "x0 x1", "x9", "3..2"):
        with pytest.raises(ParseError):
            parse_poly(bad, 2, F5)


def test_parse_error_carries_offset(F5):
    with pytest.raises(ParseError) as info:
        parse_poly("x0 + @", 2, F5)
    assert info.value.offset == 5


def test_infer_num_vars():
    assert infer_num_vars("x0^2*x3 + x1") == 4
    assert infer_num_vars("x10") == 11
    # pure constants mention no variable at all
    assert infer_num_vars("5") == 0


def test_format_descending_order_and_unit_coefficients(F5):
    f = parse_poly("x1^2 + 2*x0*x1 + 4 + x0^2", 2, F5)
    assert format_poly(f) == "x0^2 + 2*x0*x1 + x1^2 + 4"
    assert format_poly(Poly.zero(F5, 2)) == "0"
    assert format_poly(Poly.constant(F5, 2, 3)) == "3"


@st.composite
def poly_strategy(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    field = PrimeField(p)
    nvars = draw(st.integers(1, 4))
    nterms = draw(st.integers(0, 6))
    terms = {}
    for _ in range(nterms):
        exps = tuple(draw(st.integers(0, 4)) for _ in range(nvars))
        terms[exps] = draw(st.integers(0, p - 1))
    return Poly(field, nvars, terms)


@given(poly_strategy())
@settings(max_examples=200, deadline=None)
def test_parse_format_roundtrip(f):
    assert parse_poly(format_poly(f), f.nvars, f.field) == f


# ----------------------------------------------------------- graded spaces


def test_monomials_of_degree_count_and_order():
    monos = monomials_of_degree(3, 2)
    assert len(monos) == math.comb(2 + 2, 2)
    assert monos[0] == (2, 0, 0)  # grevlex-descending starts at x0^2
    assert len(set(monos)) == len(monos)
    assert all(sum(m) == 2 for m in monos)
    assert len(monomials_up_to_degree(3, 2)) == math.comb(2 + 3, 3)


@pytest.mark.parametrize(
    ("nvars", "degree", "mode"),
    [(3, 2, GradedSpace.HOMOGENEOUS), (2, 3, GradedSpace.AT_MOST)],
)
def test_graded_space_dimension(nvars, degree, mode, F3):
    space = GradedSpace(F3, nvars, degree, mode)
    if mode == GradedSpace.HOMOGENEOUS:
        assert space.dim() == math.comb(degree + nvars - 1, nvars - 1)
    else:
        assert space.dim() == math.comb(degree + nvars, nvars)
    assert space.size() == 3 ** space.dim()


def test_iter_all_is_exhaustive_and_distinct(F2):
    space = GradedSpace(F2, 2, 2, GradedSpace.HOMOGENEOUS)
    seen = {f.canonical_key() for f in space.iter_all()}
    assert len(seen) == 2 ** space.dim()
    assert all(f.degree() <= 2 for f in space.iter_all())


def test_iter_all_order_is_deterministic(F3):
    space = GradedSpace(F3, 2, 1, GradedSpace.AT_MOST)
    first = [format_poly(f) for f in space.iter_all()]
    second = [format_poly(f) for f in space.iter_all()]
    assert first == second
    assert first[0] == "0"


def test_sample_lands_in_space_and_nonzero_variant(F5, rng):
    space = GradedSpace(F5, 3, 2, GradedSpace.HOMOGENEOUS)
    for _ in range(50):
        f = space.sample(rng)
        assert f.is_zero or f.is_homogeneous(2)
    for _ in range(50):
        assert not space.sample_nonzero(rng).is_zero


def test_sample_coefficients_look_uniform(F5):
    # chi-square on the coefficient of one fixed monomial over many draws
    space = GradedSpace(F5, 2, 1, GradedSpace.HOMOGENEOUS)
    rng = random.Random(99)
    counts = [0] * 5
    draws = 5000
    for _ in range(draws):
        f = space.sample(rng)
        counts[f.terms.get((1, 0), 0)] += 1
    expected = draws / 5
    chi2 = sum((c - expected) ** 2 / expected for c in counts)
    # 4 degrees of freedom: 99.9th percentile is 18.47
    assert chi2 < 18.47
