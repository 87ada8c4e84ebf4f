import os

import hypothesis
import pytest
import pytest_mock
from hypothesis import strategies

from purepolylog import config
from purepolylog import errors
from purepolylog import funcfield
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog.funcfield import ClearedPoly
from purepolylog.funcfield import RatFunc
from purepolylog.polyring import DensePoly


@strategies.composite
def polys_over_k5(draw):
    """Polynomials in X whose coefficients are small fractions in α."""
    field = funcfield.rational_functions(5)
    small = strategies.lists(strategies.integers(0, 4), max_size=3)
    denominators = small.filter(lambda coeffs: any(coeffs))
    size = draw(strategies.integers(0, 4))
    return DensePoly(field, [RatFunc(field, draw(small), draw(denominators))
                             for _ in range(size)])


def test_from_poly_clears_denominators(k5: funcfield.RationalFunctionField):
    """Tests clearing 1/(1+α) + X/(2+α)."""
    poly = DensePoly(k5, [RatFunc(k5, 1, [1, 1]), RatFunc(k5, 1, [2, 1])])

    cleared = ClearedPoly.from_poly(poly)

    assert cleared.den.coeffs == (2, 3, 1)
    assert cleared.to_poly() == poly
    assert cleared.coefficient(1) == RatFunc(k5, 1, [2, 1])
    assert cleared.degree == 1


def test_zero_denominator(k5: funcfield.RationalFunctionField,
                          f5: prime_field.PrimeField):
    with pytest.raises(errors.DivisionByZero):
        ClearedPoly(k5, DensePoly(k5.polynomials, [1]), DensePoly(f5, []))


def test_numerator_must_live_over_alpha_polynomials(
        k5: funcfield.RationalFunctionField, f5: prime_field.PrimeField):
    with pytest.raises(errors.BadArgument):
        ClearedPoly(k5, DensePoly.variable(f5))


@hypothesis.given(a=polys_over_k5(), b=polys_over_k5())
def test_arithmetic_matches_field_arithmetic(a: DensePoly, b: DensePoly):
    left, right = ClearedPoly.from_poly(a), ClearedPoly.from_poly(b)

    assert (left + right).to_poly() == a + b
    assert (left - right).to_poly() == a - b
    assert (left * right).to_poly() == a * b


@hypothesis.given(outer=polys_over_k5(), inner=polys_over_k5())
def test_compose_matches_field_compose(outer: DensePoly, inner: DensePoly):
    """Tests the homogenized Horner scheme against plain composition."""
    left, right = ClearedPoly.from_poly(outer), ClearedPoly.from_poly(inner)

    assert left.compose(right).to_poly() == outer.compose(inner)


def test_reduce_touches_only_the_numerator(
        k5: funcfield.RationalFunctionField):
    """Tests X^5/(1+α) modulo X^5 - α."""
    alpha = k5.polynomials.gen
    ctx = polyring.PowerModulus(k5.polynomials, alpha)
    poly = DensePoly(k5, [0, 0, 0, 0, 0, RatFunc(k5, 1, [1, 1])])

    reduced = ClearedPoly.from_poly(poly).reduce(ctx)

    assert reduced.to_poly() == DensePoly(k5, [RatFunc(k5, [0, 1], [1, 1])])


def test_theta_and_scaling(k5: funcfield.RationalFunctionField):
    poly = DensePoly(k5, [1, RatFunc(k5, 1, [1, 1]), k5.gen])
    cleared = ClearedPoly.from_poly(poly)

    assert cleared.theta().to_poly() == poly.theta()
    assert cleared.scale_variable(2).to_poly() == poly.scale_variable(2)
    assert cleared.scale(k5.gen).to_poly() == poly.scale(k5.gen)
    assert cleared.scale_parameter(2).to_poly() == DensePoly(
        k5, [1, RatFunc(k5, 1, [1, 2]), RatFunc(k5, [0, 2])])


@pytest.fixture()
def fractions3() -> funcfield.BivariateFractionField:
    yield funcfield.bivariate_fractions(3)


def test_bivariate_equality_by_cross_multiplication(
        fractions3: funcfield.BivariateFractionField):
    alpha, beta = fractions3.alpha, fractions3.beta

    assert (alpha * beta) / (alpha * beta ** 2) == beta.inverse()
    assert (alpha + beta) - beta == alpha
    assert alpha != beta


def test_bivariate_fractions_are_unhashable(
        fractions3: funcfield.BivariateFractionField):
    with pytest.raises(TypeError):
        hash(fractions3.alpha)


def test_bivariate_embeddings(fractions3: funcfield.BivariateFractionField,
                              f3: prime_field.PrimeField):
    """Tests reading 1 + X as 1 + α, 1 + β and 1 + α + β."""
    poly = DensePoly(f3, [1, 1])
    alpha, beta = fractions3.alpha, fractions3.beta

    assert funcfield.BiFrac(fractions3, fractions3.from_alpha(poly)) == (
        alpha + 1)
    assert funcfield.BiFrac(fractions3, fractions3.from_beta(poly)) == (
        beta + 1)
    assert funcfield.BiFrac(fractions3, fractions3.from_sum(poly)) == (
        alpha + beta + 1)


def test_bivariate_scaling(fractions3: funcfield.BivariateFractionField):
    """Tests that (α + β)/α is invariant under simultaneous scaling."""
    alpha, beta = fractions3.alpha, fractions3.beta
    value = (alpha + beta) / alpha

    assert value.scale_variables(2) == value
    assert beta.scale_variables(2) == 2 * beta


def test_degree_guard(mocker: pytest_mock.MockFixture):
    """Tests that fractions growing past the guard abort."""
    mocker.patch.dict(os.environ, {config.DEGREE_GUARD_FACTOR_ENV: "1"})
    fractions = funcfield.BivariateFractionField(prime_field.get_field(3))

    assert fractions.degree_guard == 9
    assert fractions.beta ** 9 != fractions.alpha

    with pytest.raises(errors.DegreeGuardExceeded) as exception:
        fractions.beta ** 10

    assert str(exception.value) == (
        "Bivariate fraction of total degree 10 exceeds the guard of 9 for "
        "p=3. Raise it with POLYLOG_DEGREE_GUARD_FACTOR.")


def test_bivariate_inverse_of_zero(
        fractions3: funcfield.BivariateFractionField):
    with pytest.raises(errors.DivisionByZero):
        fractions3.zero.inverse()


@strategies.composite
def bivariate_polys(draw, nonzero: bool = False):
    """Elements of F_3[α][β], mixed terms included."""
    fractions = funcfield.bivariate_fractions(3)
    small = strategies.lists(strategies.integers(0, 2), max_size=3)

    def part() -> DensePoly:
        return (fractions.from_alpha(DensePoly(fractions.base, draw(small)))
                + fractions.from_beta(DensePoly(fractions.base, draw(small))))

    poly = part() * part() + part()
    if nonzero:
        hypothesis.assume(poly.coeffs)
    return poly


@strategies.composite
def bifracs(draw):
    fractions = funcfield.bivariate_fractions(3)
    return funcfield.BiFrac(fractions, draw(bivariate_polys()),
                            draw(bivariate_polys(nonzero=True)))


@hypothesis.given(value=bifracs(), u=bivariate_polys(nonzero=True),
                  v=bivariate_polys(nonzero=True))
def test_bivariate_equality_ignores_common_factors(value, u, v):
    """Tests reflexivity, symmetry and transitivity across representations
    that differ by a common factor."""
    fractions = value.field
    first = funcfield.BiFrac(fractions, value.num * u, value.den * u)
    second = funcfield.BiFrac(fractions, value.num * v, value.den * v)

    assert value == value
    assert value == first and first == value
    assert first == second and value == second
    assert value + 1 != first


@hypothesis.given(a=bifracs(), b=bifracs(), c=bifracs())
def test_bivariate_equality_is_an_equivalence(a, b, c):
    assert a == a
    assert (a == b) == (b == a)
    if a == b and b == c:
        assert a == c
