import hypothesis
import pytest
from hypothesis import strategies

from purepolylog import errors
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog.polyring import BivariatePoly
from purepolylog.polyring import DensePoly


def test_power_modulus_folds_powers(f3: prime_field.PrimeField):
    """Tests X^3 -> 1 over F_3."""
    ctx = polyring.PowerModulus(f3, 1)

    assert ctx.degree == 3
    assert ctx.modulus.coeffs == (2, 0, 0, 1)
    assert ctx.reduce(DensePoly.monomial(f3, 3)).coeffs == (1,)
    assert ctx.reduce(DensePoly(f3, [0, 1, 0, 0, 1])).coeffs == (0, 2)


def test_power_modulus_with_constant(f5: prime_field.PrimeField):
    """Tests X^5 = X·(X^2)^2 -> 4X modulo X^2 - 2."""
    ctx = polyring.PowerModulus(f5, 2, exponent=2)

    assert ctx.reduce(DensePoly.monomial(f5, 5)).coeffs == (0, 4)


def test_zero_constant_truncates(f5: prime_field.PrimeField):
    ctx = polyring.PowerModulus(f5, 0)
    poly = (DensePoly.variable(f5) + 1) ** 7

    assert ctx.reduce(poly).coeffs == poly.coeffs[:5]


def test_power_modulus_rejects_bad_exponent(f5: prime_field.PrimeField):
    with pytest.raises(errors.BadArgument) as exception:
        polyring.PowerModulus(f5, 1, exponent=0)

    assert str(exception.value) == (
        "The modulus exponent must be positive, got 0")


def test_reduction_checks_the_ring(f3: prime_field.PrimeField,
                                   f5: prime_field.PrimeField):
    ctx = polyring.PowerModulus(f5, 1)

    with pytest.raises(errors.BadArgument):
        ctx.reduce(DensePoly.variable(f3))


@hypothesis.given(
    coeffs=strategies.lists(strategies.integers(0, 6), max_size=30),
    constant=strategies.integers(0, 6),
    exponent=strategies.integers(1, 8))
def test_power_modulus_matches_long_division(coeffs, constant: int,
                                             exponent: int):
    """Tests the block folding against division by X^n - c."""
    field = prime_field.get_field(7)
    fast = polyring.PowerModulus(field, constant, exponent)
    slow = polyring.MonicModulus(fast.modulus)
    poly = DensePoly(field, coeffs)

    assert fast.reduce(poly) == slow.reduce(poly)
    assert fast.reduce(poly).degree < exponent


def test_monic_modulus_requires_monic(f5: prime_field.PrimeField):
    with pytest.raises(errors.BadArgument) as exception:
        polyring.MonicModulus(DensePoly(f5, [1, 2]))

    assert str(exception.value) == (
        "The modulus must be monic of positive degree: "
        "DensePoly(PrimeField(5), (1, 2))")


def test_monic_modulus_over_polynomial_ring(f3: prime_field.PrimeField):
    """Tests reduction by X^3 - T with coefficients in F_3[a]."""
    ring = polyring.PolynomialRing(f3, "a")
    a = ring.gen
    modulus = DensePoly(ring, [-a, 0, 0, 1])
    ctx = polyring.MonicModulus(modulus)

    assert ctx.reduce(DensePoly.monomial(ring, 4)) == DensePoly(ring, [0, a])


def test_substitute_sum(f5: prime_field.PrimeField):
    """Tests X^2 -> X^2 + 2XY + Y^2."""
    poly = BivariatePoly.substitute_sum(DensePoly.monomial(f5, 2))

    assert poly.rows == ((0, 0, 1), (0, 2), (1,))
    assert poly.coefficient(1, 1) == 2
    assert poly.coefficient(4, 4) == 0


def test_bivariate_product(f5: prime_field.PrimeField):
    """Tests (X + Y)^2 computed by multiplication and by substitution."""
    x_plus_y = (BivariatePoly.from_x(DensePoly.variable(f5))
                + BivariatePoly.from_y(DensePoly.variable(f5)))

    assert x_plus_y * x_plus_y == BivariatePoly.substitute_sum(
        DensePoly.monomial(f5, 2))
    assert (x_plus_y * 3).coefficient(0, 1) == 3


def test_bivariate_lowest_position(f5: prime_field.PrimeField):
    """Tests that ties in total degree go to the smaller X exponent."""
    poly = (BivariatePoly.monomial(f5, 1, 0)
            + BivariatePoly.monomial(f5, 0, 1)
            + BivariatePoly.monomial(f5, 0, 3))

    assert poly.lowest_position() == (0, 1)
    assert BivariatePoly(f5).lowest_position() is None


def test_bivariate_is_unhashable(f5: prime_field.PrimeField):
    with pytest.raises(TypeError):
        hash(BivariatePoly.monomial(f5, 1, 1))


def test_bivariate_product_with_unsupported_operands(
        f5: prime_field.PrimeField, f3: prime_field.PrimeField):
    """Tests that scalars still scale and anything else is refused."""
    poly = BivariatePoly.monomial(f5, 1, 1)

    assert poly * 2 == BivariatePoly.monomial(f5, 1, 1, 2)
    assert 3 * poly == poly.scale(3)

    with pytest.raises(TypeError):
        poly * object()
    with pytest.raises(TypeError):
        object() * poly
    with pytest.raises(TypeError):
        poly * DensePoly.variable(f3)


def test_bivariate_modulus(f3: prime_field.PrimeField):
    """Tests X^3 -> 1 and Y^3 -> 2 on X^3·Y^4."""
    ctx = polyring.BivariateModulus(f3, 1, 2)
    reduced = BivariatePoly.monomial(f3, 3, 4).reduce(ctx)

    assert list(reduced.terms()) == [(0, 1, 2)]
