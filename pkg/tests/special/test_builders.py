import pytest
import pytest_mock

from purepolylog import errors
from purepolylog import funcfield
from purepolylog import prime_field
from purepolylog import special
from purepolylog.funcfield import RatFunc
from purepolylog.polyring import DensePoly


def test_laguerre_at_three(k3: funcfield.RationalFunctionField):
    """Tests L = (1 + 2α^2) + (1 + 2α)X + 2X^2 over F_3(α)."""
    obj = special.build_laguerre(3)

    assert obj.kind is special.Kind.LAGUERRE
    assert obj.body == DensePoly(k3, [RatFunc(k3, [1, 0, 2]),
                                      RatFunc(k3, [1, 2]), 2])
    assert all(value.is_polynomial for value in obj.body.coeffs)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_laguerre_coefficients_are_polynomials(p: int):
    obj = special.build_laguerre(p)

    assert obj.body.degree == p - 1
    assert all(value.is_polynomial for value in obj.body.coeffs)


def test_exponential_at_three(k3: funcfield.RationalFunctionField):
    """Tests ℰ = 1 + X/(1+α) + X^2/((1+α)(2+α))."""
    obj = special.build_exponential(3)

    assert obj.body == DensePoly(k3, [1, RatFunc(k3, 1, [1, 1]),
                                      RatFunc(k3, 1, [2, 0, 1])])


def test_truncated_exponential():
    obj = special.build_truncated_exponential(5)

    assert obj.body.coeffs == (1, 1, 3, 1, 4)


def test_t_polynomial_at_three():
    assert special.build_t_polynomial(3).coeffs == (1, 2, 2, 1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_t_polynomial_degree(p: int):
    """Tests deg T = p(p-1)/2 and T(0) = 1."""
    t_poly = special.build_t_polynomial(p)

    assert t_poly.degree == p * (p - 1) // 2
    assert t_poly(0) == 1


def test_t_polynomial_leading_coefficient():
    """Tests the leading coefficient ∏ i^(-i) at p = 5."""
    assert special.build_t_polynomial(5).leading == 2


def test_t_polynomial_cross_check_detects_mismatch(
        mocker: pytest_mock.MockFixture, k3: funcfield.RationalFunctionField):
    """Tests that a corrupted Laguerre polynomial breaks the second
    construction of T."""
    genuine = special._laguerre_coefficients(3)
    mocker.patch("purepolylog.special._laguerre_coefficients",
                 return_value=genuine[:2] + (genuine[2] + 1,))

    with pytest.raises(errors.InternalInconsistency) as exception:
        special.build_t_polynomial.__wrapped__(3)

    assert str(exception.value) == (
        "The product and Laguerre constructions of T disagree for p=3")


def test_jacobi_value_at_three(f3: prime_field.PrimeField):
    assert special.build_jacobi_value(3, 1) == DensePoly(f3, [1, 2])


@pytest.mark.parametrize("s", [0, 4])
def test_jacobi_value_out_of_range(s: int):
    with pytest.raises(errors.BadArgument) as exception:
        special.build_jacobi_value(5, s)

    assert str(exception.value) == "s={} is outside 1..3 for p=5".format(s)


@pytest.mark.parametrize("method", list(special.WeightMethod),
                         ids=lambda method: method.value)
def test_weights_at_three(k3: funcfield.RationalFunctionField,
                          method: special.WeightMethod):
    """Tests g = (1, 1, 1/(1 + 2α)) by both constructions."""
    weights = special.build_weights(3, method)

    assert weights == (k3.one, k3.one, RatFunc(k3, 1, [1, 2]))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_weight_constructions_agree(p: int):
    assert special.build_weights(p, special.WeightMethod.VALUATION) == (
        special.build_weights(p, special.WeightMethod.JACOBI))


def test_polylog_at_three(f3: prime_field.PrimeField):
    assert special.build_polylog(3, 1) == DensePoly(f3, [0, 1, 2])
    assert special.build_polylog(3, 0) == DensePoly(f3, [0, 1, 1])


@pytest.mark.parametrize("d, same_as", [(5, 1), (-1, 3), (4, 0), (-4, 0)])
def test_polylog_weight_is_periodic(d: int, same_as: int):
    assert special.build_polylog(5, d) == special.build_polylog(5, same_as)


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_generalized_polylog_specializes_to_polylog(d: int):
    """Tests that α = 0 recovers the ordinary truncated polylogarithm."""
    body = special.build_generalized_polylog(5, d).body
    polylog = special.build_polylog(5, d)

    assert [value.specialize(0) for value in body.coeffs] == list(
        polylog.coeffs)


def test_generalized_polylog_with_substitution(
        k3: funcfield.RationalFunctionField, f3: prime_field.PrimeField):
    """Tests α -> 2α at p = 3: g_2 becomes 1/(1 + α)."""
    obj = special.build_generalized_polylog(
        3, 1, param_sub=DensePoly(f3, [0, 2]))

    assert obj.params == {"d": 1, "param_sub": [0, 2]}
    assert obj.body == DensePoly(k3, [0, 1, RatFunc(k3, 2, [1, 1])])


def test_exponential_correction_shape():
    correction = special.build_exponential_correction(5)

    positions = [(i, j) for i, j, _ in correction.terms()]
    assert positions == [(0, 0), (1, 4), (2, 3), (3, 2), (4, 1)]


def test_laguerre_coefficients_count():
    assert len(special.build_laguerre_coefficients(5)) == 5


def test_highest_weight_orientation_at_three():
    assert special.highest_weight_orientations(3) == {"plus": True,
                                                      "minus": False}


@pytest.mark.parametrize("p", [5, 7, 11])
def test_highest_weight_orientations_are_reported(p: int):
    """Tests that both orientations are compared and reported as
    booleans."""
    orientations = special.highest_weight_orientations(p)

    assert set(orientations) == {"plus", "minus"}
    assert all(isinstance(value, bool) for value in orientations.values())


def test_build_object_polylog():
    obj = special.build_object(special.Kind.POLYLOG, 5, d=9)

    assert obj.params == {"d": 1}
    assert obj.body == special.build_polylog(5, 1)


def test_build_object_generalized_with_scaling():
    obj = special.build_object(special.Kind.GENERALIZED_POLYLOG, 5, d=1, h=7)

    assert obj.params == {"d": 1, "h": 2}


def test_build_object_weights_by_method():
    obj = special.build_object(special.Kind.WEIGHTS, 5, method="jacobi")

    assert obj.params == {"method": "jacobi"}
    assert obj.body == special.build_weights(5)


@pytest.mark.parametrize("kind, name", [
    (special.Kind.POLYLOG, "d"),
    (special.Kind.GENERALIZED_POLYLOG, "d"),
    (special.Kind.JACOBI_VALUE, "s"),
], ids=lambda value: getattr(value, "value", value))
def test_build_object_requires_parameters(kind: special.Kind, name: str):
    with pytest.raises(errors.BadArgument) as exception:
        special.build_object(kind, 5)

    assert str(exception.value) == (
        "Object {} requires the parameter {}".format(kind.value, name))


def test_build_object_validates_the_prime():
    with pytest.raises(errors.BadArgument) as exception:
        special.build_object(special.Kind.LAGUERRE, 9)

    assert str(exception.value) == "9 is not an odd prime"


@pytest.mark.parametrize("params, message", [
    ({"s": 4}, "s=4 is outside 1..3 for p=5"),
    ({"s": 0}, "s=0 is outside 1..3 for p=5"),
    ({}, "Object b1s requires the parameter s"),
], ids=["above", "below", "missing"])
def test_validate_parameters_rejects_bad_s(params: dict, message: str):
    with pytest.raises(errors.BadArgument) as exception:
        special.validate_parameters(special.Kind.JACOBI_VALUE, 5, params)

    assert str(exception.value) == message


def test_validate_parameters_accepts_any_weight():
    """Tests that d and h are left to the modular reductions."""
    special.validate_parameters(special.Kind.GENERALIZED_POLYLOG, 5,
                                {"d": -7, "h": 10})
    special.validate_parameters(special.Kind.POLYLOG, 5, {"d": 123})
