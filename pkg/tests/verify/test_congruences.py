import hypothesis
import pytest
import pytest_mock
from hypothesis import strategies

from purepolylog import errors
from purepolylog import funcfield
from purepolylog import polyring
from purepolylog import special
from purepolylog.verify import classical
from purepolylog.verify import congruences
from purepolylog.verify import suite


@pytest.mark.parametrize("p", [3, 5])
def test_congruence_group_passes(p: int):
    result = suite.run_suite([p], suite.CONGRUENCES)

    assert result.passed, [r.to_record() for r in result if not r.passed]


@pytest.mark.parametrize("p", [7, 11])
def test_product_lemma_at_larger_primes(p: int):
    assert congruences.verify_product_lemma(p).passed


@pytest.mark.parametrize("d", range(1, 7))
def test_powers_at_zero(d: int):
    """Tests the α = 0 congruences including d = p - 1 at p = 7."""
    assert congruences.verify_polylog_powers_at_zero(7, d).passed


def test_top_power_uses_the_special_right_side():
    result = congruences.verify_polylog_powers(5, 4)

    assert result.params == {"d": 4}
    assert result.passed


def test_product_lemma_needs_the_right_modulus(
        mocker: pytest_mock.MockFixture):
    """Tests that the lemma fails modulo X^p - 1 in place of X^p - T."""
    def naive_modulus(p: int) -> polyring.PowerModulus:
        return polyring.PowerModulus(
            funcfield.rational_functions(p).polynomials, 1)

    mocker.patch("purepolylog.verify.congruences.t_modulus",
                 side_effect=naive_modulus)

    result = congruences.verify_product_lemma(3)

    assert result.status == "fail"


def test_corrupted_t_polynomial_is_caught(mocker: pytest_mock.MockFixture,
                                          bump):
    genuine = special.build_t_polynomial(5)
    mocker.patch("purepolylog.special.build_t_polynomial",
                 return_value=bump(genuine, 1))

    assert not congruences.verify_generalized_inversion(5, 1).passed
    assert not congruences.verify_product_lemma(5).passed


def test_polylog_sum_notes_the_range(mocker: pytest_mock.MockFixture, bump):
    genuine = special.build_polylog(3, 1)
    mocker.patch("purepolylog.special.build_polylog",
                 return_value=bump(genuine, 1))

    result = congruences.verify_polylog_sum(3, 1)

    assert result.witness["note"] == "r = 1..2"


@pytest.mark.parametrize("check, params, message", [
    (congruences.verify_polylog_powers, {"d": 0},
     "d=0 is outside 1..4 for p=5"),
    (congruences.verify_polylog_powers_at_zero, {"d": 5},
     "d=5 is outside 1..4 for p=5"),
    (congruences.verify_polylog_scaling, {"d": 4, "h": 1},
     "d=4 is outside 1..3 for p=5"),
    (congruences.verify_polylog_scaling, {"d": 1, "h": 5},
     "h=5 is outside 1..4 for p=5"),
    (congruences.verify_auxiliary_identities, {"h": 0},
     "h=0 is outside 1..4 for p=5"),
], ids=["powers", "powers_zero", "scaling_d", "scaling_h", "auxiliary"])
def test_out_of_range_parameters(check, params: dict, message: str):
    with pytest.raises(errors.BadArgument) as exception:
        check(5, **params)

    assert str(exception.value) == message


def _with_shifted_weight(mocker: pytest_mock.MockFixture, h: int) -> None:
    """Patch build_weights so that g_h is replaced by g_h + 1."""
    genuine = special.build_weights

    def build(p: int, method=special.WeightMethod.VALUATION):
        weights = genuine(p, method)
        return weights[:h] + (weights[h] + 1,) + weights[h + 1:]

    mocker.patch("purepolylog.special.build_weights", side_effect=build)


def test_corrupted_t_polynomial_breaks_the_powers(
        mocker: pytest_mock.MockFixture, bump):
    """Tests that £_1^2 folds X^p onto the patched T and stops matching."""
    genuine = special.build_t_polynomial(5)
    mocker.patch("purepolylog.special.build_t_polynomial",
                 return_value=bump(genuine, 1))

    result = congruences.verify_polylog_powers(5, 2)

    assert result.status == "fail"
    assert result.witness["position"]


def test_corrupted_polylog_breaks_the_powers_at_zero(
        mocker: pytest_mock.MockFixture, bump):
    genuine = special.build_polylog
    mocker.patch("purepolylog.special.build_polylog",
                 side_effect=lambda p, d: (bump(genuine(p, d), 2)
                                           if d == 1 else genuine(p, d)))

    result = congruences.verify_polylog_powers_at_zero(5, 2)

    assert result.status == "fail"
    assert result.witness["position"]


def test_wrong_weight_breaks_the_scaling(mocker: pytest_mock.MockFixture):
    """Tests that g_h^k stops matching where X^(hk) folds past X^p."""
    _with_shifted_weight(mocker, 2)

    result = congruences.verify_polylog_scaling(5, 1, 2)

    assert result.status == "fail"
    assert result.witness["note"] == "X^p folded to T(a)"


def test_wrong_weight_breaks_the_auxiliary_identities(
        mocker: pytest_mock.MockFixture):
    _with_shifted_weight(mocker, 2)

    result = congruences.verify_auxiliary_identities(5, 2)

    assert result.status == "fail"
    assert result.witness["note"] == "T(ha) = g_h^p·T^h"


_GENUINE_POLYLOG = special.build_polylog


@hypothesis.settings(suppress_health_check=[
    hypothesis.HealthCheck.function_scoped_fixture])
@hypothesis.given(p=strategies.sampled_from([5, 7]), data=strategies.data())
def test_power_relations_agree_on_a_corrupted_polylog(
        mocker: pytest_mock.MockFixture, p: int, data):
    """Tests that adding X^e to £_1 breaks the power relation both modulo
    X^p - 1 and modulo X^p."""
    exponent = data.draw(strategies.integers(1, p - 2), label="e")

    def build(prime: int, d: int) -> polyring.DensePoly:
        poly = _GENUINE_POLYLOG(prime, d)
        if d % (prime - 1) == 1:
            poly = poly + polyring.DensePoly.monomial(poly.ring, exponent)
        return poly

    mocker.patch("purepolylog.special.build_polylog", side_effect=build)

    assert congruences.verify_polylog_powers_at_zero(p, 2).status == "fail"
    assert classical.verify_classical(p, "powers_mod", d=2).status == "fail"
