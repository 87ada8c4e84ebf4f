import pytest
import pytest_mock

from purepolylog import errors
from purepolylog import funcfield
from purepolylog import special
from purepolylog.polyring import BivariatePoly
from purepolylog.polyring import DensePoly
from purepolylog.verify import exponential


@pytest.mark.parametrize("p", [3, 5, 7])
def test_laguerre_differential(p: int):
    result = exponential.verify_laguerre_differential(p)

    assert result.identity == "laguerre_differential"
    assert result.passed, result.witness


@pytest.mark.parametrize("p", [3, 5])
def test_exponential_product(p: int):
    assert exponential.verify_exponential_product(p).passed


@pytest.mark.parametrize("p", [3, 5])
def test_laguerre_product(p: int):
    assert exponential.verify_laguerre_product(p).passed


@pytest.mark.parametrize("p, c", [(3, 0), (3, 1), (3, 2), (5, 0), (5, 3)])
def test_characterization(p: int, c: int):
    """Tests that the rescaled exponential satisfies the rescaled product
    formula, including the degenerate scale 0."""
    result = exponential.verify_characterization(p, c)

    assert result.params == {"c": c}
    assert result.passed, result.witness


@pytest.mark.parametrize("c", [-1, 5])
def test_characterization_scale_out_of_range(c: int):
    with pytest.raises(errors.BadArgument) as exception:
        exponential.verify_characterization(5, c)

    assert str(exception.value) == "c={} is outside 0..4 for p=5".format(c)


def test_artin_schreier_modulus(k3: funcfield.RationalFunctionField):
    """Tests X^3 - (α^3 - α)."""
    modulus = exponential.artin_schreier_modulus(3)

    assert modulus.degree == 3
    assert modulus.constant == DensePoly(k3.base, [0, 2, 0, 1])


def test_corrupted_laguerre_is_caught(mocker: pytest_mock.MockFixture,
                                      bump):
    genuine = special.build_laguerre(5)
    mocker.patch("purepolylog.special.build_laguerre",
                 return_value=special.SpecialObject(
                     genuine.kind, 5, {}, bump(genuine.body, 1)))

    assert not exponential.verify_laguerre_differential(5).passed
    assert not exponential.verify_laguerre_product(5).passed


def test_corrupted_exponential_is_caught(mocker: pytest_mock.MockFixture,
                                         bump):
    genuine = special.build_exponential(3)
    mocker.patch("purepolylog.special.build_exponential",
                 return_value=special.SpecialObject(
                     genuine.kind, 3, {}, bump(genuine.body, 2)))

    result = exponential.verify_exponential_product(3)

    assert result.status == "fail"
    assert result.witness["position"]


@pytest.mark.parametrize("c", [1, 2])
def test_corrupted_exponential_breaks_the_characterization(
        mocker: pytest_mock.MockFixture, bump, c: int):
    genuine = special.build_exponential(3)
    mocker.patch("purepolylog.special.build_exponential",
                 return_value=special.SpecialObject(
                     genuine.kind, 3, {}, bump(genuine.body, 2)))

    result = exponential.verify_characterization(3, c)

    assert result.status == "fail"
    assert result.witness["position"]


@pytest.mark.parametrize("p", [3, 5])
def test_correction_without_its_first_term_is_caught(
        mocker: pytest_mock.MockFixture, p: int):
    """Tests that zeroing the coefficient of X·Y^(p-1) in the correction
    factor breaks the product formula."""
    genuine = special.build_exponential_correction(p)
    rows = [list(row) for row in genuine.rows]
    rows[1][p - 1] = genuine.ring.zero
    mocker.patch("purepolylog.special.build_exponential_correction",
                 return_value=BivariatePoly(genuine.ring, rows))

    result = exponential.verify_exponential_product(p)

    assert result.status == "fail"
    assert result.witness["position"]
