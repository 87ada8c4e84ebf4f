import os

import pytest
import pytest_mock

from purepolylog import config
from purepolylog import funcfield
from purepolylog import prime_field
from purepolylog.polyring import DensePoly


@pytest.fixture(autouse=True)
def clean_environment(mocker: pytest_mock.MockFixture):
    """Hides any POLYLOG_* settings of the calling shell and clears the
    in-process prime cap around each test."""
    environ = {name: value for name, value in os.environ.items()
               if not name.startswith("POLYLOG_")}
    mocker.patch.dict(os.environ, environ, clear=True)
    config.set_max_prime_override(None)
    yield
    config.set_max_prime_override(None)


@pytest.fixture()
def f3() -> prime_field.PrimeField:
    yield prime_field.get_field(3)


@pytest.fixture()
def f5() -> prime_field.PrimeField:
    yield prime_field.get_field(5)


@pytest.fixture()
def f7() -> prime_field.PrimeField:
    yield prime_field.get_field(7)


@pytest.fixture()
def k3() -> funcfield.RationalFunctionField:
    """F_3(α)."""
    yield funcfield.rational_functions(3)


@pytest.fixture()
def k5() -> funcfield.RationalFunctionField:
    """F_5(α)."""
    yield funcfield.rational_functions(5)


def _bump(poly: DensePoly, exponent: int) -> DensePoly:
    return poly + DensePoly.monomial(poly.ring, exponent)


@pytest.fixture()
def bump():
    """Adds 1 to one coefficient of a polynomial, for negative controls."""
    yield _bump
