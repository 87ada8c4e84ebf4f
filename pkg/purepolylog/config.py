# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

import contextlib
import os
from typing import Iterator
from typing import Optional

from purepolylog import errors

DEFAULT_MAX_PRIME: Final[int] = 101
DEFAULT_MAX_VERIFY_PRIME: Final[int] = 13
DEFAULT_KRONECKER_THRESHOLD: Final[int] = 24
DEFAULT_DEGREE_GUARD_FACTOR: Final[int] = 4

MAX_PRIME_ENV: Final = "POLYLOG_MAX_PRIME"
KRONECKER_THRESHOLD_ENV: Final = "POLYLOG_KRONECKER_THRESHOLD"
DEGREE_GUARD_FACTOR_ENV: Final = "POLYLOG_DEGREE_GUARD_FACTOR"

_INVALID_SETTING: Final = ("Invalid value for {name}: {value!r}. Expected a "
                           "positive integer.")

_max_prime_override: Optional[int] = None


def _read_positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default

    try:
        value = int(raw)
    except ValueError:
        raise errors.BadArgument(_INVALID_SETTING.format(name=name, value=raw))

    if value < 1:
        raise errors.BadArgument(_INVALID_SETTING.format(name=name, value=raw))

    return value


def max_prime() -> int:
    """The largest prime any constructor accepts.

    An override set through :func:`set_max_prime_override` wins. Otherwise
    the ``POLYLOG_MAX_PRIME`` environment variable is read, falling back to
    :data:`DEFAULT_MAX_PRIME`.

    Raises:
        BadArgument: The environment variable is not a positive integer.
    """
    if _max_prime_override is not None:
        return _max_prime_override
    return _read_positive_int(MAX_PRIME_ENV, DEFAULT_MAX_PRIME)


def max_prime_override() -> Optional[int]:
    return _max_prime_override


def set_max_prime_override(value: Optional[int]) -> None:
    """Set the prime cap for this process; None goes back to the environment.

    Also serves as the initializer of worker processes.
    """
    global _max_prime_override
    _max_prime_override = value


@contextlib.contextmanager
def max_prime_limit(value: Optional[int]) -> Iterator[None]:
    """Override the prime cap inside a block. None keeps the current cap."""
    previous = _max_prime_override
    if value is not None:
        set_max_prime_override(value)
    try:
        yield
    finally:
        set_max_prime_override(previous)


def kronecker_threshold() -> int:
    """Shortest operand length at which F_p products switch from schoolbook
    multiplication to Kronecker substitution.
    """
    return _read_positive_int(KRONECKER_THRESHOLD_ENV,
                              DEFAULT_KRONECKER_THRESHOLD)


def degree_guard(p: int) -> int:
    """Total degree past which a bivariate fraction aborts, factor·p²."""
    factor = _read_positive_int(DEGREE_GUARD_FACTOR_ENV,
                                DEFAULT_DEGREE_GUARD_FACTOR)
    return factor * p * p
