"""Parameter grids for every identity and a runner that executes them."""
# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

import concurrent.futures
import functools
import logging
from typing import Any
from typing import Callable
from typing import Dict
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Tuple
from typing import Union

from purepolylog import config
from purepolylog import errors
from purepolylog import prime_field
from purepolylog.verify import classical
from purepolylog.verify import coefficients
from purepolylog.verify import congruences
from purepolylog.verify import exponential
from purepolylog.verify import report

logger = logging.getLogger(__name__)

Params = Dict[str, int]
Grid = Callable[[int], List[Params]]
Task = Tuple[str, int, Params]


class SuiteEntry(NamedTuple):
    """How to run one identity tag over its full parameter grid."""
    function: Callable[..., report.CheckReport]
    grid: Grid
    group: str


def _single(p: int) -> List[Params]:
    return [{}]


def _weights(p: int) -> List[Params]:
    # One representative of every d modulo p - 1
    return [{"d": d} for d in range(p - 1)]


def _positive_weights(p: int) -> List[Params]:
    return [{"d": d} for d in range(1, p - 1)]


def _powers(p: int) -> List[Params]:
    return [{"d": d} for d in range(1, p)]


def _units(p: int) -> List[Params]:
    return [{"h": h} for h in range(1, p)]


def _scalars(p: int) -> List[Params]:
    return [{"c": c} for c in range(p)]


def _weights_and_units(p: int) -> List[Params]:
    return [{"d": d, "h": h} for d in range(p - 1) for h in range(1, p)]


def _weights_and_divisors(p: int) -> List[Params]:
    return [{"d": d, "h": h} for d in range(p - 1) for h in range(1, p)
            if (p - 1) % h == 0]


def _scaling(p: int) -> List[Params]:
    return [{"d": d, "h": h} for d in range(1, p - 1) for h in range(1, p)]


def _relation(name: str) -> Callable[..., report.CheckReport]:
    return functools.partial(classical.verify_classical, relation=name)


EXPONENTIAL: Final = "exponential"
CLASSICAL: Final = "classical"
COEFFICIENTS: Final = "coefficients"
CONGRUENCES: Final = "congruences"
ALL: Final = "all"

SUPPORTED_CHECKS: Final[Dict[str, SuiteEntry]] = {
    "laguerre_differential": SuiteEntry(
        exponential.verify_laguerre_differential, _single, EXPONENTIAL),
    "exponential_product": SuiteEntry(
        exponential.verify_exponential_product, _single, EXPONENTIAL),
    "laguerre_product": SuiteEntry(
        exponential.verify_laguerre_product, _single, EXPONENTIAL),
    "characterization": SuiteEntry(
        exponential.verify_characterization, _scalars, EXPONENTIAL),

    "two_term": SuiteEntry(_relation("two_term"), _single, CLASSICAL),
    "four_term": SuiteEntry(_relation("four_term"), _single, CLASSICAL),
    "inversion": SuiteEntry(_relation("inversion"), _weights, CLASSICAL),
    "distribution": SuiteEntry(_relation("distribution"),
                               _weights_and_divisors, CLASSICAL),
    "distribution_mod": SuiteEntry(_relation("distribution_mod"),
                                   _weights_and_units, CLASSICAL),
    "powers_mod": SuiteEntry(_relation("powers_mod"), _positive_weights,
                             CLASSICAL),

    "compositional_inverse": SuiteEntry(
        coefficients.verify_compositional_inverse, _single, COEFFICIENTS),
    "periodicity": SuiteEntry(
        coefficients.verify_periodicity, _weights, COEFFICIENTS),
    "theta_chain": SuiteEntry(
        coefficients.verify_theta_chain, _weights, COEFFICIENTS),
    "jacobi_values": SuiteEntry(
        coefficients.verify_jacobi_values, _single, COEFFICIENTS),
    "weight_methods": SuiteEntry(
        coefficients.verify_weight_methods, _single, COEFFICIENTS),
    "weight_symmetry": SuiteEntry(
        coefficients.verify_weight_symmetry, _single, COEFFICIENTS),
    "highest_weight": SuiteEntry(
        coefficients.verify_highest_weight, _single, COEFFICIENTS),

    "generalized_inversion": SuiteEntry(
        congruences.verify_generalized_inversion, _weights, CONGRUENCES),
    "product_lemma": SuiteEntry(
        congruences.verify_product_lemma, _single, CONGRUENCES),
    "polylog_powers": SuiteEntry(
        congruences.verify_polylog_powers, _powers, CONGRUENCES),
    "polylog_powers_zero": SuiteEntry(
        congruences.verify_polylog_powers_at_zero, _powers, CONGRUENCES),
    "polylog_scaling": SuiteEntry(
        congruences.verify_polylog_scaling, _scaling, CONGRUENCES),
    "polylog_sum": SuiteEntry(
        congruences.verify_polylog_sum, _weights, CONGRUENCES),
    "auxiliary": SuiteEntry(
        congruences.verify_auxiliary_identities, _units, CONGRUENCES),
}

GROUPS: Final = (ALL, EXPONENTIAL, CLASSICAL, COEFFICIENTS, CONGRUENCES)

_UNKNOWN_SELECTOR: Final = ("Unknown identity or group {name!r}; expected a "
                            "group ({groups}) or a tag ({tags})")
_BAD_JOBS: Final = "jobs={jobs} must be a positive integer"


def resolve_selection(selection: Union[str, Iterable[str]]
                      ) -> Tuple[str, ...]:
    """Expand group names and comma-separated tags into identity tags, in
    registry order and without duplicates.

    Raises:
        BadArgument: A name is neither a group nor a tag.
    """
    if isinstance(selection, str):
        selection = selection.split(",")

    chosen = set()
    for name in (item.strip() for item in selection):
        if not name:
            continue
        if name == ALL:
            chosen.update(SUPPORTED_CHECKS)
        elif name in GROUPS:
            chosen.update(tag for tag, entry in SUPPORTED_CHECKS.items()
                          if entry.group == name)
        elif name in SUPPORTED_CHECKS:
            chosen.add(name)
        else:
            raise errors.BadArgument(_UNKNOWN_SELECTOR.format(
                name=name, groups=", ".join(GROUPS),
                tags=", ".join(SUPPORTED_CHECKS)))
    return tuple(tag for tag in SUPPORTED_CHECKS if tag in chosen)


def build_tasks(primes: Iterable[int], selection: Iterable[str]
                ) -> List[Task]:
    """Every (tag, p, params) combination of the selected grids."""
    return [(tag, p, params)
            for p in primes
            for tag in selection
            for params in SUPPORTED_CHECKS[tag].grid(p)]


def run_check(task: Task) -> report.CheckReport:
    """Run one task. An exception raised by the check becomes a report with
    the error status."""
    tag, p, params = task
    logger.debug("Checking %s at p=%d %r", tag, p, params)
    try:
        return SUPPORTED_CHECKS[tag].function(p, **params)
    except Exception as error:
        logger.warning("%s at p=%d %r raised %s: %s", tag, p, params,
                       type(error).__name__, error)
        logger.debug("Traceback for %s", tag, exc_info=True)
        message = "{name}: {error}".format(name=type(error).__name__,
                                           error=error)
        return report.CheckReport(tag, p, params, error=message)


def run_suite(primes: Iterable[int], selection: Union[str, Iterable[str]],
              jobs: int = 1) -> report.SuiteResult:
    """Run the selected identities over their full grids at every prime.

    Args:
        primes (iterable): Odd primes
        selection: Tags and group names, or a comma-separated string of them
        jobs (int): Worker processes; 1 runs everything in this process

    Returns:
        result (:class:`~purepolylog.verify.report.SuiteResult`): Reports
               in a fixed order, whatever the worker count

    Raises:
        BadArgument: A prime is invalid, a selector is unknown or ``jobs`` is
                     not positive.
    """
    primes = list(primes)
    for p in primes:
        prime_field.get_field(p)
    if jobs < 1:
        raise errors.BadArgument(_BAD_JOBS.format(jobs=jobs))

    tasks = build_tasks(primes, resolve_selection(selection))
    if jobs == 1 or len(tasks) <= 1:
        reports: Iterable[report.CheckReport] = map(run_check, tasks)
        result = report.SuiteResult(reports)
    else:
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=jobs, initializer=config.set_max_prime_override,
                initargs=(config.max_prime_override(),)) as pool:
            result = report.SuiteResult(pool.map(run_check, tasks))

    logger.info("Ran %d checks: %s", len(result), _describe(result.summary))
    return result


def _describe(summary: Dict[str, Any]) -> str:
    return ", ".join("{}={}".format(status, count)
                     for status, count in summary.items())
