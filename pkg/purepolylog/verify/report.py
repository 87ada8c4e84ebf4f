# Python 3.7 and 3.8 support
try:
    from typing import Final      # pragma: no cover
    from typing import TypedDict  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final      # pragma: no cover
    from typing_extensions import TypedDict  # pragma: no cover

import functools
import inspect
import time
from typing import Any
from typing import Callable
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from purepolylog import polyring
from purepolylog import rendering


class Witness(TypedDict):
    """The first place two sides of an identity differ.

    ``position`` is the exponent of X (or the pair of exponents of X and Y)
    of the lowest differing coefficient, or an index into whatever family
    the check iterates over. ``lhs`` and ``rhs`` are rendered as text.
    """
    position: List[int]
    lhs:      str
    rhs:      str
    note:     str


class CheckRecord(TypedDict):
    """JSON form of a :class:`CheckReport`."""
    identity: str
    p:        int
    params:   Dict[str, Any]
    status:   str
    witness:  Optional[Witness]
    error:    Optional[str]
    millis:   int


class SummaryRecord(TypedDict):
    runs:    List[CheckRecord]
    summary: Dict[str, int]


class CheckReport(object):
    """Outcome of one identity at one prime and one parameter choice.

    The status is derived: ``error`` when the check raised, ``fail`` when a
    witness was found and ``pass`` otherwise.

    Attributes:
        identity (str): The identity tag
        p (int): The prime
        params (dict): Parameters the check ran with
        witness (:class:`Witness`): Present exactly when the status is fail
        error (str): Error text when the check raised
        millis (int): Wall-clock duration
    """
    PASS: Final = "pass"
    FAIL: Final = "fail"
    ERROR: Final = "error"

    def __init__(self, identity: str, p: int,
                 params: Optional[Dict[str, Any]] = None,
                 witness: Optional[Witness] = None,
                 error: Optional[str] = None, millis: int = 0):
        self.identity = identity
        self.p = p
        self.params = dict(params or {})
        self.witness = witness
        self.error = error
        self.millis = millis

    @property
    def status(self) -> str:
        if self.error is not None:
            return self.ERROR
        if self.witness is not None:
            return self.FAIL
        return self.PASS

    @property
    def passed(self) -> bool:
        return self.status == self.PASS

    @property
    def sort_key(self) -> Tuple[str, int, Tuple[Tuple[str, str], ...]]:
        return (self.identity, self.p,
                tuple(sorted((name, "{:>12}".format(str(value)))
                             for name, value in self.params.items())))

    def to_record(self) -> CheckRecord:
        return CheckRecord(identity=self.identity, p=self.p,
                           params=dict(sorted(self.params.items())),
                           status=self.status, witness=self.witness,
                           error=self.error, millis=self.millis)

    def __repr__(self) -> str:
        return "CheckReport({identity}, p={p}, {params!r}, {status})".format(
            identity=self.identity, p=self.p, params=self.params,
            status=self.status)


class SuiteResult(object):
    """Reports of a suite run, in a fixed order: by identity, then p, then
    parameters, whatever order the checks ran in."""

    def __init__(self, reports: Iterable[CheckReport] = ()):
        self.reports: Tuple[CheckReport, ...] = tuple(
            sorted(reports, key=lambda report: report.sort_key))

    def __iter__(self) -> Iterator[CheckReport]:
        return iter(self.reports)

    def __len__(self) -> int:
        return len(self.reports)

    @property
    def summary(self) -> Dict[str, int]:
        counts = {CheckReport.PASS: 0, CheckReport.FAIL: 0,
                  CheckReport.ERROR: 0}
        for report in self.reports:
            counts[report.status] += 1
        return counts

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def to_record(self) -> SummaryRecord:
        return SummaryRecord(runs=[report.to_record()
                                   for report in self.reports],
                             summary=self.summary)


CheckFunction = Callable[..., Optional[Witness]]


def check(identity: str, tag_param: Optional[str] = None
          ) -> Callable[[CheckFunction], Callable[..., CheckReport]]:
    """Turn a function that returns a witness (or None) into one that returns
    a timed :class:`CheckReport`.

    The function's bound arguments, except ``p`` and any left at None,
    become the report's params. With ``tag_param`` the identity tag is read
    from that argument instead.
    """
    def decorator(function: CheckFunction) -> Callable[..., CheckReport]:
        signature = inspect.signature(function)

        @functools.wraps(function)
        def wrapper(*args, **kwargs) -> CheckReport:
            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()
            arguments = dict(bound.arguments)
            p = arguments.pop("p")
            tag = arguments.pop(tag_param) if tag_param else identity
            params = {name: value for name, value in arguments.items()
                      if value is not None}

            start = time.perf_counter()
            witness = function(*args, **kwargs)
            millis = int((time.perf_counter() - start) * 1000)
            return CheckReport(tag, p, params, witness=witness, millis=millis)

        return wrapper

    return decorator


def _render(owner: Any, position: Sequence[int]) -> str:
    return rendering.format_element(owner.coefficient_at(tuple(position)),
                                    owner.ring)


def difference_witness(lhs: Any, rhs: Any, ctx: Any = None,
                       note: str = "") -> Optional[Witness]:
    """Compare two polynomials, optionally modulo ``ctx``.

    Works for :class:`~purepolylog.polyring.DensePoly`,
    :class:`~purepolylog.polyring.BivariatePoly` and
    :class:`~purepolylog.funcfield.ClearedPoly`. The difference is reduced
    once; its lowest nonzero coefficient names the witness position, and
    both sides are reported there after their own reduction.
    """
    difference = lhs - rhs
    if ctx is not None:
        difference = difference.reduce(ctx)
    position = difference.lowest_position()
    if position is None:
        return None

    if ctx is not None:
        lhs = lhs.reduce(ctx)
        rhs = rhs.reduce(ctx)
    return Witness(position=list(position), lhs=_render(lhs, position),
                   rhs=_render(rhs, position), note=note)


def value_witness(position: Sequence[int], lhs: Any, rhs: Any,
                  ring: Optional[polyring.Ring] = None,
                  note: str = "") -> Optional[Witness]:
    """Compare two scalars; None when they are equal."""
    if lhs == rhs:
        return None
    if ring is None:
        return Witness(position=list(position), lhs=str(lhs), rhs=str(rhs),
                       note=note)
    return Witness(position=list(position),
                   lhs=rendering.format_element(lhs, ring),
                   rhs=rendering.format_element(rhs, ring), note=note)


def first_witness(witnesses: Iterable[Optional[Witness]]
                  ) -> Optional[Witness]:
    """The first non-empty witness of a lazily evaluated sequence."""
    return next((witness for witness in witnesses if witness is not None),
                None)
