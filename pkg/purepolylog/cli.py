"""Command line interface.

Usage::

    purepolylog show --p 3 --object polylog --d 1
    purepolylog table --p 5 --object b1s --format csv
    purepolylog verify --p 3..7 --suite all --report out.json --jobs 4

Exit codes: 0 when everything passed, 1 when a check failed or raised (or a
computation hit an error), 2 on bad usage.
"""
# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

import argparse
import json
import logging
import pathlib
import sys
from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence

import pandas

from purepolylog import config
from purepolylog import errors
from purepolylog import funcfield
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog import rendering
from purepolylog import special
from purepolylog.polyring import DensePoly
from purepolylog.verify import report
from purepolylog.verify import suite

logger = logging.getLogger(__name__)

PROG: Final = "purepolylog"

_NOT_AN_INTEGER: Final = "{text!r} is not an integer"
_NOT_AN_ODD_PRIME: Final = "{p} is not an odd prime"
_MALFORMED_RANGE: Final = ("Malformed prime range {text!r}; expected P or "
                           "LO..HI")
_EMPTY_RANGE: Final = "No odd primes in {text}"
_ABOVE_CAP: Final = "p={p} exceeds the maximum prime {cap}; use --max-prime"
_MISSING_FLAG: Final = "--object {kind} requires --{name}"

SHOW_FORMATS: Final = ("text", "latex", "json")
TABLE_FORMATS: Final = ("text", "csv", "latex")


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(_NOT_AN_INTEGER.format(text=text))


def parse_prime(text: str) -> int:
    """argparse type for a single odd prime."""
    p = _integer(text)
    if not prime_field.is_odd_prime(p):
        raise argparse.ArgumentTypeError(_NOT_AN_ODD_PRIME.format(p=p))
    return p


def parse_prime_range(text: str) -> List[int]:
    """argparse type for ``P`` or ``LO..HI``; a range enumerates the odd
    primes between its bounds, inclusive."""
    low, separator, high = text.partition("..")
    if not separator:
        return [parse_prime(text)]
    try:
        bounds = int(low), int(high)
    except ValueError:
        raise argparse.ArgumentTypeError(_MALFORMED_RANGE.format(text=text))

    primes = [n for n in range(bounds[0], bounds[1] + 1)
              if prime_field.is_odd_prime(n)]
    if not primes:
        raise argparse.ArgumentTypeError(_EMPTY_RANGE.format(text=text))
    return primes


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-prime", type=_integer, default=None,
                        help="Raise the cap on p for this invocation")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress on stderr (-vv for debug)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Finite polylogarithms over F_p and F_p(a): construct "
                    "them, tabulate them and verify their identities.")
    commands = parser.add_subparsers(dest="command", required=True)

    show = commands.add_parser("show", help="Print one object")
    show.add_argument("--p", type=parse_prime, required=True)
    show.add_argument("--object", required=True,
                      choices=[kind.value for kind in special.Kind])
    show.add_argument("--d", type=_integer, help="Weight of a polylogarithm")
    show.add_argument("--s", type=_integer, help="Index of b_1,s")
    show.add_argument("--h", type=_integer,
                      help="Parameter scaling a -> h*a for genpolylog")
    show.add_argument("--method", choices=[m.value
                                           for m in special.WeightMethod])
    show.add_argument("--format", choices=SHOW_FORMATS, default="text")
    _add_common(show)

    table = commands.add_parser("table", help="Print a coefficient table")
    table.add_argument("--p", type=parse_prime, required=True)
    table.add_argument("--object", required=True, choices=list(TABLES))
    table.add_argument("--format", choices=TABLE_FORMATS, default="text")
    _add_common(table)

    verify = commands.add_parser("verify", help="Run verification suites")
    verify.add_argument("--p", type=parse_prime_range, required=True,
                        help="A prime or an inclusive range LO..HI")
    verify.add_argument("--suite", default=suite.ALL,
                        help="Group ({}) or comma-separated identity "
                             "tags".format(", ".join(suite.GROUPS)))
    verify.add_argument("--report", type=pathlib.Path,
                        help="Write the JSON report here instead of stdout")
    verify.add_argument("--jobs", type=_integer, default=1,
                        help="Worker processes")
    _add_common(verify)

    return parser


def _style(fmt: str) -> str:
    return rendering.LATEX if fmt == "latex" else rendering.TEXT


def _show_params(args: argparse.Namespace) -> Dict[str, Any]:
    return {name: getattr(args, name) for name in ("d", "s", "h", "method")
            if getattr(args, name) is not None}


def run_show(args: argparse.Namespace) -> str:
    kind = special.Kind(args.object)
    obj = special.build_object(kind, args.p, **_show_params(args))
    if args.format == "json":
        return json.dumps(rendering.object_record(obj), indent=2)
    return rendering.format_object(obj, _style(args.format))


def _label(text: str, latex: str, style: str) -> str:
    return "${}$".format(latex) if style == rendering.LATEX else text


def _cell(text: str, style: str) -> str:
    return "${}$".format(text) if style == rendering.LATEX else text


def _weights_table(p: int, style: str) -> pandas.DataFrame:
    field = funcfield.rational_functions(p)
    weights = special.build_weights(p)
    return pandas.DataFrame({
        _label("k", "k", style): list(range(1, p)),
        _label("g_k", r"g_{k}(\alpha)", style): [
            _cell(rendering.format_element(weights[k], field, style), style)
            for k in range(1, p)],
    })


def _valuation_table(p: int, style: str) -> pandas.DataFrame:
    field = prime_field.get_field(p)
    frame = {_label("k", "k", style): list(range(1, p))}
    for a in range(1, p):
        name = "a={}".format(a)
        frame[_label(name, name, style)] = [field.carry_valuation(k, a)
                                            for k in range(1, p)]
    return pandas.DataFrame(frame)


def _factorization(value: DensePoly, style: str) -> str:
    # b_1,s splits over F_p: lead·∏(a - r) over its roots r
    field = value.ring
    ring = polyring.PolynomialRing(field, "a")
    factors = []
    for root in range(field.p):
        if value(root) == 0:
            text = rendering.format_element(
                DensePoly(field, (field.neg(root), 1)), ring, style)
            factors.append("({})".format(text) if root else text)
    if value.leading != 1:
        factors.insert(0, str(value.leading))
    return ("*" if style == rendering.TEXT else "").join(factors)


def _jacobi_table(p: int, style: str) -> pandas.DataFrame:
    field = prime_field.get_field(p)
    ring = polyring.PolynomialRing(field, "a")
    values = [special.build_jacobi_value(p, s) for s in range(1, p - 1)]
    return pandas.DataFrame({
        _label("s", "s", style): list(range(1, p - 1)),
        _label("b_1,s", r"b_{1,s}(\alpha)", style): [
            _cell(rendering.format_element(value, ring, style), style)
            for value in values],
        _label("factorization", r"\mathrm{factorization}", style): [
            _cell(_factorization(value, style), style) for value in values],
    })


def _stirling_table(p: int, style: str) -> pandas.DataFrame:
    field = prime_field.get_field(p)
    frame = {_label("n", "n", style): list(range(p))}
    for k in range(p):
        name = "k={}".format(k)
        frame[_label(name, name, style)] = [field.stirling1(n, k)
                                            for n in range(p)]
    return pandas.DataFrame(frame)


TABLES: Final[Dict[str, Callable[[int, str], pandas.DataFrame]]] = {
    "g": _weights_table,
    "e": _valuation_table,
    "b1s": _jacobi_table,
    "stirling": _stirling_table,
}


def format_table(frame: pandas.DataFrame, fmt: str) -> str:
    """Render a table as ``index=v1,v2`` text lines, CSV or a LaTeX tabular."""
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n").rstrip("\n")
    if fmt == "latex":
        return frame.to_latex(index=False, escape=False).rstrip("\n")

    key = frame.columns[0]
    rest = frame.columns[1:]
    return "\n".join(
        "{key}={index}: {values}".format(
            key=key, index=row[key],
            values=",".join(str(row[column]) for column in rest))
        for _, row in frame.iterrows())


def run_table(args: argparse.Namespace) -> str:
    prime_field.get_field(args.p)
    frame = TABLES[args.object](args.p, _style(args.format))
    return format_table(frame, args.format)


def run_verify(args: argparse.Namespace) -> report.SuiteResult:
    logger.info("Verifying %s for p in %s with %d job(s)", args.suite,
                args.p, args.jobs)
    return suite.run_suite(args.p, args.suite, jobs=args.jobs)


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _validate(parser: argparse.ArgumentParser,
              args: argparse.Namespace) -> None:
    # Usage errors exit with status 2 through parser.error
    # --max-prime is already in force through config.max_prime_limit
    if args.max_prime is not None and args.max_prime < 1:
        parser.error(_NOT_AN_INTEGER.format(text=args.max_prime))

    if args.command == "verify":
        cap = args.max_prime or config.DEFAULT_MAX_VERIFY_PRIME
        primes = args.p
        if args.jobs < 1:
            parser.error("--jobs must be a positive integer")
        try:
            suite.resolve_selection(args.suite)
        except errors.BadArgument as error:
            parser.error(str(error))
    else:
        cap = config.max_prime()
        primes = [args.p]

    for p in primes:
        if p > cap:
            parser.error(_ABOVE_CAP.format(p=p, cap=cap))

    if args.command == "show":
        kind = special.Kind(args.object)
        for name in special.REQUIRED_PARAMETERS.get(kind, ()):
            if getattr(args, name) is None:
                parser.error(_MISSING_FLAG.format(kind=kind.value, name=name))
        try:
            special.validate_parameters(kind, args.p, _show_params(args))
        except errors.BadArgument as error:
            parser.error(str(error))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        with config.max_prime_limit(args.max_prime):
            _validate(parser, args)
            if args.command == "show":
                print(run_show(args))
                return 0
            if args.command == "table":
                print(run_table(args))
                return 0

            result = run_verify(args)
    except errors.PolylogError as error:
        print("{prog}: error: {error}".format(prog=PROG, error=error),
              file=sys.stderr)
        return 1

    document = json.dumps(result.to_record(), indent=2)
    if args.report is None:
        print(document)
    else:
        args.report.write_text(document + "\n", encoding="utf-8")
        summary = result.summary
        print(", ".join("{}={}".format(status, count)
                        for status, count in summary.items()))
    return 0 if result.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
