# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

from typing import Callable
from typing import Dict
from typing import Optional

from purepolylog import errors
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog import special
from purepolylog.polyring import BivariatePoly
from purepolylog.polyring import DensePoly
from purepolylog.verify import report

_UNKNOWN_RELATION: Final = ("Unknown relation {relation!r}; expected one of "
                            "{known}")
_MISSING: Final = "Relation {relation} requires the parameter {name}"
_OUT_OF_RANGE: Final = ("{name}={value} is outside {low}..{high} for "
                        "relation {relation} at p={p}")


def _require(relation: str, name: str, value: Optional[int], p: int,
             low: Optional[int] = None,
             high: Optional[int] = None) -> int:
    if value is None:
        raise errors.BadArgument(_MISSING.format(relation=relation, name=name))
    if low is not None and not low <= value <= high:
        raise errors.BadArgument(_OUT_OF_RANGE.format(
            name=name, value=value, low=low, high=high, relation=relation,
            p=p))
    return value


def _one_minus(field: prime_field.PrimeField) -> DensePoly:
    return DensePoly(field, (1, field.p - 1))


def _two_term(p: int, d: Optional[int],
              h: Optional[int]) -> Optional[report.Witness]:
    # £_1(X) = £_1(1 - X)
    field = prime_field.get_field(p)
    polylog = special.build_polylog(p, 1)
    return report.difference_witness(polylog,
                                     polylog.compose(_one_minus(field)))


def _four_term(p: int, d: Optional[int],
               h: Optional[int]) -> Optional[report.Witness]:
    # £_1(X) - £_1(Y) + X^p £_1(Y/X) + (1-X)^p £_1((1-Y)/(1-X)) = 0
    field = prime_field.get_field(p)
    polylog = special.build_polylog(p, 1)
    one_minus = _one_minus(field)

    total = BivariatePoly.from_x(polylog) - BivariatePoly.from_y(polylog)
    for k, value in polylog.terms():
        total = total + BivariatePoly.monomial(field, p - k, k, value)
        mixed = (BivariatePoly.from_x(one_minus ** (p - k))
                 * BivariatePoly.from_y(one_minus ** k))
        total = total + mixed.scale(value)

    return report.difference_witness(total, BivariatePoly(field))


def _inversion(p: int, d: Optional[int],
               h: Optional[int]) -> Optional[report.Witness]:
    # £_d(X) = (-1)^d X^p £_d(1/X)
    d = _require("inversion", "d", d, p)
    field = prime_field.get_field(p)
    polylog = special.build_polylog(p, d)
    rhs = polylog.reverse_scale(1).scale(field.power(p - 1, d))
    return report.difference_witness(polylog, rhs)


def _distribution(p: int, d: Optional[int],
                  h: Optional[int]) -> Optional[report.Witness]:
    # £_d(X^h) = h^(d-1) Σ_j (1 - X^(ph)) / (1 - ω^(pj) X^p) · £_d(ω^j X)
    d = _require("distribution", "d", d, p)
    h = _require("distribution", "h", h, p, 1, p - 1)
    field = prime_field.get_field(p)
    omega = field.root_of_unity(h)
    polylog = special.build_polylog(p, d)
    x_power = DensePoly.monomial(field, h)

    numerator = DensePoly.constant(field, 1) - DensePoly.monomial(field,
                                                                  p * h)
    rhs = DensePoly(field)
    for j in range(h):
        root = field.power(omega, j)
        factor = (DensePoly.constant(field, 1)
                  - DensePoly.monomial(field, p, field.power(root, p)))
        rhs = rhs + numerator.exact_div(factor) * polylog.scale_variable(root)
    rhs = rhs.scale(field.power(h, d - 1))

    return report.difference_witness(polylog.compose(x_power), rhs)


def _distribution_mod(p: int, d: Optional[int],
                      h: Optional[int]) -> Optional[report.Witness]:
    # £_d(X^h) ≡ h^d £_d(X) mod X^p - 1
    d = _require("distribution_mod", "d", d, p)
    h = _require("distribution_mod", "h", h, p, 1, p - 1)
    field = prime_field.get_field(p)
    polylog = special.build_polylog(p, d)
    lhs = polylog.compose(DensePoly.monomial(field, h))
    return report.difference_witness(lhs, polylog.scale(field.power(h, d)),
                                     polyring.PowerModulus(field, 1))


def _powers_mod(p: int, d: Optional[int],
                h: Optional[int]) -> Optional[report.Witness]:
    # £_1(X)^d ≡ (-1)^(d-1) d! £_d(1 - X) mod X^p
    d = _require("powers_mod", "d", d, p, 1, p - 2)
    field = prime_field.get_field(p)
    truncation = polyring.PowerModulus(field, 0)
    lhs = special.build_polylog(p, 1).pow(d, truncation)
    rhs = special.build_polylog(p, d).compose(_one_minus(field)).scale(
        field.power(p - 1, d - 1) * field.factorial(d))
    return report.difference_witness(lhs, rhs, truncation)


RELATIONS: Final[Dict[str, Callable[[int, Optional[int], Optional[int]],
                                    Optional[report.Witness]]]] = {
    "two_term": _two_term,
    "four_term": _four_term,
    "inversion": _inversion,
    "distribution": _distribution,
    "distribution_mod": _distribution_mod,
    "powers_mod": _powers_mod,
}


@report.check("classical", tag_param="relation")
def verify_classical(p: int, relation: str, d: Optional[int] = None,
                     h: Optional[int] = None) -> Optional[report.Witness]:
    """Check one of the classical functional equations of the truncated
    polylogarithms £_d over F_p.

    Relations:
        two_term: £_1(X) = £_1(1 - X)
        four_term: the four-term relation in X and Y
        inversion: £_d(X) = (-1)^d X^p £_d(1/X)
        distribution: £_d(X^h) expanded over the h-th roots of unity,
            exactly, for h dividing p - 1
        distribution_mod: £_d(X^h) ≡ h^d £_d(X) mod X^p - 1
        powers_mod: £_1(X)^d ≡ (-1)^(d-1) d! £_d(1 - X) mod X^p, 0 < d < p-1

    Raises:
        BadArgument: Unknown relation, or a missing or out of range
                     parameter.
        UnsupportedOrder: h does not divide p - 1 for ``distribution``.
    """
    prime_field.get_field(p)
    try:
        relation_check = RELATIONS[relation]
    except KeyError:
        raise errors.BadArgument(_UNKNOWN_RELATION.format(
            relation=relation, known=", ".join(RELATIONS)))
    return relation_check(p, d, h)
