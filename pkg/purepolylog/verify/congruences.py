"""Congruences of the generalized polylogarithms modulo X^p - T(α), and the
identities that feed them."""
# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

from typing import Iterator
from typing import Optional

from purepolylog import errors
from purepolylog import funcfield
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog import special
from purepolylog.funcfield import ClearedPoly
from purepolylog.funcfield import RatFunc
from purepolylog.polyring import DensePoly
from purepolylog.verify import exponential
from purepolylog.verify import report

_OUT_OF_RANGE: Final = "{name}={value} is outside {low}..{high} for p={p}"


def _check_range(p: int, name: str, value: int, low: int, high: int) -> None:
    if not low <= value <= high:
        raise errors.BadArgument(_OUT_OF_RANGE.format(
            name=name, value=value, low=low, high=high, p=p))


def t_modulus(p: int) -> polyring.PowerModulus:
    """X^p - T(α) over F_p[α]."""
    field = funcfield.rational_functions(p)
    return polyring.PowerModulus(field.polynomials,
                                 special.build_t_polynomial(p))


def _cleared_polylog(p: int, d: int) -> ClearedPoly:
    return ClearedPoly.from_poly(special.build_generalized_polylog(p, d).body)


@report.check("generalized_inversion")
def verify_generalized_inversion(p: int, d: int) -> Optional[report.Witness]:
    """T(α)·£_d^(α)(X) = (-1)^d X^p £_d^(-α)((1 - α^(p-1))/X), exactly."""
    field = funcfield.rational_functions(p)
    base = field.base
    t_value = field.coerce(special.build_t_polynomial(p))
    lhs = special.build_generalized_polylog(p, d).body.scale(t_value)

    negated = special.build_generalized_polylog(
        p, d, param_sub=DensePoly.variable(base).scale(p - 1)).body
    rhs = negated.reverse_scale(field.one - field.gen ** (p - 1)).scale(
        base.power(p - 1, d))
    return report.difference_witness(lhs, rhs)


@report.check("product_lemma")
def verify_product_lemma(p: int) -> Optional[report.Witness]:
    """£_0^(α)·£_1^(α) + £_1^(α) + α·£_0^(α) ≡ 0 modulo X^p - T(α)."""
    field = funcfield.rational_functions(p)
    zeroth = _cleared_polylog(p, 0)
    first = _cleared_polylog(p, 1)
    lhs = zeroth * first + first + zeroth.scale(field.polynomials.gen)
    return report.difference_witness(lhs, ClearedPoly.zero(field),
                                     t_modulus(p))


@report.check("polylog_powers")
def verify_polylog_powers(p: int, d: int) -> Optional[report.Witness]:
    """Powers of £_1^(α) modulo X^p - T(α).

    For 0 < d < p - 1, £_1^d / d ≡ (-1)^(d-1) Σ_r [d, r+1] α^r £_{d-r} with
    unsigned Stirling numbers of the first kind. For d = p - 1 the right
    side is 1 - α^(p-1) + Σ_r α^r £_{p-1-r}.

    Raises:
        BadArgument: d outside 1..p-1.
    """
    field = funcfield.rational_functions(p)
    base = field.base
    _check_range(p, "d", d, 1, p - 1)

    modulus = t_modulus(p)
    alpha = DensePoly.variable(base)
    first = _cleared_polylog(p, 1)

    if d < p - 1:
        lhs = first.pow(d, modulus).scale(base.inv(d))
        rhs = ClearedPoly.zero(field)
        for r in range(d):
            rhs = rhs + _cleared_polylog(p, d - r).scale(
                (alpha ** r).scale(base.stirling1(d, r + 1)))
        rhs = rhs.scale(base.power(p - 1, d - 1))
    else:
        lhs = first.pow(p - 1, modulus)
        leading = DensePoly.constant(base, 1) - alpha ** (p - 1)
        rhs = ClearedPoly(field, DensePoly(field.polynomials, (leading,)))
        for r in range(p - 1):
            rhs = rhs + _cleared_polylog(p, p - 1 - r).scale(alpha ** r)

    return report.difference_witness(lhs, rhs, modulus)


@report.check("polylog_powers_zero")
def verify_polylog_powers_at_zero(p: int, d: int) -> Optional[report.Witness]:
    """The α = 0 case over F_p: £_1^d ≡ (-1)^(d-1) d! £_d mod X^p - 1 for
    0 < d < p - 1, and £_1^(p-1) ≡ 1 + £_0.

    Raises:
        BadArgument: d outside 1..p-1.
    """
    field = prime_field.get_field(p)
    _check_range(p, "d", d, 1, p - 1)

    modulus = polyring.PowerModulus(field, 1)
    lhs = special.build_polylog(p, 1).pow(d, modulus)
    if d < p - 1:
        rhs = special.build_polylog(p, d).scale(
            field.power(p - 1, d - 1) * field.factorial(d))
    else:
        rhs = special.build_polylog(p, 0) + 1
    return report.difference_witness(lhs, rhs, modulus)


@report.check("polylog_scaling")
def verify_polylog_scaling(p: int, d: int, h: int) -> Optional[report.Witness]:
    """£_d^(hα)(g_h(α)·X^h) ≡ h^d·£_d^(α)(X) modulo X^p - T(α).

    The left side is assembled term by term: the coefficient of X^(hk) is
    g_k(hα)·g_h(α)^k / k^d, and X^(qp+r) folds to T^q·X^r.

    Raises:
        BadArgument: d outside 1..p-2 or h outside 1..p-1.
    """
    field = funcfield.rational_functions(p)
    base = field.base
    _check_range(p, "d", d, 1, p - 2)
    _check_range(p, "h", h, 1, p - 1)

    weight = special.build_weights(p)[h]
    t_value = field.coerce(special.build_t_polynomial(p))
    shifted = special.build_generalized_polylog(
        p, d, param_sub=DensePoly.variable(base).scale(h)).body

    folded = [field.zero] * p
    for k in range(1, p):
        quotient, remainder = divmod(h * k, p)
        term = shifted[k] * weight ** k * t_value ** quotient
        folded[remainder] = folded[remainder] + term

    rhs = special.build_generalized_polylog(p, d).body.scale(
        base.power(h, d))
    return report.difference_witness(DensePoly(field, folded), rhs,
                                     note="X^p folded to T(a)")


def _sum_over_frobenius(p: int, d: int, start: int) -> DensePoly:
    # Σ_{r=start}^{p-1} £_d^(rα^p)(T(rα)·X)
    field = funcfield.rational_functions(p)
    base = field.base
    t_poly = special.build_t_polynomial(p)
    frobenius = DensePoly.monomial(base, p)

    total = [field.zero] * p
    for r in range(start, p):
        shifted = special.build_generalized_polylog(
            p, d, param_sub=frobenius.scale(r)).body
        t_value = field.coerce(t_poly.scale_variable(r))
        power = field.one
        for k in range(1, p):
            power = power * t_value
            total[k] = total[k] + shifted[k] * power
    return DensePoly(field, total)


@report.check("polylog_sum")
def verify_polylog_sum(p: int, d: int) -> Optional[report.Witness]:
    """Σ_{r=1}^{p-1} £_d^(rα^p)(T(rα)·X) = (α^(p-1) - 1)·£_d(X) exactly, and
    with r = 0 included the sum is α^(p-1)·£_d(X)."""
    field = funcfield.rational_functions(p)
    polylog = DensePoly(field, special.build_polylog(p, d).coeffs)
    power = field.gen ** (p - 1)

    witness = report.difference_witness(
        _sum_over_frobenius(p, d, 1), polylog.scale(power - 1),
        note="r = 1..{}".format(p - 1))
    if witness is not None:
        return witness
    return report.difference_witness(
        _sum_over_frobenius(p, d, 0), polylog.scale(power),
        note="r = 0..{}".format(p - 1))


def _auxiliary_witnesses(p: int, h: int
                         ) -> Iterator[Optional[report.Witness]]:
    field = funcfield.rational_functions(p)
    base = field.base
    weight = special.build_weights(p)[h]
    t_poly = special.build_t_polynomial(p)
    t_value = field.coerce(t_poly)

    yield report.value_witness(
        [h], field.coerce(t_poly.scale_variable(h)),
        weight ** p * t_value ** h, field, note="T(ha) = g_h^p·T^h")

    modulus = exponential.artin_schreier_modulus(p)
    laguerre = ClearedPoly.from_poly(special.build_laguerre(p).body)
    yield report.difference_witness(
        laguerre.pow(h, modulus).scale(weight),
        laguerre.scale_parameter(h).scale_variable(h), modulus,
        note="g_h·L^h = L^(ha)(hX)")

    frobenius = DensePoly.monomial(base, p)
    alpha = field.gen
    for d, expected in ((1, alpha - alpha ** p),
                        (0, alpha ** (p - 1) - 1)):
        shifted = special.build_generalized_polylog(
            p, d, param_sub=frobenius).body
        value: RatFunc = field.zero
        power = field.one
        for k in range(1, p):
            power = power * t_value
            value = value + shifted[k] * power
        yield report.value_witness([d], value, expected, field,
                                   note="£_{}^(a^p)(T(a))".format(d))


@report.check("auxiliary")
def verify_auxiliary_identities(p: int, h: int) -> Optional[report.Witness]:
    """T(hα) = g_h^p·T^h, g_h·L^h ≡ L^(hα)(hX) mod X^p - (α^p - α),
    £_1^(α^p)(T(α)) = α - α^p and £_0^(α^p)(T(α)) = α^(p-1) - 1.

    Raises:
        BadArgument: h outside 1..p-1.
    """
    funcfield.rational_functions(p)
    _check_range(p, "h", h, 1, p - 1)
    return report.first_witness(_auxiliary_witnesses(p, h))
