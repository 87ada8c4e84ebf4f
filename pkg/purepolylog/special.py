# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

import enum
import functools
import logging
from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from purepolylog import errors
from purepolylog import funcfield
from purepolylog import prime_field
from purepolylog.funcfield import BiFrac
from purepolylog.funcfield import RatFunc
from purepolylog.polyring import BivariatePoly
from purepolylog.polyring import DensePoly

logger = logging.getLogger(__name__)

_NOT_POLYNOMIAL: Final = ("Laguerre coefficient {k} for p={p} is not a "
                          "polynomial in α: {value!r}")
_T_MISMATCH: Final = ("The product and Laguerre constructions of T disagree "
                      "for p={p}")
_S_OUT_OF_RANGE: Final = "s={s} is outside 1..{high} for p={p}"
_MISSING_PARAMETER: Final = "Object {kind} requires the parameter {name}"


class Kind(enum.Enum):
    """Every object the builders in this module produce."""
    LAGUERRE = "laguerre"
    EXPONENTIAL = "gexp"
    TRUNCATED_EXPONENTIAL = "truncexp"
    T_POLYNOMIAL = "T"
    JACOBI_VALUE = "b1s"
    WEIGHTS = "g"
    POLYLOG = "polylog"
    GENERALIZED_POLYLOG = "genpolylog"
    EXPONENTIAL_CORRECTION = "correction"
    LAGUERRE_COEFFICIENTS = "coefficients"


class WeightMethod(enum.Enum):
    VALUATION = "valuation"
    JACOBI = "jacobi"


class SpecialObject(object):
    """A constructed object together with what it was built from.

    Attributes:
        kind (:class:`Kind`): What the object is
        prime (int): The prime p
        params (dict): Parameters used, e.g. ``{"d": 1}``
        body: A :class:`~purepolylog.polyring.DensePoly`, a
              :class:`~purepolylog.polyring.BivariatePoly` or a tuple of
              coefficients, depending on ``kind``
    """

    def __init__(self, kind: Kind, prime: int, params: Dict[str, Any],
                 body: Any):
        self.kind = kind
        self.prime = prime
        self.params = params
        self.body = body

    def __repr__(self) -> str:
        return "SpecialObject({kind}, p={p}, {params!r})".format(
            kind=self.kind.value, p=self.prime, params=self.params)


@functools.lru_cache(maxsize=None)
def _laguerre_coefficients(p: int) -> Tuple[RatFunc, ...]:
    field = funcfield.rational_functions(p)
    alpha = field.gen
    leading = field.one - alpha ** (p - 1)

    coefficients = []
    denominator = field.one
    for k in range(p):
        if k:
            denominator = denominator * (alpha + k)
        value = leading / denominator
        if not value.is_polynomial:
            raise errors.InternalInconsistency(
                _NOT_POLYNOMIAL.format(k=k, p=p, value=value))
        coefficients.append(value)
    return tuple(coefficients)


def build_laguerre(p: int) -> SpecialObject:
    """The generalized Laguerre polynomial L_{p-1}^{(α)}(X).

    Its coefficients (1 - α^(p-1)) / ((1+α)···(k+α)) are polynomials in α;
    the construction fails loudly if one is not.

    Raises:
        InternalInconsistency: A coefficient did not reduce to a polynomial.
    """
    field = funcfield.rational_functions(p)
    return SpecialObject(Kind.LAGUERRE, p, {},
                         DensePoly(field, _laguerre_coefficients(p)))


def build_exponential(p: int) -> SpecialObject:
    """ℰ^{(α)}(X) = Σ X^k / ((1+α)···(k+α)), constant term 1."""
    field = funcfield.rational_functions(p)
    alpha = field.gen
    coefficients = [field.one]
    for k in range(1, p):
        coefficients.append(coefficients[-1] / (alpha + k))
    return SpecialObject(Kind.EXPONENTIAL, p, {},
                         DensePoly(field, coefficients))


def build_truncated_exponential(p: int) -> SpecialObject:
    """E(X) = Σ_{k<p} X^k / k! over F_p."""
    field = prime_field.get_field(p)
    return SpecialObject(Kind.TRUNCATED_EXPONENTIAL, p, {}, DensePoly(
        field, [field.inv(field.factorial(k)) for k in range(p)]))


@functools.lru_cache(maxsize=None)
def build_t_polynomial(p: int) -> DensePoly:
    """T(X) = ∏_{i=1}^{p-1} (1 + X/i)^i over F_p.

    A second, independent construction evaluates the Laguerre polynomial at
    α = X^p in the point X^p - X. The two must agree.

    Raises:
        InternalInconsistency: The two constructions differ.
    """
    field = prime_field.get_field(p)
    x = DensePoly.variable(field)

    product = DensePoly.constant(field, 1)
    for i in range(1, p):
        product = product * (x.scale(field.inv(i)) + 1) ** i

    frobenius = DensePoly.monomial(field, p)
    shift = frobenius - x
    laguerre_form = DensePoly(field)
    power = DensePoly.constant(field, 1)
    for coefficient in _laguerre_coefficients(p):
        term = coefficient.num.compose(frobenius) * power
        laguerre_form = laguerre_form + term
        power = power * shift

    if laguerre_form != product:
        raise errors.InternalInconsistency(_T_MISMATCH.format(p=p))
    logger.debug("T for p=%d cross-checked, degree %d", p, product.degree)
    return product


def _binomials(upper: DensePoly, count: int) -> List[DensePoly]:
    # C(upper, m) for m = 0..count, as falling factorials over m!.
    field = upper.ring
    return [funcfield.falling_factorial(upper, m).scale(
        field.inv(field.factorial(m))) for m in range(count + 1)]


def build_jacobi_value(p: int, s: int) -> DensePoly:
    """b_{1,s}(α) = Σ_k (-1/s)^k C(α-1, p-1-k) C(sα-1, k), a polynomial of
    degree (p-1)/2 in α.

    Raises:
        BadArgument: s outside 1..p-2.
    """
    field = prime_field.get_field(p)
    if not 0 < s < p - 1:
        raise errors.BadArgument(
            _S_OUT_OF_RANGE.format(s=s, high=p - 2, p=p))

    alpha = DensePoly.variable(field)
    first = _binomials(alpha - 1, p - 1)
    second = _binomials(alpha.scale(s) - 1, p - 1)
    ratio = field.neg(field.inv(s))

    total = DensePoly(field)
    power = 1
    for k in range(p):
        total = total + (first[p - 1 - k] * second[k]).scale(power)
        power = power * ratio % p
    return total


def build_weights(p: int, method: WeightMethod = WeightMethod.VALUATION
                  ) -> Tuple[RatFunc, ...]:
    """The weights g_k(α) as a tuple indexed by k; index 0 holds 1.

    ``VALUATION`` multiplies (1 + α/a)^(-e(k, a)) over 0 < a < p, where
    e(k, a) counts carries. ``JACOBI`` divides 1 by the product of
    b_{1,s}(α) over s < k.
    """
    field = funcfield.rational_functions(p)
    weights = [field.one]
    if method is WeightMethod.JACOBI:
        product = DensePoly.constant(field.base, 1)
        for k in range(1, p):
            if k > 1:
                product = product * build_jacobi_value(p, k - 1)
            weights.append(RatFunc(field, 1, product))
    else:
        base = field.base
        alpha = DensePoly.variable(base)
        for k in range(1, p):
            scalar = 1
            denominator = DensePoly.constant(base, 1)
            for a in range(1, p):
                exponent = base.carry_valuation(k, a)
                if exponent:
                    scalar = scalar * pow(a, exponent, p) % p
                    denominator = denominator * (alpha + a) ** exponent
            weights.append(RatFunc(field, scalar, denominator))

    logger.debug("Weights for p=%d built by %s", p, method.value)
    return tuple(weights)


def build_polylog(p: int, d: int) -> DensePoly:
    """The truncated polylogarithm £_d(X) = Σ_{k<p} X^k / k^d over F_p.

    d is reduced modulo p - 1 first; negative d is allowed.
    """
    field = prime_field.get_field(p)
    exponent = d % (p - 1)
    return DensePoly(field, [0] + [field.power(field.inv(k), exponent)
                                   for k in range(1, p)])


def build_generalized_polylog(p: int, d: int,
                              param_sub: Optional[DensePoly] = None
                              ) -> SpecialObject:
    """£_d^{(α)}(X) = Σ_{k<p} g_k(α) X^k / k^d.

    Args:
        p (int): The prime
        d (int): Weight, reduced modulo p - 1
        param_sub (DensePoly): If given, α is replaced by this polynomial in
                  every g_k, e.g. hα or rα^p

    Raises:
        PoleError: The substitution annihilates a denominator.
    """
    field = funcfield.rational_functions(p)
    base = field.base
    exponent = d % (p - 1)
    weights = build_weights(p)

    coefficients = [field.zero]
    for k in range(1, p):
        weight = weights[k]
        if param_sub is not None:
            weight = funcfield.substitute(weight, param_sub)
        coefficients.append(weight * base.power(base.inv(k), exponent))

    params: Dict[str, Any] = {"d": exponent}
    if param_sub is not None:
        params["param_sub"] = list(param_sub.coeffs)
    return SpecialObject(Kind.GENERALIZED_POLYLOG, p, params,
                         DensePoly(field, coefficients))


def exponential_correction_denominator(p: int) -> DensePoly:
    """(α+p-1)_{p-1}·(β+p-1)_{p-1}, a common multiple of every denominator
    in the exponential correction factor, as an element of F_p[α][β]."""
    fractions = funcfield.bivariate_fractions(p)
    alpha = DensePoly.variable(fractions.base)
    beta = fractions.polynomials.gen
    return (fractions.from_alpha(funcfield.falling_factorial(alpha + p - 1,
                                                             p - 1))
            * funcfield.falling_factorial(beta + p - 1, p - 1))


def build_exponential_correction(p: int) -> BivariatePoly:
    """1 + Σ_{0<i<p} X^i Y^(p-i) / ((α+i)_i (β+p-i)_{p-i}) with coefficients
    in F_p(α, β)."""
    fractions = funcfield.bivariate_fractions(p)
    alpha = DensePoly.variable(fractions.base)
    beta = fractions.polynomials.gen

    rows = [[fractions.zero] * (p + 1) for _ in range(p)]
    rows[0][0] = fractions.one
    for i in range(1, p):
        left = fractions.from_alpha(funcfield.falling_factorial(alpha + i, i))
        right = funcfield.falling_factorial(beta + (p - i), p - i)
        rows[i][p - i] = BiFrac(fractions, 1, left * right)
    return BivariatePoly(fractions, rows)


def laguerre_coefficient_denominator(p: int) -> DensePoly:
    """(α+β-1)_{p-1} in F_p[α][β], shared by every Laguerre product
    coefficient."""
    fractions = funcfield.bivariate_fractions(p)
    total = fractions.from_sum(DensePoly.variable(fractions.base))
    return funcfield.falling_factorial(total - 1, p - 1)


def build_laguerre_coefficients(p: int) -> Tuple[BiFrac, ...]:
    """The coefficients c_0, ..., c_{p-1} of the Laguerre product formula.

    c_0 = -(α-1)_{p-1} (β-1)_{p-1} / (α+β-1)_{p-1} and, for 0 < i < p,
    c_i = -(α-1)_{p-1-i} (β-1)_{i-1} / (α+β-1)_{p-1}.
    """
    fractions = funcfield.bivariate_fractions(p)
    alpha = DensePoly.variable(fractions.base)
    beta = fractions.polynomials.gen
    denominator = laguerre_coefficient_denominator(p)

    def numerator(left: int, right: int) -> DensePoly:
        return -(fractions.from_alpha(funcfield.falling_factorial(alpha - 1,
                                                                  left))
                 * funcfield.falling_factorial(beta - 1, right))

    coefficients = [BiFrac(fractions, numerator(p - 1, p - 1), denominator)]
    for i in range(1, p):
        coefficients.append(
            BiFrac(fractions, numerator(p - 1 - i, i - 1), denominator))
    return tuple(coefficients)


def highest_weight_orientations(p: int) -> Dict[str, bool]:
    """Compare g_{p-1} against ∏(1 + α/a)^(1-a) and ∏(1 - α/a)^(1-a).

    Returns which of the two product orientations equals the weight; it
    asserts nothing.
    """
    field = funcfield.rational_functions(p)
    base = field.base
    alpha = field.gen
    weight = build_weights(p)[p - 1]

    plus = field.one
    minus = field.one
    for a in range(1, p):
        step = alpha * base.inv(a)
        plus = plus * (field.one + step) ** (1 - a)
        minus = minus * (field.one - step) ** (1 - a)
    return {"plus": weight == plus, "minus": weight == minus}


def _require(kind: Kind, params: Dict[str, Any], name: str) -> Any:
    value = params.get(name)
    if value is None:
        raise errors.BadArgument(
            _MISSING_PARAMETER.format(kind=kind.value, name=name))
    return value


def _generalized(p: int, params: Dict[str, Any]) -> SpecialObject:
    d = _require(Kind.GENERALIZED_POLYLOG, params, "d")
    h = params.get("h")
    if h is None:
        return build_generalized_polylog(p, d)
    field = prime_field.get_field(p)
    built = build_generalized_polylog(
        p, d, param_sub=DensePoly.variable(field).scale(h))
    return SpecialObject(built.kind, p, {"d": built.params["d"], "h": h % p},
                         built.body)


def _weights(p: int, params: Dict[str, Any]) -> SpecialObject:
    method = WeightMethod(params.get("method") or WeightMethod.VALUATION)
    return SpecialObject(Kind.WEIGHTS, p, {"method": method.value},
                         build_weights(p, method))


_BUILDERS: Dict[Kind, Callable[[int, Dict[str, Any]], SpecialObject]] = {
    Kind.LAGUERRE: lambda p, params: build_laguerre(p),
    Kind.EXPONENTIAL: lambda p, params: build_exponential(p),
    Kind.TRUNCATED_EXPONENTIAL:
        lambda p, params: build_truncated_exponential(p),
    Kind.T_POLYNOMIAL: lambda p, params: SpecialObject(
        Kind.T_POLYNOMIAL, p, {}, build_t_polynomial(p)),
    Kind.JACOBI_VALUE: lambda p, params: SpecialObject(
        Kind.JACOBI_VALUE, p, {"s": _require(Kind.JACOBI_VALUE, params, "s")},
        build_jacobi_value(p, params["s"])),
    Kind.WEIGHTS: _weights,
    Kind.POLYLOG: lambda p, params: SpecialObject(
        Kind.POLYLOG, p,
        {"d": _require(Kind.POLYLOG, params, "d") % (p - 1)},
        build_polylog(p, params["d"])),
    Kind.GENERALIZED_POLYLOG: _generalized,
    Kind.EXPONENTIAL_CORRECTION: lambda p, params: SpecialObject(
        Kind.EXPONENTIAL_CORRECTION, p, {}, build_exponential_correction(p)),
    Kind.LAGUERRE_COEFFICIENTS: lambda p, params: SpecialObject(
        Kind.LAGUERRE_COEFFICIENTS, p, {}, build_laguerre_coefficients(p)),
}

REQUIRED_PARAMETERS: Final[Dict[Kind, Tuple[str, ...]]] = {
    Kind.JACOBI_VALUE: ("s",),
    Kind.POLYLOG: ("d",),
    Kind.GENERALIZED_POLYLOG: ("d",),
}


def validate_parameters(kind: Kind, p: int, params: Dict[str, Any]) -> None:
    """Check the parameters of a kind without building anything.

    d and h are taken modulo p - 1 and p, so only s has a bounded range.

    Raises:
        BadArgument: A required parameter is missing, or s is outside
                     1..p-2.
    """
    for name in REQUIRED_PARAMETERS.get(kind, ()):
        _require(kind, params, name)
    if kind is Kind.JACOBI_VALUE and not 0 < params["s"] < p - 1:
        raise errors.BadArgument(
            _S_OUT_OF_RANGE.format(s=params["s"], high=p - 2, p=p))


def build_object(kind: Kind, p: int, **params) -> SpecialObject:
    """Build any object by kind, wrapping bare results in a
    :class:`SpecialObject`.

    Raises:
        BadArgument: A parameter the kind needs is missing or out of range.
    """
    prime_field.get_field(p)
    validate_parameters(kind, p, params)
    return _BUILDERS[kind](p, params)
