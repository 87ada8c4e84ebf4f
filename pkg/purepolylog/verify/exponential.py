"""Checks on the exponential and Laguerre polynomials and their product
formulas in two parameters.

The product formulas live in F_p(α, β)[X, Y]. Rather than carrying
bivariate fractions through the products, both sides are multiplied by
known common denominators so the comparison runs on polynomials in
F_p[α][β][X, Y], reduced by X^p -> α^p - α and Y^p -> β^p - β.
"""
# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

from typing import Optional

from purepolylog import errors
from purepolylog import funcfield
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog import special
from purepolylog.funcfield import ClearedPoly
from purepolylog.polyring import BivariatePoly
from purepolylog.polyring import DensePoly
from purepolylog.verify import report

_SCALE_OUT_OF_RANGE: Final = "c={c} is outside 0..{high} for p={p}"


def artin_schreier_modulus(p: int) -> polyring.PowerModulus:
    """X^p - (α^p - α) over F_p[α]."""
    field = funcfield.rational_functions(p)
    alpha = DensePoly.variable(field.base)
    return polyring.PowerModulus(field.polynomials, alpha ** p - alpha)


@report.check("laguerre_differential")
def verify_laguerre_differential(p: int) -> Optional[report.Witness]:
    """θL ≡ (X - α)·L modulo X^p - (α^p - α)."""
    field = funcfield.rational_functions(p)
    polynomials = field.polynomials
    laguerre = ClearedPoly.from_poly(special.build_laguerre(p).body)
    shift = DensePoly(polynomials, (-polynomials.gen, polynomials.one))

    return report.difference_witness(laguerre.theta(), laguerre * shift,
                                     artin_schreier_modulus(p))


def _product_witness(p: int, cleared: ClearedPoly,
                     correction: BivariatePoly, multiplier: DensePoly,
                     scale: int = 1) -> Optional[report.Witness]:
    # Checks P^(cα)(cX)·P^(cβ)(cY) ≡ P^(c(α+β))(c(X+Y))·K_c(X, Y) where
    # K_c is the correction with α, β -> cα, cβ and X, Y -> cX, cY. P has
    # been cleared to N/D and ``multiplier`` clears every entry of K.
    fractions = funcfield.bivariate_fractions(p)
    polynomials = fractions.polynomials

    numerators = [value.scale_variable(scale).scale(pow(scale, k, p))
                  for k, value in enumerate(cleared.num.coeffs)]
    denominator = cleared.den.scale_variable(scale)

    x_side = BivariatePoly.from_x(DensePoly(
        polynomials, [fractions.from_alpha(value) for value in numerators]))
    y_side = BivariatePoly.from_y(DensePoly(
        polynomials, [fractions.from_beta(value) for value in numerators]))
    sum_side = BivariatePoly.substitute_sum(DensePoly(
        polynomials, [fractions.from_sum(value) for value in numerators]))

    multiplier = fractions.scale_parameters(multiplier, scale)
    rows = [[polynomials.zero] * (correction.degree_y + 1)
            for _ in range(correction.degree_x + 1)]
    for i, j, entry in correction.terms():
        value = entry.scale_variables(scale) * pow(scale, i + j, p)
        rows[i][j] = (value.num * multiplier).exact_div(value.den)
    cleared_correction = BivariatePoly(polynomials, rows)

    lhs = (x_side * y_side).scale(fractions.from_sum(denominator)
                                  * multiplier)
    rhs = (sum_side * cleared_correction).scale(
        fractions.from_alpha(denominator) * fractions.from_beta(denominator))

    alpha = DensePoly.variable(fractions.base)
    target = alpha ** p - alpha
    modulus = polyring.BivariateModulus(polynomials,
                                        fractions.from_alpha(target),
                                        fractions.from_beta(target))
    return report.difference_witness(lhs, rhs, modulus)


@report.check("exponential_product")
def verify_exponential_product(p: int) -> Optional[report.Witness]:
    """ℰ^(α)(X)·ℰ^(β)(Y) ≡ ℰ^(α+β)(X+Y)·(1 + Σ X^i Y^(p-i) / ((α+i)_i
    (β+p-i)_{p-i})) modulo X^p - (α^p - α), Y^p - (β^p - β)."""
    return _product_witness(
        p, ClearedPoly.from_poly(special.build_exponential(p).body),
        special.build_exponential_correction(p),
        special.exponential_correction_denominator(p))


@report.check("laguerre_product")
def verify_laguerre_product(p: int) -> Optional[report.Witness]:
    """The Laguerre analogue, with c_0 in place of 1 and c_i as the
    coefficient of X^i Y^(p-i)."""
    fractions = funcfield.bivariate_fractions(p)
    coefficients = special.build_laguerre_coefficients(p)

    rows = [[fractions.zero] * p for _ in range(p)]
    rows[0][0] = coefficients[0]
    for i in range(1, p):
        rows[i][p - i] = coefficients[i]

    return _product_witness(
        p, ClearedPoly.from_poly(special.build_laguerre(p).body),
        BivariatePoly(fractions, rows),
        special.laguerre_coefficient_denominator(p))


@report.check("characterization")
def verify_characterization(p: int, c: int) -> Optional[report.Witness]:
    """ℰ^(cα)(cX) satisfies the exponential product formula with the
    correction rescaled by α, β, X, Y -> cα, cβ, cX, cY. Since c^p = c the
    moduli only scale by c, which leaves the ideal unchanged for c ≠ 0; at
    c = 0 both sides collapse to 1.

    Raises:
        BadArgument: c outside 0..p-1.
    """
    prime_field.get_field(p)
    if not 0 <= c < p:
        raise errors.BadArgument(
            _SCALE_OUT_OF_RANGE.format(c=c, high=p - 1, p=p))

    return _product_witness(
        p, ClearedPoly.from_poly(special.build_exponential(p).body),
        special.build_exponential_correction(p),
        special.exponential_correction_denominator(p), scale=c)
