"""Checks on the weights g_k(α), the values b_{1,s}(α) and the generalized
polylogarithms assembled from them."""
from typing import Iterator
from typing import Optional

from purepolylog import funcfield
from purepolylog import prime_field
from purepolylog import special
from purepolylog.funcfield import ClearedPoly
from purepolylog.polyring import DensePoly
from purepolylog.verify import exponential
from purepolylog.verify import report


@report.check("compositional_inverse")
def verify_compositional_inverse(p: int) -> Optional[report.Witness]:
    """-£_1^(α)(L(X)) ≡ X modulo X^p - (α^p - α)."""
    field = funcfield.rational_functions(p)
    modulus = exponential.artin_schreier_modulus(p)
    laguerre = ClearedPoly.from_poly(special.build_laguerre(p).body)
    polylog = ClearedPoly.from_poly(
        special.build_generalized_polylog(p, 1).body)

    lhs = -polylog.compose(laguerre, modulus)
    rhs = ClearedPoly(field, DensePoly.variable(field.polynomials))
    return report.difference_witness(lhs, rhs, modulus)


@report.check("periodicity")
def verify_periodicity(p: int, d: int) -> Optional[report.Witness]:
    """£_d^(α) = £_{d+p-1}^(α), each side built on its own."""
    return report.difference_witness(
        special.build_generalized_polylog(p, d).body,
        special.build_generalized_polylog(p, d + p - 1).body,
        note="d={} against d={}".format(d, d + p - 1))


@report.check("theta_chain")
def verify_theta_chain(p: int, d: int) -> Optional[report.Witness]:
    """θ£_d^(α) = £_{d-1}^(α), exactly."""
    return report.difference_witness(
        special.build_generalized_polylog(p, d).body.theta(),
        special.build_generalized_polylog(p, d - 1).body)


def _jacobi_witnesses(p: int) -> Iterator[Optional[report.Witness]]:
    field = prime_field.get_field(p)
    alpha = DensePoly.variable(field)
    target = DensePoly.constant(field, 1) - alpha ** (p - 1)

    for s in range(1, p - 1):
        value = special.build_jacobi_value(p, s)
        yield report.value_witness([s], value(0), 1,
                                   note="constant term of b_1,{}".format(s))
        yield report.value_witness([s], value.degree, (p - 1) // 2,
                                   note="degree of b_1,{}".format(s))
        yield report.difference_witness(
            value * value.scale_variable(p - 1), target,
            note="b_1,{s}(a)·b_1,{s}(-a) = 1 - a^{e}".format(s=s, e=p - 1))
        yield report.difference_witness(
            value, special.build_jacobi_value(p, p - 1 - s),
            note="b_1,{} = b_1,{}".format(s, p - 1 - s))

        roots = [r for r in range(p) if value(r) == 0]
        yield report.value_witness([s], len(roots), value.degree,
                                   note="b_1,{} splits into distinct linear "
                                        "factors".format(s))
        for a in range(1, p):
            yield report.value_witness(
                [s, a], value(p - a) == 0, field.binomial(a + s * a, a) == 0,
                note="-{a} is a root of b_1,{s} iff p divides "
                     "C({a}+{s}·{a}, {a})".format(a=a, s=s))
        for a in range(1, (p + 1) // 2):
            yield report.value_witness(
                [s, a], (value(a) == 0) != (value(p - a) == 0), True,
                note="exactly one of ±{a} is a root of b_1,{s}".format(
                    a=a, s=s))


@report.check("jacobi_values")
def verify_jacobi_values(p: int) -> Optional[report.Witness]:
    """Properties of every b_{1,s}(α), 0 < s < p - 1: constant term 1,
    degree (p-1)/2, b(α)b(-α) = 1 - α^(p-1), the symmetry s <-> p-1-s, a
    splitting into distinct linear factors, and the binomial criterion for
    which of ±a are roots."""
    return report.first_witness(_jacobi_witnesses(p))


@report.check("weight_methods")
def verify_weight_methods(p: int) -> Optional[report.Witness]:
    """The carry-count and Jacobi constructions of g_k(α) agree."""
    field = funcfield.rational_functions(p)
    by_valuation = special.build_weights(p, special.WeightMethod.VALUATION)
    by_jacobi = special.build_weights(p, special.WeightMethod.JACOBI)
    return report.first_witness(
        report.value_witness([k], by_valuation[k], by_jacobi[k], field,
                             note="g_{} by carries vs by b_1,s".format(k))
        for k in range(1, p))


@report.check("weight_symmetry")
def verify_weight_symmetry(p: int) -> Optional[report.Witness]:
    """g_k·g_{p-k} = g_{p-1} for 0 < k < p."""
    field = funcfield.rational_functions(p)
    weights = special.build_weights(p)
    return report.first_witness(
        report.value_witness([k], weights[k] * weights[p - k],
                             weights[p - 1], field,
                             note="g_{}·g_{}".format(k, p - k))
        for k in range(1, p))


@report.check("highest_weight")
def verify_highest_weight(p: int) -> Optional[report.Witness]:
    """g_{p-1}(α)·T(α) = 1 - α^(p-1)."""
    field = funcfield.rational_functions(p)
    weight = special.build_weights(p)[p - 1]
    t_value = field.coerce(special.build_t_polynomial(p))
    return report.value_witness([p - 1], weight * t_value,
                                field.one - field.gen ** (p - 1), field,
                                note="g_{}·T".format(p - 1))
