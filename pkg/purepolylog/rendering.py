"""Text and LaTeX rendering of ring elements, polynomials and objects.

Every value printed is an exact residue; nothing passes through floating
point. Plain text writes α as ``a`` and β as ``b``.
"""
# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

from typing import Any
from typing import Dict
from typing import List

from purepolylog import errors
from purepolylog import funcfield
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog import special

TEXT: Final = "text"
LATEX: Final = "latex"
STYLES: Final = (TEXT, LATEX)

_UNKNOWN_STYLE: Final = "Unknown style {style!r}; expected one of {styles}"
_UNPRINTABLE: Final = "Cannot render an element of {ring!r}"

_LATEX_NAMES: Final = {"a": r"\alpha", "b": r"\beta"}

_HEADERS: Final = {
    special.Kind.LAGUERRE: r"L_{{{degree}}}^{{(\alpha)}}(X)",
    special.Kind.EXPONENTIAL: r"\mathcal{{E}}^{{(\alpha)}}(X)",
    special.Kind.TRUNCATED_EXPONENTIAL: r"E(X)",
    special.Kind.T_POLYNOMIAL: r"T(X)",
    special.Kind.JACOBI_VALUE: r"b_{{1,{s}}}(\alpha)",
    special.Kind.WEIGHTS: r"g_{{k}}(\alpha)",
    special.Kind.POLYLOG: r"\pounds_{{{d}}}(X)",
    special.Kind.GENERALIZED_POLYLOG:
        r"\pounds_{{{d}}}^{{({scale}\alpha)}}(X)",
    special.Kind.EXPONENTIAL_CORRECTION: r"K^{{(\alpha,\beta)}}(X,Y)",
    special.Kind.LAGUERRE_COEFFICIENTS: r"c_{{i}}(\alpha,\beta)",
}


def _check_style(style: str) -> None:
    if style not in STYLES:
        raise errors.BadArgument(
            _UNKNOWN_STYLE.format(style=style, styles=", ".join(STYLES)))


def _compound(text: str) -> bool:
    return "+" in text or "/" in text or text.startswith("-")


def _variable(name: str, style: str) -> str:
    return _LATEX_NAMES.get(name, name) if style == LATEX else name


def _power(name: str, exponent: int, style: str) -> str:
    if exponent == 1:
        return name
    if style == LATEX:
        return "{name}^{{{k}}}".format(name=name, k=exponent)
    return "{name}^{k}".format(name=name, k=exponent)


def _compact(poly: polyring.DensePoly, name: str, style: str) -> str:
    """Coefficient-ring polynomials: ``1+2a``, ``(1+a)b^2``."""
    if poly.is_zero():
        return "0"

    variable = _variable(name, style)
    parts = []
    for exponent, value in poly.terms():
        coefficient = format_element(value, poly.ring, style)
        if exponent == 0:
            parts.append(coefficient)
            continue
        monomial = _power(variable, exponent, style)
        if coefficient == "1":
            parts.append(monomial)
        elif _compound(coefficient):
            parts.append("({c}){m}".format(c=coefficient, m=monomial))
        else:
            parts.append("{c}{m}".format(c=coefficient, m=monomial))
    return "+".join(parts)


def _fraction(num: str, den: str, style: str) -> str:
    if den == "1":
        return num
    if style == LATEX:
        return r"\frac{{{num}}}{{{den}}}".format(num=num, den=den)
    wrap = "({})".format
    return "{num}/{den}".format(num=wrap(num) if _compound(num) else num,
                                den=wrap(den) if _compound(den) else den)


def format_element(value: Any, ring: polyring.Ring, style: str = TEXT) -> str:
    """Render one element of a coefficient ring.

    Raises:
        BadArgument: Unknown style or ring.
    """
    _check_style(style)
    if isinstance(ring, prime_field.PrimeField):
        return str(value)
    if isinstance(ring, funcfield.RationalFunctionField):
        return _fraction(_compact(value.num, ring.variable, style),
                         _compact(value.den, ring.variable, style), style)
    if isinstance(ring, funcfield.BivariateFractionField):
        polynomials = ring.polynomials
        return _fraction(format_element(value.num, polynomials, style),
                         format_element(value.den, polynomials, style), style)
    if isinstance(ring, polyring.PolynomialRing):
        return _compact(value, ring.variable, style)
    if value is None or isinstance(value, (bool, int, str)):
        return str(value)
    raise errors.BadArgument(_UNPRINTABLE.format(ring=ring))


def _term(coefficient: str, monomial: str, style: str) -> str:
    if not monomial:
        return coefficient
    if coefficient == "1":
        return monomial
    if style == LATEX:
        if "+" in coefficient:
            return r"\left({c}\right) {m}".format(c=coefficient, m=monomial)
        return "{c} {m}".format(c=coefficient, m=monomial)
    if _compound(coefficient):
        return "({c})*{m}".format(c=coefficient, m=monomial)
    return "{c}*{m}".format(c=coefficient, m=monomial)


def format_poly(poly: polyring.DensePoly, variable: str = "X",
                style: str = TEXT) -> str:
    """Render a polynomial in X in ascending order, e.g. ``X + 2*X^2``."""
    _check_style(style)
    if poly.is_zero():
        return "0"
    return " + ".join(
        _term(format_element(value, poly.ring, style),
              _power(variable, exponent, style) if exponent else "", style)
        for exponent, value in poly.terms())


def format_bivariate(poly: polyring.BivariatePoly, style: str = TEXT) -> str:
    """Render a polynomial in X and Y by total degree, then degree in X."""
    _check_style(style)
    if poly.is_zero():
        return "0"

    ordered = sorted(poly.terms(), key=lambda term: (term[0] + term[1],
                                                     term[0]))
    joiner = " " if style == LATEX else "*"
    parts = []
    for i, j, value in ordered:
        monomials = [_power(name, exponent, style)
                     for name, exponent in (("X", i), ("Y", j)) if exponent]
        parts.append(_term(format_element(value, poly.ring, style),
                           joiner.join(monomials), style))
    return " + ".join(parts)


def format_body(obj: special.SpecialObject, style: str = TEXT) -> List[str]:
    """Render an object's body as lines."""
    body = obj.body
    if isinstance(body, polyring.BivariatePoly):
        return [format_bivariate(body, style)]
    if isinstance(body, tuple):
        ring = body[0].field
        label = "g_{k}" if obj.kind is special.Kind.WEIGHTS else "c_{k}"
        start = 1 if obj.kind is special.Kind.WEIGHTS else 0
        return ["{label} = {value}".format(
            label=label.format(k=k),
            value=format_element(body[k], ring, style))
            for k in range(start, len(body))]
    if isinstance(body.ring, prime_field.PrimeField) and \
            obj.kind is special.Kind.JACOBI_VALUE:
        return [format_element(body, polyring.PolynomialRing(body.ring, "a"),
                               style)]
    return [format_poly(body, "X", style)]


def format_object(obj: special.SpecialObject, style: str = TEXT) -> str:
    """Render an object. LaTeX output is prefixed with the object's name."""
    _check_style(style)
    lines = format_body(obj, style)
    if style == TEXT:
        return "\n".join(lines)

    scale = obj.params.get("h", "")
    header = _HEADERS[obj.kind].format(degree=obj.prime - 1,
                                       s=obj.params.get("s"),
                                       d=obj.params.get("d"),
                                       scale="" if scale in ("", 1) else scale)
    if len(lines) == 1:
        return "{header} = {body}".format(header=header, body=lines[0])
    return "\n".join([header] + lines)


def object_record(obj: special.SpecialObject) -> Dict[str, Any]:
    """JSON-ready description of an object."""
    return {
        "object": obj.kind.value,
        "p": obj.prime,
        "params": dict(obj.params),
        "text": format_body(obj, TEXT),
        "latex": format_body(obj, LATEX),
    }
