"""Rational function fields over F_p.

:class:`RatFunc` is an element of F_p(α) kept in lowest terms,
:class:`BiFrac` an element of F_p(α, β) kept content-free, and
:class:`ClearedPoly` a polynomial in X over F_p(α) stored as one numerator
over a common denominator, which is the shape the congruence checks reduce
in.
"""
# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

import functools
import logging
from typing import Optional
from typing import Tuple
from typing import Union

from purepolylog import config
from purepolylog import errors
from purepolylog import polyring
from purepolylog import prime_field
from purepolylog.polyring import DensePoly

logger = logging.getLogger(__name__)

Coefficients = Tuple[int, ...]

_ZERO_DENOMINATOR: Final = "Denominator is the zero polynomial"
_ZERO_INVERSE: Final = "The zero rational function has no inverse"
_POLE_AT: Final = "Specializing α -> {point} hits a pole of {value}"
_POLE_UNDER: Final = "Substituting α -> {inner} makes the denominator of " \
                     "{value} vanish"
_NEGATIVE_COUNT: Final = "Falling factorial length must be nonnegative, " \
                         "got {n}"
_DEGREE_GUARD: Final = ("Bivariate fraction of total degree {degree} exceeds "
                        "the guard of {guard} for p={p}. Raise it with "
                        "{env}.")
_FOREIGN_VALUE: Final = "{value!r} is not an element of {field!r}"


def _coefficients(field: prime_field.PrimeField, value) -> Coefficients:
    if isinstance(value, DensePoly):
        if value.ring != field:
            raise errors.BadArgument(
                _FOREIGN_VALUE.format(value=value, field=field))
        return value.coeffs
    if isinstance(value, int):
        return field.poly_canonical((value,))
    return field.poly_canonical(value)


def _poly_power(field: prime_field.PrimeField, base: Coefficients,
                exponent: int) -> Coefficients:
    result: Coefficients = (1,)
    while exponent:
        if exponent & 1:
            result = field.poly_mul(result, base)
        exponent >>= 1
        if exponent:
            base = field.poly_mul(base, base)
    return result


class RationalFunctionField(polyring.Ring):
    """The field F_p(α).

    Attributes:
        base (:class:`~purepolylog.prime_field.PrimeField`): F_p
        polynomials (:class:`~purepolylog.polyring.PolynomialRing`): F_p[α],
                    the ring numerators and denominators live in
        variable (str): Name of α in plain-text output
    """

    def __init__(self, base: prime_field.PrimeField, variable: str = "a"):
        self.base = base
        self.variable = variable
        self.polynomials = polyring.PolynomialRing(base, variable)
        self.characteristic = base.p
        self.zero = RatFunc._raw(self, (), (1,))
        self.one = RatFunc._raw(self, (1,), (1,))

    @property
    def gen(self) -> "RatFunc":
        """α itself."""
        return RatFunc._raw(self, (0, 1), (1,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a.num.coeffs

    def coerce(self, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.field == self:
                return value
            raise errors.BadArgument(
                _FOREIGN_VALUE.format(value=value, field=self))
        if isinstance(value, DensePoly):
            return RatFunc._raw(self, _coefficients(self.base, value), (1,))
        if isinstance(value, int):
            return RatFunc._raw(self, self.base.poly_canonical((value,)), (1,))
        raise TypeError(_FOREIGN_VALUE.format(value=value, field=self))

    def inv(self, a) -> "RatFunc":
        return a.inverse()

    def exact_div(self, a, b) -> "RatFunc":
        return a / b

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalFunctionField)
                and other.base == self.base
                and other.variable == self.variable)

    def __hash__(self) -> int:
        return hash((RationalFunctionField, self.base, self.variable))

    def __repr__(self) -> str:
        return "RationalFunctionField({base!r})".format(base=self.base)


class RatFunc(object):
    """An element num/den of F_p(α).

    The representation is canonical: gcd(num, den) = 1, den is monic and
    zero is 0/1. Equal functions therefore have identical coefficient
    tuples, which makes equality and hashing structural.

    Args:
        field (:class:`RationalFunctionField`): The field
        num: Numerator as a polynomial over F_p, a coefficient sequence or an
             int
        den: Denominator in the same forms; defaults to 1

    Raises:
        DivisionByZero: The denominator is zero.
    """
    __slots__ = ("field", "num", "den")

    def __init__(self, field: RationalFunctionField, num, den=1):
        base = field.base
        normalized = _normalized(field, _coefficients(base, num),
                                 _coefficients(base, den))
        self.field = field
        self.num: DensePoly = normalized.num
        self.den: DensePoly = normalized.den

    @classmethod
    def _raw(cls, field: RationalFunctionField, num: Coefficients,
             den: Coefficients) -> "RatFunc":
        # Both tuples canonical, coprime, den monic.
        value = cls.__new__(cls)
        value.field = field
        value.num = DensePoly._wrap(field.base, num)
        value.den = DensePoly._wrap(field.base, den)
        return value

    @property
    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def _operand(self, other) -> Optional["RatFunc"]:
        try:
            return self.field.coerce(other)
        except (TypeError, errors.BadArgument):
            return None

    def __eq__(self, other) -> bool:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return (self.num.coeffs == operand.num.coeffs
                and self.den.coeffs == operand.den.coeffs)

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __add__(self, other) -> "RatFunc":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return _add(self.field, self.num.coeffs, self.den.coeffs,
                    operand.num.coeffs, operand.den.coeffs)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(self.field, self.field.base.poly_neg(
            self.num.coeffs), self.den.coeffs)

    def __sub__(self, other) -> "RatFunc":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __rsub__(self, other) -> "RatFunc":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return operand + (-self)

    def __mul__(self, other) -> "RatFunc":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return _mul(self.field, self.num.coeffs, self.den.coeffs,
                    operand.num.coeffs, operand.den.coeffs)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        """Raises:
            DivisionByZero: The function is zero.
        """
        base = self.field.base
        num = self.num.coeffs
        if not num:
            raise errors.DivisionByZero(_ZERO_INVERSE)
        scale = base.inv(num[-1])
        return RatFunc._raw(self.field,
                            base.poly_scale(self.den.coeffs, scale),
                            base.poly_scale(num, scale))

    def __truediv__(self, other) -> "RatFunc":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self * operand.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return operand * self.inverse()

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.inverse() ** -exponent
        base = self.field.base
        # Powers of coprime polynomials stay coprime.
        return RatFunc._raw(self.field,
                            _poly_power(base, self.num.coeffs, exponent),
                            _poly_power(base, self.den.coeffs, exponent))

    def substitute(self, inner: DensePoly) -> "RatFunc":
        return substitute(self, inner)

    def specialize(self, point: int) -> int:
        return specialize(self, point)

    def __repr__(self) -> str:
        return "RatFunc({num!r}, {den!r})".format(num=self.num.coeffs,
                                                  den=self.den.coeffs)


def _normalized(field: RationalFunctionField, num: Coefficients,
                den: Coefficients) -> RatFunc:
    base = field.base
    if not den:
        raise errors.DivisionByZero(_ZERO_DENOMINATOR)
    if not num:
        return field.zero

    if len(num) > 1 and len(den) > 1:
        common = base.poly_gcd(num, den)
        if len(common) > 1:
            num = base.poly_divmod(num, common)[0]
            den = base.poly_divmod(den, common)[0]

    if den[-1] != 1:
        scale = base.inv(den[-1])
        num = base.poly_scale(num, scale)
        den = base.poly_scale(den, scale)
    return RatFunc._raw(field, num, den)


def _add(field: RationalFunctionField, a: Coefficients, b: Coefficients,
         c: Coefficients, d: Coefficients) -> RatFunc:
    # a/b + c/d with both operands already reduced (Henrici).
    base = field.base
    if not a:
        return RatFunc._raw(field, c, d)
    if not c:
        return RatFunc._raw(field, a, b)
    if b == d:
        return _normalized(field, base.poly_add(a, c), b)
    if b == (1,):
        return RatFunc._raw(field, base.poly_add(base.poly_mul(a, d), c), d)
    if d == (1,):
        return RatFunc._raw(field, base.poly_add(a, base.poly_mul(c, b)), b)

    common = base.poly_gcd(b, d)
    if common == (1,):
        num = base.poly_add(base.poly_mul(a, d), base.poly_mul(c, b))
        if not num:
            return field.zero
        return RatFunc._raw(field, num, base.poly_mul(b, d))

    b_part = base.poly_divmod(b, common)[0]
    d_part = base.poly_divmod(d, common)[0]
    num = base.poly_add(base.poly_mul(a, d_part), base.poly_mul(c, b_part))
    if not num:
        return field.zero
    second = base.poly_gcd(num, common)
    if second != (1,):
        num = base.poly_divmod(num, second)[0]
        d = base.poly_divmod(d, second)[0]
    return RatFunc._raw(field, num, base.poly_mul(b_part, d))


def _mul(field: RationalFunctionField, a: Coefficients, b: Coefficients,
         c: Coefficients, d: Coefficients) -> RatFunc:
    base = field.base
    if not a or not c:
        return field.zero
    if b == (1,) and d == (1,):
        return RatFunc._raw(field, base.poly_mul(a, c), (1,))

    # A polynomial times a fraction whose denominator divides it.
    if b == (1,):
        quot, rem = base.poly_divmod(a, d)
        if not rem:
            return RatFunc._raw(field, base.poly_mul(quot, c), (1,))
    elif d == (1,):
        quot, rem = base.poly_divmod(c, b)
        if not rem:
            return RatFunc._raw(field, base.poly_mul(a, quot), (1,))

    first = base.poly_gcd(a, d) if len(a) > 1 and len(d) > 1 else (1,)
    second = base.poly_gcd(c, b) if len(c) > 1 and len(b) > 1 else (1,)
    if first != (1,):
        a = base.poly_divmod(a, first)[0]
        d = base.poly_divmod(d, first)[0]
    if second != (1,):
        c = base.poly_divmod(c, second)[0]
        b = base.poly_divmod(b, second)[0]
    return RatFunc._raw(field, base.poly_mul(a, c), base.poly_mul(b, d))


def _compose(field: prime_field.PrimeField, coeffs: Coefficients,
             inner: Coefficients) -> Coefficients:
    if not coeffs:
        return ()
    if len(inner) <= 1:
        point = inner[0] if inner else 0
        return field.poly_canonical((field.poly_eval(coeffs, point),))

    terms = [(k, c) for k, c in enumerate(inner) if c]
    if len(terms) == 1:
        # Monomial inner polynomial c·α^m: spread and scale.
        step, lead = terms[0]
        out = [0] * ((len(coeffs) - 1) * step + 1)
        power = 1
        for i, value in enumerate(coeffs):
            out[i * step] = value * power % field.p
            power = power * lead % field.p
        return field.poly_trim(out)

    acc: Coefficients = ()
    for value in reversed(coeffs):
        acc = field.poly_add(field.poly_mul(acc, inner), (value,))
    return acc


def substitute(value: RatFunc, inner: DensePoly) -> RatFunc:
    """Return value(inner(α)) for a polynomial ``inner`` over F_p.

    Substitution preserves coprimality of numerator and denominator, so only
    the leading coefficient needs fixing. The zero polynomial specializes at
    α = 0.

    Raises:
        PoleError: The substituted denominator vanishes.
    """
    base = value.field.base
    inner_coeffs = _coefficients(base, inner)
    num = _compose(base, value.num.coeffs, inner_coeffs)
    den = _compose(base, value.den.coeffs, inner_coeffs)
    if not den:
        raise errors.PoleError(_POLE_UNDER.format(inner=inner_coeffs,
                                                  value=value))
    if den[-1] != 1:
        scale = base.inv(den[-1])
        num = base.poly_scale(num, scale)
        den = base.poly_scale(den, scale)
    return RatFunc._raw(value.field, num, den)


def specialize(value: RatFunc, point: int) -> int:
    """Evaluate at α = point in F_p.

    Raises:
        PoleError: The denominator vanishes at ``point``.
    """
    base = value.field.base
    den = base.poly_eval(value.den.coeffs, point)
    if not den:
        raise errors.PoleError(_POLE_AT.format(point=point % base.p,
                                               value=value))
    return base.poly_eval(value.num.coeffs, point) * base.inv(den) % base.p


def falling_factorial(base: DensePoly, n: int) -> DensePoly:
    """The Pochhammer product base·(base-1)···(base-n+1); 1 when n = 0.

    Raises:
        BadArgument: n is negative.
    """
    if n < 0:
        raise errors.BadArgument(_NEGATIVE_COUNT.format(n=n))
    result = DensePoly._wrap(base.ring, (base.ring.one,))
    for shift in range(n):
        result = result * (base - shift)
    return result


@functools.lru_cache(maxsize=None)
def rational_functions(p: int) -> RationalFunctionField:
    """The shared F_p(α) for p."""
    return RationalFunctionField(prime_field.get_field(p))


class ClearedPoly(object):
    """A polynomial in X over F_p(α), held as ``num / den``.

    ``num`` is a polynomial in X whose coefficients are polynomials in α
    (ring ``field.polynomials``) and ``den`` is one polynomial in α. Products
    multiply numerators and denominators without any gcd, and reduction
    modulo X^n - c with c a polynomial in α only touches the numerator, so
    a congruence holds exactly when the cleared difference reduces to zero.

    Attributes:
        field (:class:`RationalFunctionField`): F_p(α)
        num (:class:`~purepolylog.polyring.DensePoly`): Numerator over F_p[α]
        den (:class:`~purepolylog.polyring.DensePoly`): Denominator over F_p
    """
    __slots__ = ("field", "num", "den")

    def __init__(self, field: RationalFunctionField, num: DensePoly,
                 den: Optional[DensePoly] = None):
        polynomials = field.polynomials
        if num.ring != polynomials:
            raise errors.BadArgument(
                _FOREIGN_VALUE.format(value=num, field=polynomials))
        if den is None:
            den = polynomials.one
        if not den.coeffs:
            raise errors.DivisionByZero(_ZERO_DENOMINATOR)
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, field: RationalFunctionField) -> "ClearedPoly":
        return cls(field, DensePoly._wrap(field.polynomials, ()))

    @classmethod
    def from_poly(cls, poly: DensePoly) -> "ClearedPoly":
        """Clear a polynomial over F_p(α) by the lcm of its coefficient
        denominators."""
        field = poly.ring
        base = field.base
        lcm: Coefficients = (1,)
        for value in poly.coeffs:
            den = value.den.coeffs
            if len(den) > 1 and den != lcm:
                common = base.poly_gcd(lcm, den)
                lcm = base.poly_mul(lcm, base.poly_divmod(den, common)[0])

        coeffs = []
        for value in poly.coeffs:
            cofactor = base.poly_divmod(lcm, value.den.coeffs)[0]
            coeffs.append(DensePoly._wrap(
                base, base.poly_mul(value.num.coeffs, cofactor)))
        return cls(field, DensePoly(field.polynomials, coeffs),
                   DensePoly._wrap(base, lcm))

    @property
    def ring(self) -> RationalFunctionField:
        """Coefficient field of the represented polynomial."""
        return self.field

    def to_poly(self) -> DensePoly:
        return DensePoly(self.field, [RatFunc(self.field, value, self.den)
                                      for value in self.num.coeffs])

    def is_zero(self) -> bool:
        return not self.num.coeffs

    @property
    def degree(self) -> int:
        return self.num.degree

    def coefficient(self, exponent: int) -> RatFunc:
        return RatFunc(self.field, self.num[exponent], self.den)

    def coefficient_at(self, position: Tuple[int, ...]) -> RatFunc:
        return self.coefficient(position[0])

    def lowest_position(self) -> Optional[Tuple[int]]:
        return self.num.lowest_position()

    def _operand(self, other) -> Optional["ClearedPoly"]:
        if isinstance(other, ClearedPoly):
            return other if other.field == self.field else None
        if isinstance(other, DensePoly):
            if other.ring == self.field.polynomials:
                return ClearedPoly(self.field, other)
            if other.ring == self.field:
                return ClearedPoly.from_poly(other)
        return None

    def __add__(self, other) -> "ClearedPoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        if self.den.coeffs == operand.den.coeffs:
            return ClearedPoly(self.field, self.num + operand.num, self.den)

        common = self.den.gcd(operand.den)
        left = operand.den.exact_div(common)
        right = self.den.exact_div(common)
        return ClearedPoly(self.field,
                           self.num.scale(left) + operand.num.scale(right),
                           self.den * left)

    __radd__ = __add__

    def __neg__(self) -> "ClearedPoly":
        return ClearedPoly(self.field, -self.num, self.den)

    def __sub__(self, other) -> "ClearedPoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __mul__(self, other) -> "ClearedPoly":
        operand = self._operand(other)
        if operand is None:
            return self.scale(other)
        return ClearedPoly(self.field, self.num * operand.num,
                           self.den * operand.den)

    __rmul__ = __mul__

    def scale(self, value: Union[int, DensePoly, RatFunc]) -> "ClearedPoly":
        """Multiply by a scalar of F_p(α)."""
        if isinstance(value, RatFunc):
            return ClearedPoly(self.field, self.num.scale(value.num),
                               self.den * value.den)
        return ClearedPoly(self.field, self.num.scale(value), self.den)

    def pow(self, exponent: int,
            ctx: Optional[polyring.QuotientContext] = None) -> "ClearedPoly":
        return ClearedPoly(self.field, self.num.pow(exponent, ctx),
                           self.den ** exponent)

    def reduce(self, ctx: polyring.QuotientContext) -> "ClearedPoly":
        return ClearedPoly(self.field, ctx.reduce(self.num), self.den)

    def theta(self) -> "ClearedPoly":
        return ClearedPoly(self.field, self.num.theta(), self.den)

    def compose(self, inner: "ClearedPoly",
                ctx: Optional[polyring.QuotientContext] = None
                ) -> "ClearedPoly":
        """Evaluate ``self(inner)``.

        With inner = N/D and degree n, Horner runs on the homogenized form
        Σ f_k N^k D^(n-k) so that no fraction appears until the final
        denominator den·D^n.
        """
        polynomials = self.field.polynomials
        degree = self.num.degree
        if degree < 0:
            return self

        scale = inner.den
        scale_powers = [polynomials.one]
        for _ in range(degree):
            scale_powers.append(scale_powers[-1] * scale)

        acc = DensePoly(polynomials, (self.num[degree],))
        for k in range(degree - 1, -1, -1):
            acc = (acc * inner.num).add_constant(
                self.num[k] * scale_powers[degree - k])
            if ctx is not None:
                acc = ctx.reduce(acc)
        return ClearedPoly(self.field, acc, self.den * scale_powers[degree])

    def scale_parameter(self, factor: int) -> "ClearedPoly":
        """Substitute α -> factor·α throughout.

        Raises:
            PoleError: The denominator vanishes identically.
        """
        den = self.den.scale_variable(factor)
        if not den.coeffs:
            raise errors.PoleError(_POLE_UNDER.format(
                inner=(0, factor), value=self.den))
        return ClearedPoly(self.field, DensePoly(
            self.field.polynomials,
            [value.scale_variable(factor) for value in self.num.coeffs]), den)

    def scale_variable(self, factor) -> "ClearedPoly":
        """Substitute X -> factor·X."""
        return ClearedPoly(self.field, self.num.scale_variable(factor),
                           self.den)

    def __repr__(self) -> str:
        return "ClearedPoly({num!r}, {den!r})".format(num=self.num,
                                                      den=self.den)


class BivariateFractionField(polyring.Ring):
    """The field F_p(α, β).

    Elements are :class:`BiFrac` values whose numerator and denominator are
    polynomials in β with coefficients in F_p[α] (``polynomials``).

    Attributes:
        base (:class:`~purepolylog.prime_field.PrimeField`): F_p
        alpha_ring (:class:`~purepolylog.polyring.PolynomialRing`): F_p[α]
        polynomials (:class:`~purepolylog.polyring.PolynomialRing`):
                    F_p[α][β]
        degree_guard (int): Largest total degree a fraction may reach
    """

    def __init__(self, base: prime_field.PrimeField,
                 degree_guard: Optional[int] = None):
        self.base = base
        self.alpha_ring = polyring.PolynomialRing(base, "a")
        self.polynomials = polyring.PolynomialRing(self.alpha_ring, "b")
        self.characteristic = base.p
        self.degree_guard = (config.degree_guard(base.p)
                             if degree_guard is None else degree_guard)
        logger.debug("F_%d(a, b) with degree guard %d", base.p,
                     self.degree_guard)
        self.zero = BiFrac._raw(self, self.polynomials.zero,
                                self.polynomials.one)
        self.one = BiFrac._raw(self, self.polynomials.one,
                               self.polynomials.one)

    @property
    def alpha(self) -> "BiFrac":
        return BiFrac._raw(self, self.from_alpha(DensePoly.variable(
            self.base)), self.polynomials.one)

    @property
    def beta(self) -> "BiFrac":
        return BiFrac._raw(self, self.polynomials.gen, self.polynomials.one)

    def from_alpha(self, poly: DensePoly) -> DensePoly:
        """A polynomial in α as an element of F_p[α][β]."""
        return DensePoly(self.alpha_ring, (poly,))

    def from_beta(self, poly: DensePoly) -> DensePoly:
        """A polynomial over F_p read in the variable β."""
        return DensePoly(self.alpha_ring, [
            DensePoly._wrap(self.base, (value,)) if value else
            self.alpha_ring.zero for value in poly.coeffs])

    def from_sum(self, poly: DensePoly) -> DensePoly:
        """A polynomial over F_p evaluated at α + β."""
        total = DensePoly(self.alpha_ring, (DensePoly.variable(self.base),
                                            self.alpha_ring.one))
        acc = self.polynomials.zero
        for value in reversed(poly.coeffs):
            acc = (acc * total).add_constant(self.alpha_ring.coerce(value))
        return acc

    def scale_parameters(self, poly: DensePoly, factor: int) -> DensePoly:
        """Substitute α -> factor·α and β -> factor·β in F_p[α][β]."""
        coeffs = []
        power = 1
        for value in poly.coeffs:
            coeffs.append(value.scale_variable(factor).scale(power))
            power = power * factor % self.base.p
        return DensePoly(self.alpha_ring, coeffs)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def coerce(self, value) -> "BiFrac":
        if isinstance(value, BiFrac):
            if value.field == self:
                return value
            raise errors.BadArgument(
                _FOREIGN_VALUE.format(value=value, field=self))
        return BiFrac(self, value)

    def inv(self, a) -> "BiFrac":
        return a.inverse()

    def exact_div(self, a, b) -> "BiFrac":
        return a / b

    def __eq__(self, other) -> bool:
        return (isinstance(other, BivariateFractionField)
                and other.base == self.base)

    def __hash__(self) -> int:
        return hash((BivariateFractionField, self.base))

    def __repr__(self) -> str:
        return "BivariateFractionField({base!r})".format(base=self.base)


def _lift(field: BivariateFractionField, value) -> DensePoly:
    if isinstance(value, DensePoly):
        if value.ring == field.alpha_ring:
            return value
        if value.ring == field.base:
            return field.from_alpha(value)
    if isinstance(value, int):
        return field.polynomials.coerce(value)
    raise TypeError(_FOREIGN_VALUE.format(value=value, field=field))


def _total_degree(poly: DensePoly) -> int:
    return max((j + value.degree for j, value in enumerate(poly.coeffs)
                if value.coeffs), default=-1)


def _content(base: prime_field.PrimeField, poly: DensePoly) -> Coefficients:
    acc: Coefficients = ()
    for value in poly.coeffs:
        acc = base.poly_gcd(acc, value.coeffs)
        if acc == (1,):
            break
    return acc


def _divide_content(field: BivariateFractionField, poly: DensePoly,
                    content: Coefficients) -> DensePoly:
    base = field.base
    return DensePoly(field.alpha_ring, [
        DensePoly._wrap(base, base.poly_divmod(value.coeffs, content)[0])
        for value in poly.coeffs])


class BiFrac(object):
    """An element num/den of F_p(α, β).

    No full bivariate gcd is taken. Instead the common α-content of
    numerator and denominator is divided out and the denominator's leading
    coefficient is scaled to 1. Equality is decided by cross-multiplication,
    so instances are deliberately unhashable.

    Raises:
        DivisionByZero: The denominator is zero.
        DegreeGuardExceeded: A total degree exceeds the field's guard.
    """
    __slots__ = ("field", "num", "den")
    __hash__ = None

    def __init__(self, field: BivariateFractionField, num, den=None):
        num = _lift(field, num)
        den = field.polynomials.one if den is None else _lift(field, den)
        if not den.coeffs:
            raise errors.DivisionByZero(_ZERO_DENOMINATOR)

        base = field.base
        if not num.coeffs:
            den = field.polynomials.one
        else:
            content = _content(base, den)
            if len(content) > 1:
                content = base.poly_gcd(content, _content(base, num))
            if len(content) > 1:
                num = _divide_content(field, num, content)
                den = _divide_content(field, den, content)
            lead = den.leading.leading
            if lead != 1:
                scale = DensePoly._wrap(base, (base.inv(lead),))
                num = num.scale(scale)
                den = den.scale(scale)

        degree = max(_total_degree(num), _total_degree(den))
        if degree > field.degree_guard:
            raise errors.DegreeGuardExceeded(_DEGREE_GUARD.format(
                degree=degree, guard=field.degree_guard, p=base.p,
                env=config.DEGREE_GUARD_FACTOR_ENV))

        self.field = field
        self.num: DensePoly = num
        self.den: DensePoly = den

    @classmethod
    def _raw(cls, field: BivariateFractionField, num: DensePoly,
             den: DensePoly) -> "BiFrac":
        value = cls.__new__(cls)
        value.field = field
        value.num = num
        value.den = den
        return value

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def _operand(self, other) -> Optional["BiFrac"]:
        try:
            return self.field.coerce(other)
        except (TypeError, errors.BadArgument):
            return None

    def __eq__(self, other) -> bool:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self.num * operand.den == operand.num * self.den

    def __add__(self, other) -> "BiFrac":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        if self.den == operand.den:
            return BiFrac(self.field, self.num + operand.num, self.den)
        return BiFrac(self.field,
                      self.num * operand.den + operand.num * self.den,
                      self.den * operand.den)

    __radd__ = __add__

    def __neg__(self) -> "BiFrac":
        return BiFrac._raw(self.field, -self.num, self.den)

    def __sub__(self, other) -> "BiFrac":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __rsub__(self, other) -> "BiFrac":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return operand + (-self)

    def __mul__(self, other) -> "BiFrac":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return BiFrac(self.field, self.num * operand.num,
                      self.den * operand.den)

    __rmul__ = __mul__

    def inverse(self) -> "BiFrac":
        if self.is_zero():
            raise errors.DivisionByZero(_ZERO_INVERSE)
        return BiFrac(self.field, self.den, self.num)

    def __truediv__(self, other) -> "BiFrac":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self * operand.inverse()

    def __pow__(self, exponent: int) -> "BiFrac":
        if exponent < 0:
            return self.inverse() ** -exponent
        return BiFrac(self.field, self.num ** exponent, self.den ** exponent)

    def scale_variables(self, factor: int) -> "BiFrac":
        """Substitute α -> factor·α and β -> factor·β.

        Raises:
            PoleError: The denominator vanishes under the substitution.
        """
        den = self.field.scale_parameters(self.den, factor)
        if not den.coeffs:
            raise errors.PoleError(_POLE_UNDER.format(
                inner=(0, factor), value=self))
        return BiFrac(self.field,
                      self.field.scale_parameters(self.num, factor), den)

    def __repr__(self) -> str:
        return "BiFrac({num!r}, {den!r})".format(num=self.num, den=self.den)


@functools.lru_cache(maxsize=None)
def bivariate_fractions(p: int) -> BivariateFractionField:
    """The shared F_p(α, β) for p."""
    return BivariateFractionField(prime_field.get_field(p))
