# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

import abc
from typing import Any
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from purepolylog import errors

Coefficients = Tuple[Any, ...]


class Ring(abc.ABC):
    """A commutative coefficient ring.

    Subclasses supply element arithmetic. The ``poly_*`` kernels operate on
    coefficient tuples (index = exponent) and always return canonical tuples
    with trailing zeros removed. The generic kernels here work for any ring;
    :class:`~purepolylog.prime_field.PrimeField` overrides them with int-list
    code.

    Attributes:
        characteristic (int): The characteristic p of the ring
        zero: The additive identity
        one: The multiplicative identity
    """
    _NOT_INVERTIBLE: Final = "{value!r} is not invertible in {ring!r}"
    _ZERO_DIVISOR: Final = "Division by the zero polynomial"

    characteristic: int
    zero: Any
    one: Any

    @abc.abstractmethod
    def add(self, a, b):
        """Return a + b."""

    @abc.abstractmethod
    def sub(self, a, b):
        """Return a - b."""

    @abc.abstractmethod
    def mul(self, a, b):
        """Return a * b."""

    @abc.abstractmethod
    def neg(self, a):
        """Return -a."""

    @abc.abstractmethod
    def is_zero(self, a) -> bool:
        """Return True if a is the zero element."""

    @abc.abstractmethod
    def coerce(self, value):
        """Convert an int or an element of a sub-ring into this ring.

        Raises:
            TypeError: The value has no image in this ring.
            BadArgument: The value belongs to an incompatible ring.
        """

    @abc.abstractmethod
    def exact_div(self, a, b):
        """Return q with q * b = a.

        Raises:
            InexactDivision: No such q exists.
            DivisionByZero: b is zero.
        """

    def inv(self, a):
        """Multiplicative inverse. Rings that are not fields only invert units.
        """
        raise errors.BadArgument(
            self._NOT_INVERTIBLE.format(value=a, ring=self))

    def power(self, a, exponent: int):
        """Square-and-multiply power; negative exponents invert first."""
        if exponent < 0:
            a = self.inv(a)
            exponent = -exponent

        result = self.one
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            exponent >>= 1
            if exponent:
                a = self.mul(a, a)
        return result

    def poly_trim(self, coeffs: List) -> Coefficients:
        while coeffs and self.is_zero(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def poly_canonical(self, coeffs: Sequence) -> Coefficients:
        return self.poly_trim([self.coerce(c) for c in coeffs])

    def poly_add(self, a: Coefficients, b: Coefficients) -> Coefficients:
        if len(a) < len(b):
            a, b = b, a
        out = [self.add(x, y) for x, y in zip(a, b)]
        out.extend(a[len(b):])
        return self.poly_trim(out)

    def poly_neg(self, a: Coefficients) -> Coefficients:
        return tuple(self.neg(x) for x in a)

    def poly_sub(self, a: Coefficients, b: Coefficients) -> Coefficients:
        return self.poly_add(a, self.poly_neg(b))

    def poly_scale(self, a: Coefficients, c) -> Coefficients:
        if self.is_zero(c):
            return ()
        return self.poly_trim([self.mul(x, c) for x in a])

    def poly_mul(self, a: Coefficients, b: Coefficients) -> Coefficients:
        if not a or not b:
            return ()

        terms_b = [(j, y) for j, y in enumerate(b) if not self.is_zero(y)]
        out = [self.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if self.is_zero(x):
                continue
            for j, y in terms_b:
                out[i + j] = self.add(out[i + j], self.mul(x, y))
        return self.poly_trim(out)

    def poly_divmod(self, a: Coefficients, b: Coefficients
                    ) -> Tuple[Coefficients, Coefficients]:
        """Long division. Each quotient coefficient comes from
        :meth:`exact_div` of a leading coefficient, so over a ring that is not
        a field the division raises when a leading coefficient does not
        divide.
        """
        if not b:
            raise errors.DivisionByZero(self._ZERO_DIVISOR)

        width = len(b)
        if len(a) < width:
            return (), tuple(a)

        lead = b[-1]
        rem = list(a)
        quot = [self.zero] * (len(a) - width + 1)
        for i in range(len(a) - width, -1, -1):
            top = rem[i + width - 1]
            if self.is_zero(top):
                continue
            q = self.exact_div(top, lead)
            quot[i] = q
            for j, y in enumerate(b):
                rem[i + j] = self.sub(rem[i + j], self.mul(q, y))
        return self.poly_trim(quot), self.poly_trim(rem[:width - 1])

    def poly_monic(self, a: Coefficients) -> Coefficients:
        if not a:
            return ()
        inverse = self.inv(a[-1])
        return tuple(self.mul(x, inverse) for x in a)

    def poly_gcd(self, a: Coefficients, b: Coefficients) -> Coefficients:
        """Monic gcd by Euclid's algorithm. Only meaningful over a field."""
        while b:
            a, b = b, self.poly_divmod(a, b)[1]
        return self.poly_monic(a)


class PolynomialRing(Ring):
    """Polynomials over ``base`` in a single named variable, used as a
    coefficient ring in its own right (F_p[α], F_p[α][β], ...).

    Elements are :class:`DensePoly` instances whose ring is ``base``.

    Attributes:
        base (:class:`Ring`): The coefficient ring of the elements
        variable (str): Plain-text name of the variable, used by rendering
    """
    _WRONG_RING: Final = ("{value!r} is a polynomial over {found!r}; expected "
                          "coefficients in {expected!r}")

    def __init__(self, base: Ring, variable: str = "a"):
        self.base = base
        self.variable = variable
        self.characteristic = base.characteristic
        self.zero = DensePoly._wrap(base, ())
        self.one = DensePoly._wrap(base, (base.one,))

    @property
    def gen(self) -> "DensePoly":
        """The variable itself, as an element."""
        return DensePoly._wrap(self.base, (self.base.zero, self.base.one))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a.coeffs

    def coerce(self, value):
        if isinstance(value, DensePoly):
            if value.ring == self.base:
                return value
            raise errors.BadArgument(self._WRONG_RING.format(
                value=value, found=value.ring, expected=self.base))
        return DensePoly.constant(self.base, self.base.coerce(value))

    def exact_div(self, a, b):
        return a.exact_div(b)

    def inv(self, a):
        if len(a.coeffs) == 1:
            return DensePoly._wrap(self.base, (self.base.inv(a.coeffs[0]),))
        return super().inv(a)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolynomialRing)
                and self.variable == other.variable
                and self.base == other.base)

    def __hash__(self) -> int:
        return hash((PolynomialRing, self.variable, self.base))

    def __repr__(self) -> str:
        return "PolynomialRing({base!r}, {variable!r})".format(
            base=self.base, variable=self.variable)


class DensePoly(object):
    """A dense univariate polynomial over a :class:`Ring`.

    ``coeffs[k]`` is the coefficient of the k-th power. The tuple is always
    canonical: the last entry is nonzero, and the zero polynomial is the
    empty tuple. Instances are immutable.

    Arithmetic operators accept another polynomial over the same ring, or a
    scalar that the ring can :meth:`~Ring.coerce` (ints, ring elements).

    Attributes:
        ring (:class:`Ring`): The coefficient ring
        coeffs (tuple): Canonical coefficients in ascending order
    """
    __slots__ = ("ring", "coeffs")

    _NEGATIVE_EXPONENT: Final = "Exponent must be nonnegative, got {exponent}"
    _NONZERO_CONSTANT: Final = ("reverse_scale requires a zero constant term; "
                                "the result would not be a polynomial")
    _DEGREE_TOO_HIGH: Final = ("reverse_scale requires degree at most "
                               "{bound}, got {degree}")
    _RING_MISMATCH: Final = ("Polynomials over {left!r} and {right!r} do "
                             "not mix")

    def __init__(self, ring: Ring, coeffs: Sequence = ()):
        self.ring = ring
        self.coeffs: Coefficients = ring.poly_canonical(coeffs)

    @classmethod
    def _wrap(cls, ring: Ring, coeffs: Coefficients) -> "DensePoly":
        # Trusted constructor for tuples that are already canonical.
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.coeffs = coeffs
        return poly

    @classmethod
    def constant(cls, ring: Ring, value) -> "DensePoly":
        return cls(ring, (value,))

    @classmethod
    def monomial(cls, ring: Ring, exponent: int, value=None) -> "DensePoly":
        value = ring.one if value is None else value
        return cls(ring, (ring.zero,) * exponent + (value,))

    @classmethod
    def variable(cls, ring: Ring) -> "DensePoly":
        return cls._wrap(ring, (ring.zero, ring.one))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, exponent: int):
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return self.ring.zero

    def terms(self) -> Iterator[Tuple[int, Any]]:
        """Yield (exponent, coefficient) for every nonzero coefficient."""
        for exponent, value in enumerate(self.coeffs):
            if not self.ring.is_zero(value):
                yield exponent, value

    def lowest_position(self) -> Optional[Tuple[int]]:
        for exponent, _ in self.terms():
            return (exponent,)
        return None

    def coefficient_at(self, position: Tuple[int, ...]):
        return self[position[0]]

    def _operand(self, other) -> Optional["DensePoly"]:
        if isinstance(other, DensePoly) and other.ring == self.ring:
            return other
        try:
            value = self.ring.coerce(other)
        except (TypeError, errors.BadArgument):
            return None
        if self.ring.is_zero(value):
            return DensePoly._wrap(self.ring, ())
        return DensePoly._wrap(self.ring, (value,))

    def __eq__(self, other) -> bool:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self.coeffs == operand.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __add__(self, other) -> "DensePoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return DensePoly._wrap(
            self.ring, self.ring.poly_add(self.coeffs, operand.coeffs))

    __radd__ = __add__

    def __sub__(self, other) -> "DensePoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return DensePoly._wrap(
            self.ring, self.ring.poly_sub(self.coeffs, operand.coeffs))

    def __rsub__(self, other) -> "DensePoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return DensePoly._wrap(
            self.ring, self.ring.poly_sub(operand.coeffs, self.coeffs))

    def __neg__(self) -> "DensePoly":
        return DensePoly._wrap(self.ring, self.ring.poly_neg(self.coeffs))

    def __mul__(self, other) -> "DensePoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return DensePoly._wrap(
            self.ring, self.ring.poly_mul(self.coeffs, operand.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DensePoly":
        return self.pow(exponent)

    def scale(self, value) -> "DensePoly":
        """Multiply every coefficient by a scalar of the coefficient ring."""
        value = self.ring.coerce(value)
        return DensePoly._wrap(self.ring,
                               self.ring.poly_scale(self.coeffs, value))

    def add_constant(self, value) -> "DensePoly":
        value = self.ring.coerce(value)
        if not self.coeffs:
            return DensePoly(self.ring, (value,))
        head = self.ring.add(self.coeffs[0], value)
        return DensePoly._wrap(
            self.ring, self.ring.poly_trim([head] + list(self.coeffs[1:])))

    def pow(self, exponent: int,
            ctx: Optional["QuotientContext"] = None) -> "DensePoly":
        """Power by repeated squaring, reducing by ``ctx`` after every product
        when one is given.

        Raises:
            BadArgument: Negative exponent.
        """
        if exponent < 0:
            raise errors.BadArgument(
                self._NEGATIVE_EXPONENT.format(exponent=exponent))

        result = DensePoly._wrap(self.ring, (self.ring.one,))
        base = self if ctx is None else ctx.reduce(self)
        while exponent:
            if exponent & 1:
                result = result * base
                if ctx is not None:
                    result = ctx.reduce(result)
            exponent >>= 1
            if exponent:
                base = base * base
                if ctx is not None:
                    base = ctx.reduce(base)
        return result

    def divmod(self, other) -> Tuple["DensePoly", "DensePoly"]:
        operand = self._require(other)
        quot, rem = self.ring.poly_divmod(self.coeffs, operand.coeffs)
        return (DensePoly._wrap(self.ring, quot),
                DensePoly._wrap(self.ring, rem))

    def exact_div(self, other) -> "DensePoly":
        """Return the quotient of an exact division.

        Raises:
            InexactDivision: The division leaves a remainder.
        """
        quot, rem = self.divmod(other)
        if rem.coeffs:
            raise errors.InexactDivision(
                "{left!r} is not divisible by {right!r}".format(
                    left=self, right=other))
        return quot

    def gcd(self, other) -> "DensePoly":
        operand = self._require(other)
        return DensePoly._wrap(
            self.ring, self.ring.poly_gcd(self.coeffs, operand.coeffs))

    def monic(self) -> "DensePoly":
        return DensePoly._wrap(self.ring, self.ring.poly_monic(self.coeffs))

    def __call__(self, point):
        """Evaluate at a ring element by Horner's scheme."""
        ring = self.ring
        point = ring.coerce(point)
        acc = ring.zero
        for value in reversed(self.coeffs):
            acc = ring.add(ring.mul(acc, point), value)
        return acc

    def derivative(self) -> "DensePoly":
        ring = self.ring
        return DensePoly._wrap(ring, ring.poly_trim(
            [ring.mul(ring.coerce(k), value)
             for k, value in enumerate(self.coeffs)][1:]))

    def theta(self) -> "DensePoly":
        """The operator X·d/dX: the k-th coefficient is multiplied by k."""
        ring = self.ring
        return DensePoly._wrap(ring, ring.poly_trim(
            [ring.mul(ring.coerce(k), value)
             for k, value in enumerate(self.coeffs)]))

    def scale_variable(self, factor) -> "DensePoly":
        """Substitute X -> factor·X."""
        ring = self.ring
        factor = ring.coerce(factor)
        power = ring.one
        out = []
        for value in self.coeffs:
            out.append(ring.mul(value, power))
            power = ring.mul(power, factor)
        return DensePoly._wrap(ring, ring.poly_trim(out))

    def reduce(self, ctx: "QuotientContext") -> "DensePoly":
        return ctx.reduce(self)

    def compose(self, inner,
                ctx: Optional["QuotientContext"] = None) -> "DensePoly":
        """Evaluate ``self(inner)`` by Horner's scheme.

        When ``ctx`` is supplied every Horner step is reduced, which keeps
        intermediate degrees below twice the modulus degree.
        """
        inner = self._require(inner)
        if not self.coeffs:
            return self

        acc = DensePoly._wrap(self.ring, (self.coeffs[-1],))
        for value in reversed(self.coeffs[:-1]):
            acc = (acc * inner).add_constant(value)
            if ctx is not None:
                acc = ctx.reduce(acc)
        return acc

    def reverse_scale(self, factor, exponent: Optional[int] = None
                      ) -> "DensePoly":
        """Return X^n·f(factor/X) = Σ f_k factor^k X^(n-k).

        ``n`` defaults to the characteristic of the coefficient ring.

        Raises:
            BadArgument: The constant term is nonzero or the degree exceeds
                         n - 1.
        """
        ring = self.ring
        bound = ring.characteristic if exponent is None else exponent
        if self.coeffs and not ring.is_zero(self.coeffs[0]):
            raise errors.BadArgument(self._NONZERO_CONSTANT)
        if self.degree > bound - 1:
            raise errors.BadArgument(self._DEGREE_TOO_HIGH.format(
                bound=bound - 1, degree=self.degree))

        factor = ring.coerce(factor)
        out = [ring.zero] * (bound + 1)
        power = ring.one
        for k in range(1, len(self.coeffs)):
            power = ring.mul(power, factor)
            out[bound - k] = ring.mul(self.coeffs[k], power)
        return DensePoly._wrap(ring, ring.poly_trim(out))

    def _require(self, other) -> "DensePoly":
        operand = self._operand(other)
        if operand is None:
            raise errors.BadArgument(self._RING_MISMATCH.format(
                left=self.ring, right=getattr(other, "ring", other)))
        return operand

    def __repr__(self) -> str:
        return "DensePoly({ring!r}, {coeffs!r})".format(ring=self.ring,
                                                        coeffs=self.coeffs)


class QuotientContext(abc.ABC):
    """Reduction of polynomials modulo a fixed monic modulus.

    Attributes:
        ring (:class:`Ring`): Coefficient ring of the polynomials reduced
    """
    _RING_MISMATCH: Final = ("Cannot reduce a polynomial over {found!r} in a "
                             "quotient over {expected!r}")

    def __init__(self, ring: Ring):
        self.ring = ring

    @property
    @abc.abstractmethod
    def degree(self) -> int:
        """Degree of the modulus; reduced representatives have lower degree.
        """

    @property
    @abc.abstractmethod
    def modulus(self) -> DensePoly:
        """The modulus as a polynomial."""

    @abc.abstractmethod
    def reduce(self, poly: DensePoly) -> DensePoly:
        """Return the canonical representative of ``poly``."""

    def _check(self, poly: DensePoly) -> None:
        if poly.ring != self.ring:
            raise errors.BadArgument(self._RING_MISMATCH.format(
                found=poly.ring, expected=self.ring))


class PowerModulus(QuotientContext):
    """The quotient by X^n - c with c free of X.

    Reduction replaces X^(qn+r) by c^q X^r. It folds blocks of n
    coefficients from the top down, Horner style, so each block costs one
    scalar multiplication per coefficient.

    Attributes:
        constant: The constant c
        exponent (int): The exponent n; defaults to the characteristic p
    """
    _BAD_EXPONENT: Final = "The modulus exponent must be positive, got {n}"

    def __init__(self, ring: Ring, constant, exponent: Optional[int] = None):
        super().__init__(ring)
        self.constant = ring.coerce(constant)
        self.exponent = ring.characteristic if exponent is None else exponent
        if self.exponent < 1:
            raise errors.BadArgument(
                self._BAD_EXPONENT.format(n=self.exponent))

    @property
    def degree(self) -> int:
        return self.exponent

    @property
    def modulus(self) -> DensePoly:
        return (DensePoly.monomial(self.ring, self.exponent)
                - DensePoly.constant(self.ring, self.constant))

    def reduce(self, poly: DensePoly) -> DensePoly:
        self._check(poly)
        coeffs = poly.coeffs
        n = self.exponent
        if len(coeffs) <= n:
            return poly

        ring = self.ring
        if ring.is_zero(self.constant):
            return DensePoly._wrap(ring, ring.poly_trim(list(coeffs[:n])))

        blocks = [coeffs[i:i + n] for i in range(0, len(coeffs), n)]
        acc = blocks[-1]
        for block in reversed(blocks[:-1]):
            acc = ring.poly_add(ring.poly_scale(acc, self.constant), block)
        return DensePoly._wrap(ring, acc)


class MonicModulus(QuotientContext):
    """The quotient by an arbitrary monic polynomial of positive degree."""
    _NOT_MONIC: Final = "The modulus must be monic of positive degree: {m!r}"

    def __init__(self, modulus: DensePoly):
        super().__init__(modulus.ring)
        ring = modulus.ring
        if (modulus.degree < 1
                or not ring.is_zero(ring.sub(modulus.leading, ring.one))):
            raise errors.BadArgument(self._NOT_MONIC.format(m=modulus))
        self._modulus = modulus

    @property
    def degree(self) -> int:
        return self._modulus.degree

    @property
    def modulus(self) -> DensePoly:
        return self._modulus

    def reduce(self, poly: DensePoly) -> DensePoly:
        self._check(poly)
        if poly.degree < self.degree:
            return poly
        return poly.divmod(self._modulus)[1]


class BivariatePoly(object):
    """A polynomial in X and Y over a :class:`Ring`.

    ``rows[i][j]`` is the coefficient of X^i Y^j. Each row is a canonical
    coefficient tuple and trailing empty rows are dropped, so the zero
    polynomial has no rows.

    Attributes:
        ring (:class:`Ring`): The coefficient ring
        rows (tuple): Canonical rows indexed by the exponent of X
    """
    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence] = ()):
        self.ring = ring
        self.rows = self._trim_rows([ring.poly_canonical(row) for row in rows])

    @staticmethod
    def _trim_rows(rows: List[Coefficients]) -> Tuple[Coefficients, ...]:
        while rows and not rows[-1]:
            rows.pop()
        return tuple(rows)

    @classmethod
    def _wrap(cls, ring: Ring, rows: List[Coefficients]) -> "BivariatePoly":
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.rows = cls._trim_rows(rows)
        return poly

    @classmethod
    def from_x(cls, poly: DensePoly) -> "BivariatePoly":
        """Embed a polynomial in X."""
        return cls._wrap(poly.ring, [(value,) if not poly.ring.is_zero(value)
                                     else () for value in poly.coeffs])

    @classmethod
    def from_y(cls, poly: DensePoly) -> "BivariatePoly":
        """Embed a polynomial in Y."""
        return cls._wrap(poly.ring, [poly.coeffs])

    @classmethod
    def monomial(cls, ring: Ring, i: int, j: int,
                 value=None) -> "BivariatePoly":
        value = ring.one if value is None else ring.coerce(value)
        rows: List[Coefficients] = [()] * i
        rows.append(ring.poly_trim([ring.zero] * j + [value]))
        return cls._wrap(ring, rows)

    @classmethod
    def substitute_sum(cls, poly: DensePoly) -> "BivariatePoly":
        """Expand f(X + Y) for a univariate f."""
        ring = poly.ring
        size = len(poly.coeffs)
        grid = [[ring.zero] * size for _ in range(size)]
        binomials = [1]
        for k, value in enumerate(poly.coeffs):
            if k:
                binomials = ([1] + [binomials[i - 1] + binomials[i]
                                    for i in range(1, k)] + [1])
            if ring.is_zero(value):
                continue
            for i in range(k + 1):
                term = ring.mul(value, ring.coerce(binomials[i]))
                grid[i][k - i] = ring.add(grid[i][k - i], term)
        return cls._wrap(ring, [ring.poly_trim(row) for row in grid])

    def terms(self) -> Iterator[Tuple[int, int, Any]]:
        """Yield (i, j, coefficient) for every nonzero coefficient."""
        for i, row in enumerate(self.rows):
            for j, value in enumerate(row):
                if not self.ring.is_zero(value):
                    yield i, j, value

    def coefficient(self, i: int, j: int):
        if i < len(self.rows) and j < len(self.rows[i]):
            return self.rows[i][j]
        return self.ring.zero

    def coefficient_at(self, position: Tuple[int, ...]):
        return self.coefficient(position[0], position[1])

    def lowest_position(self) -> Optional[Tuple[int, int]]:
        """Position of the nonzero term of lowest total degree, ties broken by
        the exponent of X.
        """
        positions = [(i + j, i, j) for i, j, _ in self.terms()]
        if not positions:
            return None
        _, i, j = min(positions)
        return i, j

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def degree_x(self) -> int:
        return len(self.rows) - 1

    @property
    def degree_y(self) -> int:
        return max((len(row) for row in self.rows), default=0) - 1

    def _operand(self, other) -> Optional["BivariatePoly"]:
        if isinstance(other, BivariatePoly) and other.ring == self.ring:
            return other
        return None

    def __eq__(self, other) -> bool:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return (self - operand).is_zero()

    __hash__ = None

    def __add__(self, other) -> "BivariatePoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        ring = self.ring
        a, b = self.rows, operand.rows
        if len(a) < len(b):
            a, b = b, a
        rows = [ring.poly_add(x, y) for x, y in zip(a, b)]
        rows.extend(a[len(b):])
        return BivariatePoly._wrap(ring, rows)

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly._wrap(
            self.ring, [self.ring.poly_neg(row) for row in self.rows])

    def __sub__(self, other) -> "BivariatePoly":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __mul__(self, other) -> "BivariatePoly":
        operand = self._operand(other)
        if operand is None:
            try:
                return self.scale(other)
            except (TypeError, errors.BadArgument):
                return NotImplemented

        ring = self.ring
        right = list(operand.terms())
        if self.is_zero() or not right:
            return BivariatePoly._wrap(ring, [])

        width = self.degree_y + operand.degree_y + 1
        grid = [[ring.zero] * width
                for _ in range(self.degree_x + operand.degree_x + 1)]
        for i, j, x in self.terms():
            for k, m, y in right:
                grid[i + k][j + m] = ring.add(grid[i + k][j + m],
                                              ring.mul(x, y))
        return BivariatePoly._wrap(ring, [ring.poly_trim(row) for row in grid])

    __rmul__ = __mul__

    def scale(self, value) -> "BivariatePoly":
        value = self.ring.coerce(value)
        return BivariatePoly._wrap(
            self.ring, [self.ring.poly_scale(row, value) for row in self.rows])

    def reduce(self, ctx: "BivariateModulus") -> "BivariatePoly":
        return ctx.reduce(self)

    def __repr__(self) -> str:
        return "BivariatePoly({ring!r}, {rows!r})".format(ring=self.ring,
                                                          rows=self.rows)


class BivariateModulus(object):
    """Simultaneous reduction by X^n - u and Y^n - v, with u and v free of X
    and Y.

    Each modulus is monic in its own variable and its tail avoids that
    variable, so the two substitutions commute and are applied one after the
    other.

    Attributes:
        ring (:class:`Ring`): Coefficient ring
        u: Replacement for X^n
        v: Replacement for Y^n
        exponent (int): n; defaults to the characteristic p
    """

    def __init__(self, ring: Ring, u, v, exponent: Optional[int] = None):
        self.ring = ring
        self.u = ring.coerce(u)
        self.v = ring.coerce(v)
        self.exponent = ring.characteristic if exponent is None else exponent

    def _fold(self, coeffs: Coefficients, constant) -> Coefficients:
        n = self.exponent
        if len(coeffs) <= n:
            return coeffs
        ring = self.ring
        blocks = [coeffs[i:i + n] for i in range(0, len(coeffs), n)]
        acc = blocks[-1]
        for block in reversed(blocks[:-1]):
            acc = ring.poly_add(ring.poly_scale(acc, constant), block)
        return acc

    def reduce(self, poly: BivariatePoly) -> BivariatePoly:
        ring = self.ring
        n = self.exponent
        rows = list(poly.rows)

        # X^n -> u, folding whole rows
        if len(rows) > n:
            blocks = [rows[i:i + n] for i in range(0, len(rows), n)]
            acc = list(blocks[-1]) + [()] * (n - len(blocks[-1]))
            for block in reversed(blocks[:-1]):
                acc = [ring.poly_add(ring.poly_scale(high, self.u), low)
                       for high, low in zip(acc, block)]
            rows = acc

        # Y^n -> v, within each row
        return BivariatePoly._wrap(ring,
                                   [self._fold(row, self.v) for row in rows])
