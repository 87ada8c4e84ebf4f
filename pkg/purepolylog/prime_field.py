# Python 3.7 and 3.8 support
try:
    from typing import Final  # pragma: no cover
except ImportError:  # pragma: no cover
    from typing_extensions import Final  # pragma: no cover

import functools
import operator
from typing import List
from typing import Optional
from typing import Tuple

from purepolylog import config
from purepolylog import errors
from purepolylog import polyring

_ABOVE_MAX_PRIME: Final = ("p={p} exceeds the configured maximum of {bound}. "
                           "Raise it with the {env} environment variable.")

Coefficients = Tuple[int, ...]


def is_odd_prime(n) -> bool:
    """Trial division primality test for the small primes this library
    handles."""
    if isinstance(n, bool) or not isinstance(n, int):
        return False
    if n < 3 or n % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


@functools.lru_cache(maxsize=None)
def _stirling_table(p: int) -> Tuple[Tuple[int, ...], ...]:
    # Unsigned Stirling numbers of the first kind reduced mod p,
    # s(n+1, k) = n·s(n, k) + s(n, k-1).
    rows: List[List[int]] = [[1] + [0] * (p - 1)]
    for n in range(p - 1):
        previous = rows[-1]
        rows.append([(n * previous[k] + (previous[k - 1] if k else 0)) % p
                     for k in range(p)])
    return tuple(tuple(row) for row in rows)


class PrimeField(polyring.Ring):
    """The prime field F_p.

    Elements are plain ``int`` residues in ``[0, p)``; the prime travels with
    the field rather than with each element. Besides field arithmetic the
    class carries the number-theoretic helpers the polylogarithm builders
    consume, and int-list kernels for F_p[X] that replace the generic
    :class:`~purepolylog.polyring.Ring` ones.

    Products of short polynomials use schoolbook multiplication with one
    modular reduction per output coefficient. Once both operands reach the
    Kronecker threshold the coefficients are packed into a single integer,
    multiplied natively and unpacked again.

    Attributes:
        p (int): The prime
        characteristic (int): Same as ``p``

    Raises:
        BadArgument: p is not an odd prime.
    """
    _NOT_AN_ODD_PRIME: Final = "{p} is not an odd prime"
    _NO_INVERSE: Final = "0 has no inverse in F_{p}"
    _OUT_OF_RANGE: Final = "{name}={value} is outside {low}..{high} for p={p}"
    _NEGATIVE: Final = "{name}={value} must be nonnegative"
    _UNSUPPORTED_ORDER: Final = ("No element of order {h} exists in F_{p}: "
                                 "{h} does not divide {order}. Extension "
                                 "fields are not supported.")

    def __init__(self, p: int, kronecker_threshold: Optional[int] = None):
        if not is_odd_prime(p):
            raise errors.BadArgument(self._NOT_AN_ODD_PRIME.format(p=p))

        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1
        self.kronecker_threshold = (config.kronecker_threshold()
                                    if kronecker_threshold is None
                                    else kronecker_threshold)

        factorials = [1]
        for n in range(1, p):
            factorials.append(factorials[-1] * n % p)
        self._factorials: Tuple[int, ...] = tuple(factorials)

    # Element arithmetic

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def is_zero(self, a: int) -> bool:
        return a == 0

    def coerce(self, value) -> int:
        return operator.index(value) % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse by Fermat's little theorem.

        Raises:
            DivisionByZero: a ≡ 0 (mod p).
        """
        a %= self.p
        if not a:
            raise errors.DivisionByZero(self._NO_INVERSE.format(p=self.p))
        return pow(a, self.p - 2, self.p)

    def exact_div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def power(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return pow(self.inv(a), -exponent, self.p)
        return pow(a % self.p, exponent, self.p)

    # Number theory

    def factorial(self, n: int) -> int:
        """n! mod p for 0 <= n < p.

        Raises:
            BadArgument: n is out of range.
        """
        if not 0 <= n < self.p:
            raise errors.BadArgument(self._OUT_OF_RANGE.format(
                name="n", value=n, low=0, high=self.p - 1, p=self.p))
        return self._factorials[n]

    def binomial(self, n: int, k: int) -> int:
        """C(n, k) mod p for nonnegative n and k, digit by digit (Lucas).

        Raises:
            BadArgument: n or k is negative.
        """
        for name, value in (("n", n), ("k", k)):
            if value < 0:
                raise errors.BadArgument(
                    self._NEGATIVE.format(name=name, value=value))

        p = self.p
        result = 1
        while n or k:
            n, top = divmod(n, p)
            k, bottom = divmod(k, p)
            if bottom > top:
                return 0
            result = (result * self._factorials[top]
                      * self.inv(self._factorials[bottom]
                                 * self._factorials[top - bottom])) % p
        return result

    def carry_valuation(self, k: int, a: int) -> int:
        """The p-adic valuation e(k, a) of C(a, a)·C(2a, a)···C(ka, a).

        By Kummer, C(sa, a) picks up a factor p exactly when adding a to
        (s - 1)·a carries in base p, i.e. when (s - 1)·a mod p >= p - a.

        Raises:
            BadArgument: k or a outside 1..p-1.
        """
        p = self.p
        for name, value in (("k", k), ("a", a)):
            if not 1 <= value <= p - 1:
                raise errors.BadArgument(self._OUT_OF_RANGE.format(
                    name=name, value=value, low=1, high=p - 1, p=p))

        return sum(1 for s in range(1, k + 1) if (s - 1) * a % p >= p - a)

    def stirling1(self, n: int, k: int) -> int:
        """Unsigned Stirling number of the first kind, mod p.

        Raises:
            BadArgument: n or k outside 0..p-1.
        """
        for name, value in (("n", n), ("k", k)):
            if not 0 <= value <= self.p - 1:
                raise errors.BadArgument(self._OUT_OF_RANGE.format(
                    name=name, value=value, low=0, high=self.p - 1, p=self.p))
        return _stirling_table(self.p)[n][k]

    def primitive_root(self) -> int:
        """The smallest generator of the multiplicative group."""
        p = self.p
        order = p - 1
        factors = [q for q in range(2, order + 1)
                   if order % q == 0 and (q == 2 or is_odd_prime(q))]
        for candidate in range(2, p):
            if all(pow(candidate, order // q, p) != 1 for q in factors):
                return candidate
        raise errors.InternalInconsistency(
            "F_{p} has no primitive root".format(p=p))

    def root_of_unity(self, h: int) -> int:
        """An element of exact multiplicative order h.

        Raises:
            BadArgument: h < 1.
            UnsupportedOrder: h does not divide p - 1.
        """
        if h < 1:
            raise errors.BadArgument(self._NEGATIVE.format(name="h", value=h))
        if (self.p - 1) % h:
            raise errors.UnsupportedOrder(self._UNSUPPORTED_ORDER.format(
                h=h, p=self.p, order=self.p - 1))
        return pow(self.primitive_root(), (self.p - 1) // h, self.p)

    # Polynomial kernels on canonical int tuples

    def poly_trim(self, coeffs: List[int]) -> Coefficients:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        return tuple(coeffs)

    def poly_canonical(self, coeffs) -> Coefficients:
        p = self.p
        return self.poly_trim([operator.index(c) % p for c in coeffs])

    def poly_add(self, a: Coefficients, b: Coefficients) -> Coefficients:
        p = self.p
        if len(a) < len(b):
            a, b = b, a
        out = [(x + y) % p for x, y in zip(a, b)]
        out.extend(a[len(b):])
        return self.poly_trim(out)

    def poly_neg(self, a: Coefficients) -> Coefficients:
        p = self.p
        return tuple(-x % p for x in a)

    def poly_sub(self, a: Coefficients, b: Coefficients) -> Coefficients:
        p = self.p
        if len(a) >= len(b):
            out = [(x - y) % p for x, y in zip(a, b)]
            out.extend(a[len(b):])
        else:
            out = [(x - y) % p for x, y in zip(a, b)]
            out.extend(-y % p for y in b[len(a):])
        return self.poly_trim(out)

    def poly_scale(self, a: Coefficients, c: int) -> Coefficients:
        p = self.p
        c %= p
        if not c:
            return ()
        return tuple(x * c % p for x in a)

    def poly_mul(self, a: Coefficients, b: Coefficients) -> Coefficients:
        if not a or not b:
            return ()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            return self.poly_scale(a, b[0])
        if len(b) >= self.kronecker_threshold:
            return self._kronecker_mul(a, b)
        return self._schoolbook_mul(a, b)

    def _schoolbook_mul(self, a: Coefficients,
                        b: Coefficients) -> Coefficients:
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                out[i:i + len(b)] = [acc + x * y
                                     for acc, y in zip(out[i:i + len(b)], b)]
        return self.poly_trim([c % p for c in out])

    def _kronecker_mul(self, a: Coefficients,
                       b: Coefficients) -> Coefficients:
        p = self.p
        bound = min(len(a), len(b)) * (p - 1) ** 2
        width = (bound.bit_length() + 7) // 8
        packed_a = int.from_bytes(
            b"".join(x.to_bytes(width, "little") for x in a), "little")
        packed_b = int.from_bytes(
            b"".join(y.to_bytes(width, "little") for y in b), "little")
        size = len(a) + len(b) - 1
        raw = (packed_a * packed_b).to_bytes(size * width, "little")
        return self.poly_trim([
            int.from_bytes(raw[i:i + width], "little") % p
            for i in range(0, size * width, width)])

    def poly_divmod(self, a: Coefficients, b: Coefficients
                    ) -> Tuple[Coefficients, Coefficients]:
        if not b:
            raise errors.DivisionByZero(self._ZERO_DIVISOR)

        p = self.p
        width = len(b)
        if len(a) < width:
            return (), tuple(a)

        lead_inverse = self.inv(b[-1])
        rem = list(a)
        quot = [0] * (len(a) - width + 1)
        tail = b[:-1]
        for i in range(len(a) - width, -1, -1):
            top = rem[i + width - 1] % p
            if not top:
                continue
            q = top * lead_inverse % p
            quot[i] = q
            window = rem[i:i + width - 1]
            rem[i:i + width - 1] = [r - q * y
                                    for r, y in zip(window, tail)]
            rem[i + width - 1] = 0
        return (self.poly_trim(quot),
                self.poly_trim([r % p for r in rem[:width - 1]]))

    def poly_monic(self, a: Coefficients) -> Coefficients:
        if not a or a[-1] == 1:
            return a
        return self.poly_scale(a, self.inv(a[-1]))

    def poly_gcd(self, a: Coefficients, b: Coefficients) -> Coefficients:
        while b:
            a, b = b, self.poly_divmod(a, b)[1]
        return self.poly_monic(a)

    def poly_eval(self, a: Coefficients, point: int) -> int:
        p = self.p
        acc = 0
        for x in reversed(a):
            acc = (acc * point + x) % p
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash((PrimeField, self.p))

    def __repr__(self) -> str:
        return "PrimeField({p})".format(p=self.p)


def get_field(p: int) -> PrimeField:
    """Return the shared :class:`PrimeField` for p.

    Raises:
        BadArgument: p is not an odd prime, or exceeds
                     :func:`~purepolylog.config.max_prime`.
    """
    bound = config.max_prime()
    if isinstance(p, int) and p > bound:
        raise errors.BadArgument(_ABOVE_MAX_PRIME.format(
            p=p, bound=bound, env=config.MAX_PRIME_ENV))
    return _cached_field(p)


@functools.lru_cache(maxsize=None)
def _cached_field(p: int) -> PrimeField:
    return PrimeField(p)
