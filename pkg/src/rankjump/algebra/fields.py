"""Base fields: the rationals and prime fields.

Every field object exposes ``zero``, ``one``, a coercing ``__call__`` and
``sqrt`` (a square root inside the field, or ``None``).  Elements are plain
immutable numbers supporting ``+ - * / **`` and ``==``; this is the only
contract the polynomial and curve code relies on.
"""

from __future__ import annotations

import math
from fractions import Fraction


class Field:
    characteristic = 0
    zero: object
    one: object

    def __call__(self, value):
        raise NotImplementedError

    def sqrt(self, value):
        raise NotImplementedError

    def is_square(self, value) -> bool:
        return self.sqrt(value) is not None

    @property
    def label(self) -> str:
        raise NotImplementedError


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a rational number, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class RationalField(Field):
    """The field Q; elements are :class:`fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, PrimeFieldElement):
            raise TypeError("cannot coerce a prime field element into Q")
        return Fraction(value)

    def sqrt(self, value):
        return rational_sqrt(self(value))

    @property
    def label(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeFieldElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        self.value = value % field.p
        self.field = field

    def _other(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.field.p != self.field.p:
                raise TypeError("mixing elements of different prime fields")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            p = self.field.p
            if other.denominator % p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return other.numerator * pow(other.denominator, -1, p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o - self.value, self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value * o, self.field)

    __rmul__ = __mul__

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.field.p)
        return PrimeFieldElement(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o % self.field.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.field.p)
        return PrimeFieldElement(self.value * pow(o, -1, self.field.p), self.field)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o, self.field) / self

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.field)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.value == other.value and self.field.p == other.field.p
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


class PrimeField(Field):
    """GF(p) for a word-sized prime p."""

    def __init__(self, p: int):
        if not 2 <= p < 2**63 or not is_prime(p):
            raise ValueError(f"{p} is not a word-sized prime")
        self.p = p
        self.characteristic = p
        self.zero = PrimeFieldElement(0, self)
        self.one = PrimeFieldElement(1, self)

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self.p:
                raise TypeError("element of a different prime field")
            return value
        if isinstance(value, Fraction):
            return PrimeFieldElement(self.zero._other(value), self)
        return PrimeFieldElement(int(value), self)

    def legendre(self, value) -> int:
        a = self(value).value
        if a == 0:
            return 0
        return 1 if pow(a, (self.p - 1) // 2, self.p) == 1 else -1

    def sqrt(self, value):
        a = self(value).value
        p = self.p
        if a == 0:
            return self.zero
        if p == 2:
            return self(a)
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        # Tonelli-Shanks
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
        return self(r)

    def elements(self):
        return [PrimeFieldElement(i, self) for i in range(self.p)]

    @property
    def label(self) -> str:
        return f"Fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]
