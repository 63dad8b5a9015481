"""Dense univariate polynomials over any field of the tower."""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, Field


class Polynomial:
    """Immutable polynomial with ascending coefficient tuple and no trailing zeros."""

    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs, field: Field = QQ):
        cs = [field(c) for c in coeffs]
        zero = field.zero
        while cs and cs[-1] == zero:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list, field: Field) -> "Polynomial":
        # coefficients already in `field`; only strips trailing zeros
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.field = field
        obj._hash = None
        return obj

    @classmethod
    def x(cls, field: Field = QQ) -> "Polynomial":
        return cls._raw([field.zero, field.one], field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> "Polynomial":
        return cls._raw([field(c)], field)

    @classmethod
    def from_roots(cls, roots, field: Field = QQ) -> "Polynomial":
        result = cls.constant(1, field)
        x = cls.x(field)
        for r in roots:
            result = result * (x - field(r))
        return result

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial._raw([self.field(other)], self.field)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = self.field(other)
            except (TypeError, ValueError):
                return NotImplemented
            return Polynomial._raw([a * c for a in self.coeffs], self.field)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw([], self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial._raw([self.field.one], self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divrem(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Euclidean division: returns (q, r) with self = q*other + r, deg r < deg other."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        if len(r) <= db:
            return Polynomial._raw([], self.field), self
        inv = self.field.one / other.lc
        b = other.coeffs
        q = [self.field.zero] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c == 0:
                continue
            c = c * inv
            q[k - db] = c
            for j in range(db):
                r[k - db + j] = r[k - db + j] - c * b[j]
            r[k] = self.field.zero
        return Polynomial._raw(q, self.field), Polynomial._raw(r[:db], self.field)

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return self.exact_div(other)
        c = self.field(other)
        inv = self.field.one / c
        return Polynomial._raw([a * inv for a in self.coeffs], self.field)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = self.field.one / lc
        return Polynomial._raw([a * inv for a in self.coeffs], self.field)

    def derivative(self) -> "Polynomial":
        return Polynomial._raw([c * i for i, c in enumerate(self.coeffs) if i], self.field)

    def __call__(self, value):
        """Horner evaluation; `value` may live in any ring that accepts field scalars."""
        result = None
        for c in reversed(self.coeffs):
            result = c if result is None else result * value + c
        return self.field.zero if result is None else result

    def compose(self, other: "Polynomial") -> "Polynomial":
        result = Polynomial._raw([], other.field)
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    def map_coeffs(self, fn, field: Field) -> "Polynomial":
        return Polynomial._raw([fn(c) for c in self.coeffs], field)

    def change_field(self, field: Field) -> "Polynomial":
        return Polynomial._raw([field(c) for c in self.coeffs], field)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        try:
            c = self.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        if self.is_zero():
            return c == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = str(c)
            if " " in cs or "+" in cs or ("-" in cs[1:]):
                cs = f"({cs})"
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list:
        return [coeff_to_json(c) for c in self.coeffs]


def coeff_to_json(c):
    if isinstance(c, Fraction):
        return str(c)
    if hasattr(c, "to_json"):
        return c.to_json()
    return int(c)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (Euclid with monic normalisation)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return (g, s, t) with g = s*a + t*b and g monic (g = 0 only if a = b = 0)."""
    F = a.field
    zero = Polynomial._raw([], F)
    one = Polynomial._raw([F.one], F)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = F.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def resultant(a: Polynomial, b: Polynomial):
    """Resultant by the Euclidean recursion res(A,B) = (-1)^{mn} lc(B)^{m - deg R} res(B, R)."""
    F = a.field
    if a.is_zero() or b.is_zero():
        return F.zero
    acc = F.one
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return acc * b.lc ** m
        r = a % b
        if r.is_zero():
            return F.zero
        sign = -1 if (m * n) % 2 else 1
        acc = acc * sign * b.lc ** (m - r.degree)
        a, b = b, r


def discriminant(f: Polynomial):
    """disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant of a constant polynomial")
    res = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return res * sign / f.lc


def is_separable(f: Polynomial) -> bool:
    return discriminant(f) != 0


def poly_sqrt(f: Polynomial) -> Polynomial | None:
    """Square root of a polynomial inside F[x], or None."""
    F = f.field
    if f.is_zero():
        return f
    if f.degree % 2:
        return None
    lead = F.sqrt(f.lc)
    if lead is None:
        return None
    n = f.degree // 2
    # determine coefficients of g top-down from the top n+1 coefficients of f
    g = [F.zero] * (n + 1)
    g[n] = lead
    two_lead = lead * 2
    for k in range(1, n + 1):
        # coefficient of x^{2n-k} in g^2 is sum_{i+j=2n-k} g_i g_j
        acc = f[2 * n - k]
        for i in range(n - k + 1, n):
            j = 2 * n - k - i
            if n - k < j <= n:
                acc = acc - g[i] * g[j]
        g[n - k] = acc / two_lead
    root = Polynomial._raw(g, F)
    return root if root * root == f else None


def poly_from_json(data, field: Field = QQ) -> Polynomial:
    return Polynomial([field(c) if not isinstance(c, str) else field(Fraction(c)) for c in data], field)
