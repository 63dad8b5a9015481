"""Rational function fields F(t) over a base field F."""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, Field
from .polynomial import Polynomial, coeff_to_json, poly_gcd, poly_sqrt


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den", "field", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial | None, field: "RationalFunctionField", *, reduced=False):
        base = field.base
        if den is None:
            den = Polynomial._raw([base.one], base)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if num.is_zero():
                den = Polynomial._raw([base.one], base)
            else:
                if den.degree > 0:
                    g = poly_gcd(num, den)
                    if g.degree > 0:
                        num = num.exact_div(g)
                        den = den.exact_div(g)
                lc = den.lc
                if lc != 1:
                    inv = base.one / lc
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den
        self.field = field
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            raise TypeError("ambiguous mix of a polynomial and a rational function")
        return self.field(other)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if self.den == o.den:
            if self.den.degree == 0:
                return RationalFunction(self.num + o.num, self.den, self.field, reduced=True)
            return RationalFunction(self.num + o.num, self.den, self.field)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.field, reduced=True)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.field.zero
            c = self.field.base(other)
            return RationalFunction(self.num * c, self.den, self.field, reduced=True)
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if self.den.degree == 0 and o.den.degree == 0:
            return RationalFunction(self.num * o.num, self.den, self.field, reduced=True)
        # cross-cancel before multiplying to keep sizes small
        a, b, c, d = self.num, self.den, o.num, o.den
        if a.is_zero() or c.is_zero():
            return self.field.zero
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if g1.degree > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2.degree > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        num, den = a * c, b * d
        lc = den.lc
        if lc != 1:
            inv = self.field.base.one / lc
            num, den = num * inv, den * inv
        return RationalFunction(num, den, self.field, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        num, den = self.den, self.num
        inv = self.field.base.one / den.lc
        return RationalFunction(num * inv, den * inv, self.field, reduced=True)

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, self.field, reduced=True)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __call__(self, value):
        """Evaluate at a base-field value; raises ZeroDivisionError at poles."""
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(value) / d

    def substitute(self, image: "RationalFunction") -> "RationalFunction":
        """Image under the field endomorphism t -> image."""
        F = image.field
        num = F.zero
        for c in reversed(self.num.coeffs):
            num = num * image + c
        den = F.zero
        for c in reversed(self.den.coeffs):
            den = den * image + c
        return num / den

    def __repr__(self):
        var = self.field.var
        n = repr(self.num).replace("x", var)
        if self.den.degree == 0:
            return n
        d = repr(self.den).replace("x", var)
        return f"({n})/({d})"

    def to_json(self):
        if self.den.degree == 0:
            return {"num": [coeff_to_json(c) for c in self.num.coeffs]}
        return {"num": [coeff_to_json(c) for c in self.num.coeffs],
                "den": [coeff_to_json(c) for c in self.den.coeffs]}


class RationalFunctionField(Field):
    """F(var) with canonical (reduced, monic-denominator) elements."""

    def __init__(self, base: Field = QQ, var: str = "t"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        one = Polynomial._raw([base.one], base)
        self.zero = RationalFunction(Polynomial._raw([], base), one, self, reduced=True)
        self.one = RationalFunction(one, one, self, reduced=True)

    @property
    def gen(self) -> RationalFunction:
        base = self.base
        return RationalFunction(Polynomial._raw([base.zero, base.one], base), None, self, reduced=True)

    def __call__(self, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            if value.field is self or value.field == self:
                return value
            raise TypeError("rational function from a different field")
        if isinstance(value, Polynomial):
            return RationalFunction(value.change_field(self.base), None, self, reduced=True)
        if isinstance(value, dict):
            num = Polynomial([Fraction(c) if isinstance(c, str) else c for c in value["num"]], self.base)
            den = value.get("den")
            den = None if den is None else Polynomial(
                [Fraction(c) if isinstance(c, str) else c for c in den], self.base)
            return RationalFunction(num, den, self)
        c = self.base(value)
        return RationalFunction(Polynomial._raw([c], self.base), None, self, reduced=True)

    def from_parts(self, num: Polynomial, den: Polynomial) -> RationalFunction:
        return RationalFunction(num, den, self)

    def sqrt(self, value):
        ok, witness = is_square_in_function_field(self(value))
        return witness if ok else None

    @property
    def label(self) -> str:
        return f"{self.base.label}({self.var})"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.base == self.base and other.var == self.var

    def __hash__(self):
        return hash(("RF", self.base, self.var))

    def __repr__(self):
        return f"{self.base!r}({self.var})"


def is_square_in_function_field(f: RationalFunction) -> tuple[bool, RationalFunction | None]:
    """Decide whether f = g^2 in F(t); returns (True, g) or (False, None)."""
    if f.num.is_zero():
        raise ValueError("square test of the zero function")
    # f is reduced with monic denominator, so f is a square iff num and den both are
    rn = poly_sqrt(f.num)
    if rn is None:
        return False, None
    rd = poly_sqrt(f.den)
    if rd is None:
        return False, None
    return True, RationalFunction(rn, rd, f.field)


QQt = RationalFunctionField(QQ, "t")
QQs = RationalFunctionField(QQ, "s")
QQx = RationalFunctionField(QQ, "x")
