"""Chord-tangent group law on y^2 = x^3 + a2 x^2 + a4 x + a6.

Points are ``(x, y)`` tuples, ``None`` is the identity.  Used as an independent
oracle for genus-one Cantor arithmetic and as the substrate for heights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import QQ, Polynomial
from .algebra.fields import Field


@dataclass(frozen=True)
class WeierstrassCurve:
    a2: object
    a4: object
    a6: object
    field: Field = QQ

    @classmethod
    def from_cubic(cls, f: Polynomial) -> "WeierstrassCurve":
        if f.degree != 3 or f.lc != 1:
            raise ValueError("need a monic cubic")
        return cls(f[2], f[1], f[0], f.field)

    @property
    def cubic(self) -> Polynomial:
        return Polynomial([self.a6, self.a4, self.a2, 1], self.field)

    def is_short(self) -> bool:
        return self.a2 == 0

    def discriminant(self):
        """Discriminant of the model, 16 * disc(cubic)."""
        from .algebra import discriminant
        return 16 * discriminant(self.cubic)

    def j_invariant(self):
        a2, a4, a6 = self.a2, self.a4, self.a6
        b2, b4 = 4 * a2, 2 * a4
        c4 = b2 * b2 - 24 * b4
        return c4 ** 3 / self.discriminant()

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def is_on(self, P) -> bool:
        if P is None:
            return True
        x, y = P
        return y * y == self.rhs(x)

    def neg(self, P):
        if P is None:
            return None
        return (P[0], -P[1])

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 == -y2:
                return None
            return self.double(P)
        lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - self.a2 - x1 - x2
        return (x3, lam * (x1 - x3) - y1)

    def double(self, P):
        if P is None:
            return None
        x1, y1 = P
        if y1 == 0:
            return None
        lam = ((3 * x1 + 2 * self.a2) * x1 + self.a4) / (2 * y1)
        x3 = lam * lam - self.a2 - 2 * x1
        return (x3, lam * (x1 - x3) - y1)

    def sub(self, P, Q):
        return self.add(P, self.neg(Q))

    def mul(self, n: int, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        result = None
        while n:
            if n & 1:
                result = self.add(result, P)
            n >>= 1
            if n:
                P = self.double(P)
        return result

    def is_integral_model(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in (self.a2, self.a4, self.a6))

    def torsion_order(self, P, bound: int = 12) -> int | None:
        """Order of P if it is at most `bound` (Mazur: rational torsion has order <= 12), else None.

        Over Q on an integral model, a point with non-integral coordinates has
        infinite order (Nagell-Lutz for short models, extended to a2 != 0 through
        the integral change x -> x - a2/3 scaled by 3^2).
        """
        if P is None:
            return 1
        if self.field is QQ and self.is_integral_model():
            x, y = Fraction(P[0]), Fraction(P[1])
            if self.a2 == 0:
                if x.denominator != 1 or y.denominator != 1:
                    return None
            elif (9 * x).denominator != 1 or (27 * y).denominator != 1:
                return None
        Q = P
        for k in range(1, bound + 1):
            if Q is None:
                return k
            Q = self.add(Q, P)
        return None
