"""Odd-degree hyperelliptic models y^2 = f(x) and their points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import QQ, QQs, QQt, GF, Polynomial, discriminant
from .algebra.fields import Field
from .algebra.functions import RationalFunctionField
from .algebra.polynomial import coeff_to_json


class CurveError(ValueError):
    """Invalid curve model."""


class NotOnCurveError(ValueError):
    """A point does not satisfy the curve equation."""


@dataclass(frozen=True)
class CurvePoint:
    """An affine point (x, y), or the unique point at infinity when both are None."""

    x: object = None
    y: object = None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return INFINITY

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        return "Infinity" if self.is_infinity else f"({self.x}, {self.y})"

    def to_json(self):
        if self.is_infinity:
            return "infinity"
        return [coeff_to_json(self.x), coeff_to_json(self.y)]


INFINITY = CurvePoint()


@dataclass(frozen=True, eq=False)
class HyperellipticCurve:
    f: Polynomial

    def __post_init__(self):
        d = self.f.degree
        if d < 3 or d % 2 == 0:
            raise CurveError(f"need an odd-degree model of degree >= 3, got degree {d}")
        if discriminant(self.f) == 0:
            raise CurveError("f is not separable (discriminant is zero)")

    @property
    def genus(self) -> int:
        return (self.f.degree - 1) // 2

    @property
    def field(self) -> Field:
        return self.f.field

    def __eq__(self, other):
        return isinstance(other, HyperellipticCurve) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"HyperellipticCurve(y^2 = {self.f})"

    def point(self, x, y) -> CurvePoint:
        P = CurvePoint(self.field(x), self.field(y))
        if not on_curve(self, P):
            raise NotOnCurveError(f"{P} is not on {self}")
        return P

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "base": self.field.label}


def make_curve(f: Polynomial) -> HyperellipticCurve:
    return HyperellipticCurve(f)


def on_curve(C: HyperellipticCurve, P: CurvePoint) -> bool:
    if P.is_infinity:
        return True
    return P.y * P.y == C.f(P.x)


def involution(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y)


def field_from_label(label: str) -> Field:
    if label == "Q":
        return QQ
    if label == "Q(t)":
        return QQt
    if label == "Q(s)":
        return QQs
    if label.startswith("Fp:"):
        return GF(int(label[3:]))
    if label.startswith("Q(") and label.endswith(")"):
        return RationalFunctionField(QQ, label[2:-1])
    raise ValueError(f"unknown base field label {label!r}")


def curve_from_json(data: dict) -> HyperellipticCurve:
    field = field_from_label(data["base"])
    coeffs = [Fraction(c) if isinstance(c, str) else c for c in data["f"]]
    return HyperellipticCurve(Polynomial(coeffs, field))
