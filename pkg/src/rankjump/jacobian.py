"""Jacobian arithmetic in Mumford representation (Cantor composition and reduction).

A class in Pic^0 of an odd-degree model is written uniquely as (u, v) with u
monic, deg v < deg u <= g and u | v^2 - f; the base point of the Jacobian
embedding is the point at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Polynomial, poly_xgcd
from .curves import CurvePoint, HyperellipticCurve, NotOnCurveError, on_curve


class MumfordError(ValueError):
    """A (u, v) pair violating the Mumford invariants."""


@dataclass(frozen=True, eq=False)
class MumfordDivisor:
    u: Polynomial
    v: Polynomial
    curve: HyperellipticCurve

    def __post_init__(self):
        if self.u.is_zero() or self.u.lc != 1:
            raise MumfordError("u must be monic")
        if self.u.degree > self.curve.genus:
            raise MumfordError("deg u exceeds the genus; reduce first")
        if not self.v.is_zero() and self.v.degree >= self.u.degree:
            raise MumfordError("deg v must be smaller than deg u")
        if not ((self.v * self.v - self.curve.f) % self.u).is_zero():
            raise MumfordError("u does not divide v^2 - f")

    def is_identity(self) -> bool:
        return self.u.degree == 0

    def __eq__(self, other):
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __add__(self, other):
        return cantor_add(self.curve, self, other)

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        return cantor_add(self.curve, self, negate(other))

    def __rmul__(self, n: int):
        return scalar_mul(n, self)

    def __repr__(self):
        return f"({self.u}, {self.v})"

    def to_json(self) -> dict:
        return {"u": self.u.to_json(), "v": self.v.to_json()}


def identity(C: HyperellipticCurve) -> MumfordDivisor:
    F = C.field
    return MumfordDivisor(Polynomial._raw([F.one], F), Polynomial._raw([], F), C)


def _make(C: HyperellipticCurve, u: Polynomial, v: Polynomial) -> MumfordDivisor:
    # trusted constructor used inside the group law (invariants hold by construction)
    obj = object.__new__(MumfordDivisor)
    object.__setattr__(obj, "u", u)
    object.__setattr__(obj, "v", v)
    object.__setattr__(obj, "curve", C)
    return obj


def embed(C: HyperellipticCurve, P: CurvePoint) -> MumfordDivisor:
    """Class of (P) - (infinity)."""
    if not on_curve(C, P):
        raise NotOnCurveError(f"{P} is not on {C}")
    if P.is_infinity:
        return identity(C)
    F = C.field
    return _make(C, Polynomial._raw([-F(P.x), F.one], F), Polynomial._raw([F(P.y)], F))


def reduce_divisor(C: HyperellipticCurve, u: Polynomial, v: Polynomial) -> MumfordDivisor:
    """Reduce a semi-reduced pair (u, v), u | v^2 - f, to its unique reduced representative."""
    if not ((v * v - C.f) % u).is_zero():
        raise MumfordError("u does not divide v^2 - f")
    g = C.genus
    u = u.monic()
    v = v % u
    while u.degree > g:
        u = ((C.f - v * v).exact_div(u)).monic()
        v = (-v) % u
    return _make(C, u, v)


def cantor_add(C: HyperellipticCurve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    if D1.is_identity():
        return D2
    if D2.is_identity():
        return D1
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    # composition
    d0, e1, e2 = poly_xgcd(u1, u2)
    if d0.degree == 0:
        # coprime supports: no cancellation, d = 1
        u = u1 * u2
        v = (e1 * u1 * v2 + e2 * u2 * v1) % u
        return reduce_divisor(C, u, v)
    d, c1, c2 = poly_xgcd(d0, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exact_div(d * d)
    v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + C.f)).exact_div(d) % u
    return reduce_divisor(C, u, v)


def negate(D: MumfordDivisor) -> MumfordDivisor:
    return _make(D.curve, D.u, (-D.v) % D.u if D.u.degree > 0 else D.v)


def scalar_mul(n: int, D: MumfordDivisor) -> MumfordDivisor:
    C = D.curve
    if n < 0:
        return scalar_mul(-n, negate(D))
    result = identity(C)
    base = D
    while n:
        if n & 1:
            result = cantor_add(C, result, base)
        n >>= 1
        if n:
            base = cantor_add(C, base, base)
    return result


def class_of_divisor(C: HyperellipticCurve, terms) -> MumfordDivisor:
    """Reduced class of sum m_i (P_i) - (sum m_i)(infinity) for terms [(P_i, m_i), ...]."""
    total = identity(C)
    for P, m in terms:
        total = cantor_add(C, total, scalar_mul(m, embed(C, P)))
    return total


def apply_automorphism(D: MumfordDivisor, phi, curve: HyperellipticCurve | None = None) -> MumfordDivisor:
    """Apply a base-field automorphism coefficientwise to (u, v).

    The image lives on the conjugate curve; pass `curve` when phi fixes f (it is
    then checked), otherwise the conjugate curve is built.
    """
    F = D.curve.field
    f_img = D.curve.f.map_coeffs(phi, F)
    if curve is None:
        curve = D.curve if f_img == D.curve.f else HyperellipticCurve(f_img)
    elif curve.f != f_img:
        raise ValueError("automorphism does not map the curve to the given target")
    return MumfordDivisor(D.u.map_coeffs(phi, F), D.v.map_coeffs(phi, F), curve)


def preimage_degree(n: int, g: int) -> int:
    """Degree of [n]^{-1} of a section on a family of g-dimensional abelian varieties: n^{2g}."""
    if n < 1 or g < 1:
        raise ValueError("need n >= 1 and g >= 1")
    return n ** (2 * g)
