"""The Shioda family y^2 = p(x) + t^2 and its biquadratic covering, with canonical sections."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import QQ, QQt, Polynomial, discriminant, rational_sqrt
from .certificate import Certificate
from .curves import CurvePoint, HyperellipticCurve, NotOnCurveError, on_curve
from .jacobian import (
    MumfordDivisor,
    cantor_add,
    class_of_divisor,
    embed,
    identity,
    negate,
    reduce_divisor,
    scalar_mul,
)


class FamilyError(ValueError):
    """Invalid family data."""


@dataclass(frozen=True)
class FamilySection:
    label: str
    point: CurvePoint
    target: str = "X1"

    def to_dict(self) -> dict:
        return {"label": self.label, "point": self.point.to_json(), "target": self.target}


def _fmt(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class ShiodaFamily:
    """y^2 = p(x) + t^2 over Q(t) with p = prod (x - e_i) split, separable, of odd degree."""

    roots: tuple
    p: Polynomial
    curve: HyperellipticCurve
    sections: tuple = ()

    @property
    def d(self) -> int:
        return len(self.roots)

    @property
    def genus(self) -> int:
        return (self.d - 1) // 2

    @property
    def name(self) -> str:
        return "shioda[" + ",".join(_fmt(e) for e in self.roots) + "]"

    @property
    def generic_curve(self) -> HyperellipticCurve:
        return self.curve

    def section(self, label: str) -> FamilySection:
        for S in self.sections:
            if S.label == label:
                return S
        raise KeyError(label)

    def to_config(self) -> dict:
        return {"p_roots": [_fmt(e) for e in self.roots]}


def _check_roots(p_roots) -> tuple:
    roots = tuple(Fraction(e) for e in p_roots)
    if len(set(roots)) != len(roots):
        raise FamilyError("roots of p must be distinct")
    if len(roots) < 3 or len(roots) % 2 == 0:
        raise FamilyError(f"need an odd number >= 3 of roots, got {len(roots)}")
    return roots


def build_shioda(p_roots) -> ShiodaFamily:
    roots = _check_roots(p_roots)
    p = Polynomial.from_roots(roots, QQ)
    t = QQt.gen
    curve = HyperellipticCurve(p.change_field(QQt) + t * t)
    sections = []
    for i, e in enumerate(roots, start=1):
        sections.append(FamilySection(f"P_{i}", CurvePoint(QQt(e), t)))
    for i, e in enumerate(roots, start=1):
        sections.append(FamilySection(f"P'_{i}", CurvePoint(QQt(e), -t)))
    for S in sections:
        if not on_curve(curve, S.point):
            raise NotOnCurveError(f"section {S.label} is not on the generic curve")
    return ShiodaFamily(roots, p, curve, tuple(sections))


def _safe_embed(C, S: FamilySection, cert: Certificate, bad: set) -> MumfordDivisor | None:
    if S.label in bad:
        return None
    try:
        return embed(C, S.point)
    except NotOnCurveError:
        bad.add(S.label)
        return None


def verify_relations_shioda(F: ShiodaFamily) -> Certificate:
    """Check j(P'_i) = -j(P_i), sum j(P_i) = 0, and principality of div(x - e_i), div(y - t)."""
    C = F.curve
    cert = Certificate("relation-suite", F.name, "sections-relations-shioda")
    bad: set = set()
    for S in F.sections:
        if not on_curve(C, S.point):
            bad.add(S.label)
            cert.add(f"on_curve[{S.label}]", False, f"{S.point} does not satisfy y^2 = {C.f}")
    d = F.d
    P = {i: _find(F.sections, f"P_{i}") for i in range(1, d + 1)}
    Pp = {i: _find(F.sections, f"P'_{i}") for i in range(1, d + 1)}
    jP = {i: (_safe_embed(C, P[i], cert, bad) if P[i] else None) for i in P}
    jPp = {i: (_safe_embed(C, Pp[i], cert, bad) if Pp[i] else None) for i in Pp}

    for i in range(1, d + 1):
        name = f"j(P'_{i}) = -j(P_{i})"
        if jP[i] is None or jPp[i] is None:
            cert.add(name, False, "section missing or off the curve")
        else:
            cert.add(name, jPp[i] == negate(jP[i]), f"j(P'_{i}) = {jPp[i]}")

    name = "sum_i j(P_i) = 0"
    if any(jP[i] is None for i in jP):
        cert.add(name, False, "section missing or off the curve")
    else:
        total = identity(C)
        for i in range(1, d + 1):
            total = cantor_add(C, total, jP[i])
        cert.add(name, total.is_identity(), f"sum = {total}")

    for i in range(1, d + 1):
        name = f"div(x - e_{i}) principal"
        if P[i] is None or Pp[i] is None or {P[i].label, Pp[i].label} & bad:
            cert.add(name, False, "section missing or off the curve")
            continue
        D = class_of_divisor(C, [(P[i].point, 1), (Pp[i].point, 1)])
        cert.add(name, D.is_identity(), f"class = {D}")

    name = "div(y - t) principal"
    if any(P[i] is None or P[i].label in bad for i in P):
        cert.add(name, False, "section missing or off the curve")
    else:
        D = class_of_divisor(C, [(P[i].point, 1) for i in P])
        # independent route: zeros of y - t are cut out by f - t^2, then Cantor-reduce
        t = QQt.gen
        zeros = (C.f - t * t).monic()
        support = Polynomial.from_roots(F.roots, QQ).change_field(QQt)
        R = reduce_divisor(C, zeros, Polynomial([t], QQt))
        ok = D.is_identity() and zeros == support and R.is_identity()
        cert.add(name, ok, f"class = {D}; zeros of y - t: {zeros}; reduced: {R}")
    cert.data["genus"] = F.genus
    cert.data["d"] = d
    return cert


def _find(sections, label):
    for S in sections:
        if S.label == label:
            return S
    return None


# -- the biquadratic covering -------------------------------------------------


def factor_over_Q(q: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic irreducible factors of q over Q with multiplicities."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(q.coeffs))
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for fac, mult in factors:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append((Polynomial(cs, QQ).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, [str(c) for c in fm[0].coeffs]))
    return out


@dataclass(frozen=True)
class BiquadraticFamily:
    """y^2 = p(x) + t^2, z^2 = q(x) over Q(t); arithmetic happens on X1 and X3: w^2 = (p + t^2) q."""

    X1: ShiodaFamily
    q: Polynomial
    a: tuple
    X3_curve: HyperellipticCurve
    q_factors: tuple = field(default=())

    @property
    def roots(self) -> tuple:
        return self.X1.roots

    @property
    def p(self) -> Polynomial:
        return self.X1.p

    @property
    def d1(self) -> int:
        return self.X1.d

    @property
    def d2(self) -> int:
        return self.q.degree

    @property
    def g1(self) -> int:
        return (self.d1 - 1) // 2

    @property
    def g2(self) -> int:
        return self.d2 // 2 - 1

    @property
    def genus_X(self) -> int:
        return self.d1 + self.d2 - 2

    @property
    def name(self) -> str:
        return self.X1.name.replace("shioda", "biquadratic") + "+q[" + ",".join(_fmt(c) for c in self.q.coeffs) + "]"

    @property
    def r_sections(self) -> tuple:
        t = QQt.gen
        out = []
        for i, (e, ai) in enumerate(zip(self.roots, self.a), start=1):
            out.append(FamilySection(f"R_{i}", CurvePoint(QQt(e), t * ai), "X3"))
        for i, (e, ai) in enumerate(zip(self.roots, self.a), start=1):
            out.append(FamilySection(f"R'_{i}", CurvePoint(QQt(e), -(t * ai)), "X3"))
        return tuple(out)

    def to_config(self) -> dict:
        return {"p_roots": [_fmt(e) for e in self.roots],
                "q": [_fmt(c) for c in self.q.coeffs],
                "a": [_fmt(c) for c in self.a]}


def build_biquadratic(p_roots, q, a=None) -> BiquadraticFamily:
    X1 = build_shioda(p_roots)
    if not isinstance(q, Polynomial):
        q = Polynomial([Fraction(c) for c in q], QQ)
    d2 = q.degree
    if d2 < 2 or d2 % 2:
        raise FamilyError(f"q must have even degree >= 2, got {d2}")
    pq = X1.p * q
    if discriminant(pq) == 0:
        raise FamilyError("p*q is not separable")
    values = [q(e) for e in X1.roots]
    if a is None:
        roots = [rational_sqrt(v) for v in values]
        if any(r is None for r in roots):
            raise FamilyError("q(e_i) is not a rational square for some root e_i")
        a = roots
    a = tuple(Fraction(c) for c in a)
    if len(a) != X1.d:
        raise FamilyError("need one square root a_i per root e_i")
    for e, ai, v in zip(X1.roots, a, values):
        if ai * ai != v:
            raise FamilyError(f"q({e}) = {v} is not {ai}^2")
    t = QQt.gen
    X3 = HyperellipticCurve((X1.p.change_field(QQt) + t * t) * q.change_field(QQt))
    fam = BiquadraticFamily(X1, q, a, X3, tuple(h for h, _ in factor_over_Q(q)))
    for S in fam.r_sections:
        if not on_curve(X3, S.point):
            raise NotOnCurveError(f"section {S.label} is not on X3")
    return fam


def q_factor_class(F: BiquadraticFamily, h: Polynomial) -> MumfordDivisor:
    """Class of the Weierstrass points cut out by a factor h of q (reduced if deg h > g)."""
    C = F.X3_curve
    return reduce_divisor(C, h.change_field(QQt), Polynomial([], QQt))


def verify_relations_biquadratic(F: BiquadraticFamily) -> Certificate:
    C = F.X3_curve
    cert = Certificate("relation-suite", F.name, "sections-relations-biquadratic")
    bad = set()
    secs = F.r_sections
    for S in secs:
        if not on_curve(C, S.point):
            bad.add(S.label)
            cert.add(f"on_curve[{S.label}]", False, f"{S.point} is not on X3")
    d1 = F.d1
    for i in range(1, d1 + 1):
        R, Rp = _find(secs, f"R_{i}"), _find(secs, f"R'_{i}")
        name = f"j(R_{i}) + j(R'_{i}) = 0"
        if {R.label, Rp.label} & bad:
            cert.add(name, False, "section off the curve")
            cert.add(f"div(x - e_{i}) principal on X3", False, "section off the curve")
            continue
        s = cantor_add(C, embed(C, R.point), embed(C, Rp.point))
        cert.add(name, s.is_identity(), f"sum = {s}")
        D = class_of_divisor(C, [(R.point, 1), (Rp.point, 1)])
        cert.add(f"div(x - e_{i}) principal on X3", D.is_identity(), f"class = {D}")
    total = identity(C)
    for h in F.q_factors:
        D = q_factor_class(F, h)
        total = cantor_add(C, total, D)
        cert.add(f"2*class({h}) = 0", scalar_mul(2, D).is_identity(), f"class = {D}")
        cert.add(f"class({h}) != 0", not D.is_identity(), "")
    t = QQt.gen
    W = reduce_divisor(C, (F.p.change_field(QQt) + t * t), Polynomial([], QQt))
    cert.add("sum of all Weierstrass classes = 0", cantor_add(C, total, W).is_identity(),
             "class(q) + class(p + t^2) = div(w)")
    cert.data.update({"d1": F.d1, "d2": F.d2, "genus_X": F.genus_X, "genus_X3": C.genus,
                      "q_factors": [h.to_json() for h in F.q_factors]})
    return cert


# -- bad fibres ------------------------------------------------------------


@dataclass(frozen=True)
class BadFiberLocus:
    polynomial: Polynomial  # in the variable t, over Q
    degree: int
    expected_degree: int
    reducible_at_infinity: bool = True

    def contains(self, t0) -> bool:
        return self.polynomial(Fraction(t0)) == 0

    def to_dict(self) -> dict:
        return {"polynomial_in_t": self.polynomial.to_json(), "degree": self.degree,
                "expected_degree": self.expected_degree, "reducible_at_infinity": self.reducible_at_infinity}


def bad_fiber_locus(F: ShiodaFamily) -> BadFiberLocus:
    """Finite bad fibres: zeros of disc_x(p(x) + t^2); the fibre at t = infinity is the reducible one."""
    disc = discriminant(F.curve.f)
    if not disc.is_polynomial():
        raise ArithmeticError("discriminant of the Shioda model should be polynomial in t")
    poly = disc.num.change_field(QQ)
    return BadFiberLocus(poly, poly.degree, 2 * (F.d - 1))


# -- config files ------------------------------------------------------------


def family_from_config(cfg: dict):
    if "p_roots" not in cfg:
        raise FamilyError("family config needs 'p_roots'")
    if cfg.get("q") is not None:
        return build_biquadratic(cfg["p_roots"], cfg["q"], cfg.get("a"))
    return build_shioda(cfg["p_roots"])


def load_family(path):
    with open(path) as fh:
        return family_from_config(json.load(fh))
