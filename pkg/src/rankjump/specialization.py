"""Specialisation of families at rational parameters, canonical heights on genus-one
fibres, and the rank-jump survey."""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sympy import factorint

from .algebra import QQ, Polynomial, discriminant
from .curves import CurvePoint, HyperellipticCurve, on_curve
from .elliptic import WeierstrassCurve


class BadFiberError(ValueError):
    """The parameter hits a singular fibre or an excluded value."""


class HeightError(ArithmeticError):
    """Height computation could not meet its error target within budget."""


# -- specialisation ------------------------------------------------------------


@dataclass(frozen=True)
class SpecializedFiber:
    t0: Fraction
    curve: HyperellipticCurve
    points: dict
    provenance: dict = field(default_factory=dict)

    def point(self, label: str) -> CurvePoint:
        return self.points[label]

    def to_dict(self) -> dict:
        return {"t0": str(self.t0), "curve": self.curve.to_json(),
                "points": {k: P.to_json() for k, P in self.points.items()}, "provenance": self.provenance}


def _eval(c, value) -> Fraction:
    return Fraction(c(value)) if callable(c) else Fraction(c)


def specialize(F, value) -> SpecializedFiber:
    """Substitute t = t0 (or s = s0 for a conic base change) into the curve and sections.

    Works on anything exposing `.curve` and `.sections`; base-changed families
    also expose `.parametrization`, and then `value` is the s-parameter.
    """
    value = Fraction(value)
    par = getattr(F, "parametrization", None)
    prov = {"family": F.name}
    if par is not None:
        if value == 0:
            raise BadFiberError("s = 0 is excluded")
        t0 = par.at(value)[0]
        prov["s0"] = str(value)
    else:
        t0 = value
    try:
        f = F.curve.f.map_coeffs(lambda c: _eval(c, value), QQ)
    except ZeroDivisionError as exc:
        raise BadFiberError(f"curve coefficients have a pole at {value}") from exc
    if f.degree != F.curve.f.degree or discriminant(f) == 0:
        raise BadFiberError(f"singular fibre at t0 = {t0}")
    C = HyperellipticCurve(f)
    pts = {}
    for S in F.sections:
        try:
            P = CurvePoint(_eval(S.point.x, value), _eval(S.point.y, value))
        except ZeroDivisionError as exc:
            raise BadFiberError(f"section {S.label} has a pole at {value}") from exc
        if not on_curve(C, P):
            raise ArithmeticError(f"specialised {S.label} is off the fibre")
        pts[S.label] = P
    return SpecializedFiber(t0, C, pts, prov)


# -- integral models ------------------------------------------------------------------


@dataclass(frozen=True)
class IntegralModel:
    """Y^2 = X^3 + A X + B with X = u^2 (x + shift), Y = u^3 y."""

    curve: WeierstrassCurve
    u: int
    shift: Fraction
    points: tuple

    def transport(self, P: CurvePoint):
        if P.is_infinity:
            return None
        return (self.u ** 2 * (Fraction(P.x) + self.shift), self.u ** 3 * Fraction(P.y))

    def to_dict(self) -> dict:
        E = self.curve
        return {"A": str(E.a4), "B": str(E.a6), "u": self.u, "shift": str(self.shift),
                "points": [[str(c) for c in P] if P else None for P in self.points]}


def _scaling_exponent(den: int, weight: int) -> dict:
    return {q: -(-k // weight) for q, k in factorint(den).items()} if den > 1 else {}


def integral_model(C: HyperellipticCurve, points=()) -> IntegralModel:
    f = C.f
    if C.genus != 1 or f.field != QQ:
        raise ValueError("integral_model needs a genus-one curve over Q")
    lc = Fraction(f.lc)
    if lc != 1:
        raise ValueError("integral_model expects a monic cubic")
    a2, a4, a6 = (Fraction(f[i]) for i in (2, 1, 0))
    shift = a2 / 3
    # x = X' - shift kills the quadratic term
    A = a4 - a2 * a2 / 3
    B = a6 - a2 * a4 / 3 + 2 * a2 ** 3 / 27
    need: dict = {}
    for den, w in ((A.denominator, 4), (B.denominator, 6)):
        for q, k in _scaling_exponent(den, w).items():
            need[q] = max(need.get(q, 0), k)
    u = math.prod(q ** k for q, k in need.items())
    E = WeierstrassCurve(Fraction(0), A * u ** 4, B * u ** 6)
    model = IntegralModel(E, u, shift, ())
    pts = tuple(model.transport(P) for P in points)
    if not all(E.is_on(P) for P in pts):
        raise ArithmeticError("transport produced a point off the integral model")
    return IntegralModel(E, u, shift, pts)


# -- canonical heights --------------------------------------------------------------


def naive_height(x: Fraction) -> float:
    x = Fraction(x)
    return math.log(max(abs(x.numerator), x.denominator))


def _log(q: Fraction) -> float:
    q = abs(Fraction(q))
    return math.log(max(q.numerator, q.denominator))


def height_difference_bound(E: WeierstrassCurve) -> float:
    """C with |lim h(x(2^n P))/4^n - h(x(P))| <= C on an integral short model.

    Twice the larger side of Silverman's 1990 bound (the naive x-height is twice
    the normalisation used there), with b2 = 0 so no 2* correction.
    """
    if not (E.is_short() and E.is_integral_model()):
        raise ValueError("height bounds need an integral short Weierstrass model")
    Delta = E.discriminant()
    hj = _log(E.j_invariant()) if E.a4 != 0 else 0.0
    hD = _log(Delta)
    lower = hj / 8 + hD / 12 + 0.973
    upper = hj / 12 + hD / 12 + 1.07
    return 2 * max(lower, upper)


def _x_double(X: int, Z: int, A: int, B: int, R: int = 0) -> tuple[int, int]:
    """One x-only doubling on coprime (X, Z). R, if given, is the resultant of the two forms:
    gcd(num, den) divides it, so the common factor comes from small gcds."""
    X2, Z2 = X * X, Z * Z
    num = X2 * X2 - 2 * A * X2 * Z2 - 8 * B * X * Z2 * Z + A * A * Z2 * Z2
    den = 4 * Z * (X2 * X + A * X * Z2 + B * Z2 * Z)
    g = math.gcd(math.gcd(R, num), den) if R else math.gcd(num, den)
    if den < 0:
        g = -g
    return num // g, den // g


@dataclass(frozen=True)
class HeightEstimate:
    value: float
    error_bound: float
    doublings_used: int
    C_curve: float
    exact: bool = False
    torsion_order: int | None = None

    def to_dict(self) -> dict:
        return {"value": self.value, "error_bound": self.error_bound, "doublings": self.doublings_used,
                "C_curve": self.C_curve, "exact": self.exact, "torsion_order": self.torsion_order}


def canonical_height(E: WeierstrassCurve, P, doublings: int | None = None, target: float = 1e-3,
                     max_doublings: int = 12) -> HeightEstimate:
    """lim h(x(2^n P))/4^n with h(x) = log max(|num|, |den|), by exact x-only doubling.

    With `doublings=None` the smallest n with C/4^n <= target is used.
    """
    Ccurve = height_difference_bound(E)
    if P is None:
        return HeightEstimate(0.0, 0.0, 0, Ccurve, exact=True, torsion_order=1)
    if not E.is_on(P):
        raise ValueError(f"{P} is not on the curve")
    order = E.torsion_order(P)
    if order is not None:
        return HeightEstimate(0.0, 0.0, 0, Ccurve, exact=True, torsion_order=order)
    if doublings is None:
        doublings = 0
        while Ccurve / 4 ** doublings > target:
            doublings += 1
            if doublings > max_doublings:
                raise HeightError(f"error target {target} needs more than {max_doublings} doublings")
    elif doublings > max_doublings:
        raise HeightError(f"doubling budget {max_doublings} exceeded")
    A, B = int(E.a4), int(E.a6)
    x = Fraction(P[0])
    X, Z = x.numerator, x.denominator
    R = 256 * (4 * A ** 3 + 27 * B ** 2) ** 2
    for _ in range(doublings):
        X, Z = _x_double(X, Z, A, B, R)
        if Z == 0:
            raise ArithmeticError("doubling reached the identity on a non-torsion point")
    h = math.log(max(abs(X), abs(Z)))
    scale = 4 ** doublings
    return HeightEstimate(h / scale, Ccurve / scale, doublings, Ccurve)


def gram_matrix(E: WeierstrassCurve, points, eps: float = 1e-2, doublings: int | None = None) -> dict:
    """Height-pairing matrix <P,Q> = (h(P+Q) - h(P) - h(Q))/2 with an error bound on det."""
    pts = list(points)
    for P in pts:
        if not E.is_on(P):
            raise ValueError(f"{P} is not on the curve")
    n = len(pts)
    single = [canonical_height(E, P, doublings) for P in pts]
    G = np.zeros((n, n))
    err = np.zeros((n, n))
    for i in range(n):
        G[i, i] = single[i].value
        err[i, i] = single[i].error_bound
        for j in range(i + 1, n):
            hs = canonical_height(E, E.add(pts[i], pts[j]), doublings)
            G[i, j] = G[j, i] = (hs.value - single[i].value - single[j].value) / 2
            err[i, j] = err[j, i] = (hs.error_bound + single[i].error_bound + single[j].error_bound) / 2
    det = float(np.linalg.det(G)) if n else 1.0
    # |det(G + D) - det(G)| <= prod(|g_i| + |d_i|) - prod |g_i| over rows (Hadamard)
    gn = np.linalg.norm(G, axis=1)
    en = np.linalg.norm(err, axis=1)
    det_err = float(np.prod(gn + en) - np.prod(gn)) if n else 0.0
    return {
        "matrix": G.tolist(),
        "entry_errors": err.tolist(),
        "determinant": det,
        "determinant_error": det_err,
        "heights": [h.to_dict() for h in single],
        "eps": eps,
        "independent": bool(det - det_err > eps),
    }


def small_relation_search(E: WeierstrassCurve, points, coeff_bound: int = 10):
    """Smallest (sup-norm) nonzero n with sum n_i P_i torsion, |n_i| <= coeff_bound; None if none.

    Exact: torsion is decided by Nagell-Lutz and Mazur's bound on an integral model.
    The sign is normalised so the first nonzero coefficient is positive.
    """
    pts = list(points)
    if len(pts) > 4 or coeff_bound > 20:
        raise ValueError("relation search is limited to 4 points and coefficients up to 20")
    if not pts:
        return None
    B = coeff_bound
    multiples = []
    for P in pts:
        row = {0: None}
        Q = None
        for k in range(1, B + 1):
            Q = E.add(Q, P)
            row[k] = Q
            row[-k] = E.neg(Q)
        multiples.append(row)
    for r in range(1, B + 1):
        for vec in itertools.product(range(-r, r + 1), repeat=len(pts)):
            if max(map(abs, vec)) != r:
                continue
            first = next(c for c in vec if c)
            if first < 0:
                continue
            S = None
            for row, c in zip(multiples, vec):
                S = E.add(S, row[c])
            if E.torsion_order(S) is not None:
                return list(vec)
    return None


# -- survey ---------------------------------------------------------------------------


def _candidate_points(fiber: SpecializedFiber, genus: int) -> list:
    d = 2 * genus + 1
    labels = [f"P_{i}" for i in range(1, d)] + ["P_a"]
    return [fiber.point(lab) for lab in labels]


def _survey_one(args) -> dict:
    cfg, a, s0, eps, doublings, coeff_bound = args
    from .basechange import conic_base_change
    from .families import family_from_config

    G = conic_base_change(family_from_config(cfg), a)
    rec = {"s": str(s0), "claim": "rank-at-least-2g+1-at-fibre"}
    try:
        fib = specialize(G, s0)
    except BadFiberError as exc:
        rec.update({"skipped": str(exc), "certified": False})
        return rec
    pts = _candidate_points(fib, G.genus)
    M = integral_model(fib.curve, pts)
    gram = gram_matrix(M.curve, M.points, eps=eps, doublings=doublings)
    rel = small_relation_search(M.curve, M.points, coeff_bound)
    rec.update({
        "t0": str(fib.t0),
        "model": {"A": str(M.curve.a4), "B": str(M.curve.a6), "u": M.u},
        "points": [[str(c) for c in P] for P in M.points],
        "determinant": round(gram["determinant"], 12),
        "determinant_error": round(gram["determinant_error"], 12),
        "relation": rel,
        "certified": bool(gram["independent"] and rel is None),
    })
    return rec


def _pool_size(workers):
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("RANKJUMP_THREADS")
    return max(1, int(env)) if env else 1


def rank_jump_search(F, a, s_values, eps: float = 1e-2, doublings: int = 6, coeff_bound: int = 10,
                     workers: int | None = None, density_d: int = 2) -> dict:
    """Survey the fibres of the conic base change at the given s-values (g = 1 only)."""
    if F.genus != 1:
        raise ValueError("the survey relies on genus-one heights")
    a = Fraction(a)
    cfg = F.to_config()
    s_values = [Fraction(s) for s in s_values]
    jobs = [(cfg, a, s, eps, doublings, coeff_bound) for s in s_values if s != 0]
    n = _pool_size(workers)
    if n > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            records = list(pool.map(_survey_one, jobs))
    else:
        records = [_survey_one(j) for j in jobs]
    skipped = [{"s": str(s), "skipped": "s = 0 is excluded", "certified": False} for s in s_values if s == 0]
    # s and c/s give the same fibre up to t -> -t
    seen = {}
    for rec in records:
        if "t0" in rec:
            key = abs(Fraction(rec["t0"]))
            if key in seen:
                rec["duplicate_of_s"] = seen[key]
            else:
                seen[key] = rec["s"]
    distinct = [r for r in records if r.get("certified") and "duplicate_of_s" not in r]
    heights = sorted(max(abs(Fraction(r["t0"]).numerator), Fraction(r["t0"]).denominator) for r in distinct)
    table = []
    if heights:
        T = 1
        while True:
            count = sum(1 for h in heights if h <= T)
            table.append({"T": T, "count": count, "count_over_T^(2/d)": count / T ** (2 / density_d)})
            if T >= heights[-1]:
                break
            T *= 2
    return {
        "family": F.name,
        "a": str(a),
        "claim": "rank-jump-survey",
        "parameters": {"eps": eps, "doublings": doublings, "coeff_bound": coeff_bound, "density_d": density_d},
        "records": skipped + records,
        "certified_fibres": len(distinct),
        "fibres": len(seen),
        "density_table": table,
    }
