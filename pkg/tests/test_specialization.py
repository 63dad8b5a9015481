import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankjump.algebra import Polynomial
from rankjump.basechange import conic_base_change
from rankjump.curves import CurvePoint, HyperellipticCurve
from rankjump.elliptic import WeierstrassCurve
from rankjump.families import bad_fiber_locus, build_shioda
from rankjump.jacobian import cantor_add, embed
from rankjump.specialization import (
    BadFiberError,
    _x_double,
    canonical_height,
    gram_matrix,
    integral_model,
    rank_jump_search,
    small_relation_search,
    specialize,
)

G1 = build_shioda([-1, 0, 1])
G2 = build_shioda([-2, -1, 0, 1, 2])
CONIC = conic_base_change(G1, 2)
E16 = WeierstrassCurve(Fraction(0), Fraction(-16), Fraction(16))
P04, P44, P820 = (Fraction(0), Fraction(4)), (Fraction(4), Fraction(4)), (Fraction(8), Fraction(20))


def test_specialize_shioda():
    fib = specialize(G1, 1)
    assert fib.curve.f == Polynomial([1, -1, 0, 1])
    assert fib.point("P_1") == CurvePoint(Fraction(-1), Fraction(1))
    assert fib.point("P_2") == CurvePoint(Fraction(0), Fraction(1))


def test_specialize_conic():
    fib = specialize(CONIC, 2)
    assert fib.t0 == Fraction(1, 2)
    assert fib.curve.f == Polynomial([Fraction(1, 4), -1, 0, 1])
    assert fib.point("P_a") == CurvePoint(Fraction(2), Fraction(5, 2))
    assert fib.point("P'_2") == CurvePoint(Fraction(0), Fraction(-1, 2))


def test_specialize_errors():
    with pytest.raises(BadFiberError):
        specialize(CONIC, 0)
    # p = (x + 6)(x + 3)(x - 2) has p(0) = -36, a double root of p + 36 at the critical point x = 0
    F = build_shioda([-6, -3, 2])
    assert bad_fiber_locus(F).contains(6)
    with pytest.raises(BadFiberError):
        specialize(F, 6)
    assert not bad_fiber_locus(F).contains(5)
    specialize(F, 5)


@pytest.mark.parametrize("t0", [1, 2, Fraction(1, 3), -5])
def test_specialize_commutes_with_embed_and_add(t0):
    C = G2.curve
    P, Q = G2.section("P_1").point, G2.section("P'_3").point
    D = cantor_add(C, embed(C, P), embed(C, Q))
    fib = specialize(G2, t0)
    Dl = cantor_add(fib.curve, embed(fib.curve, fib.point("P_1")), embed(fib.curve, fib.point("P'_3")))
    ev = lambda poly: poly.map_coeffs(lambda c: Fraction(c(Fraction(t0))), fib.curve.field)  # noqa: E731
    assert (ev(D.u), ev(D.v)) == (Dl.u, Dl.v)


def test_integral_model_examples():
    C = HyperellipticCurve(Polynomial([Fraction(1, 4), -1, 0, 1]))
    M = integral_model(C, [CurvePoint(Fraction(0), Fraction(1, 2)), CurvePoint(Fraction(2), Fraction(5, 2))])
    assert (M.curve.a4, M.curve.a6, M.u) == (-16, 16, 2)
    assert M.points == (P04, P820)
    N = integral_model(HyperellipticCurve(Polynomial([1, -1, 0, 1])))
    assert N.u == 1 and (N.curve.a4, N.curve.a6) == (-1, 1)


def test_integral_model_with_quadratic_term():
    C = HyperellipticCurve(Polynomial([Fraction(1, 2), 0, 1, 1]))
    M = integral_model(C, [])
    assert M.curve.is_integral_model() and M.curve.is_short()
    assert M.curve.j_invariant() == WeierstrassCurve(Fraction(1), Fraction(0), Fraction(1, 2)).j_invariant()


def test_height_stable_across_precisions():
    h6 = canonical_height(E16, P04, doublings=6)
    h7 = canonical_height(E16, P04, doublings=7)
    assert h6.value > 0
    assert abs(h6.value - h7.value) <= h6.error_bound + h7.error_bound
    auto = canonical_height(E16, P04)
    assert auto.error_bound <= 1e-3 and auto.error_bound == pytest.approx(auto.C_curve / 4 ** auto.doublings_used)


@pytest.mark.parametrize("E,P,order", [
    (WeierstrassCurve(Fraction(0), Fraction(0), Fraction(1)), (Fraction(2), Fraction(3)), 6),
    (WeierstrassCurve(Fraction(0), Fraction(-43), Fraction(166)), (Fraction(3), Fraction(8)), 7),
    (WeierstrassCurve(Fraction(0), Fraction(-1), Fraction(0)), (Fraction(0), Fraction(0)), 2),
])
def test_torsion_height_exact_zero(E, P, order):
    h = canonical_height(E, P)
    assert h.value == 0 and h.exact and h.torsion_order == order


def test_gram_dependent_sets():
    for pts in ([P04, E16.neg(P04)], [P04, E16.mul(2, P04)], [P04, P04]):
        g = gram_matrix(E16, pts)
        assert abs(g["determinant"]) <= g["determinant_error"] + 1e-9
        assert not g["independent"]


def test_gram_three_points_reported():
    g = gram_matrix(E16, [P04, P44, P820])
    assert g["determinant_error"] > 0 and len(g["matrix"]) == 3


def test_small_relation_search():
    assert small_relation_search(E16, [P04, E16.neg(P04)], 5) == [1, 1]
    fib = specialize(G1, 3)
    M = integral_model(fib.curve, [fib.point(f"P_{i}") for i in (1, 2, 3)])
    assert small_relation_search(M.curve, M.points, 3) == [1, 1, 1]
    fib = specialize(G1, 1)
    M = integral_model(fib.curve, [fib.point("P_1"), fib.point("P_2")])
    # the t = 1 fibre has rank one, so a genuine relation exists
    rel = small_relation_search(M.curve, M.points, 6)
    E = M.curve
    assert rel is not None and E.add(E.mul(rel[0], M.points[0]), E.mul(rel[1], M.points[1])) is None
    with pytest.raises(ValueError):
        small_relation_search(E16, [P04] * 5, 2)


def _nontorsion_points():
    rng = random.Random(7)
    curves = []
    for s in (5, 6, 7, 9, 11):
        fib = specialize(CONIC, s)
        M = integral_model(fib.curve, [fib.point(lab) for lab in ("P_1", "P_2", "P_a")])
        curves.append(M)
    out = []
    while len(out) < 20:
        M = curves[len(out) % 5]
        E = M.curve
        c = [rng.randint(-2, 2) for _ in range(3)]
        P = None
        for k, Q in zip(c, M.points):
            P = E.add(P, E.mul(k, Q))
        if P is not None and E.torsion_order(P) is None:
            out.append((E, P))
    return out


NONTORSION = _nontorsion_points()


@settings(max_examples=20)
@given(st.sampled_from(NONTORSION))
def test_height_quadraticity(EP):
    E, P = EP
    h1 = canonical_height(E, P)
    h2 = canonical_height(E, E.mul(2, P))
    assert abs(h2.value - 4 * h1.value) <= h2.error_bound + 4 * h1.error_bound


@settings(max_examples=20)
@given(st.sampled_from(NONTORSION), st.integers(0, 19))
def test_height_parallelogram(EP, j):
    E, P = EP
    Q = next((Q for F, Q in NONTORSION[j:] + NONTORSION[:j] if F == E and Q != P), P)
    parts = [canonical_height(E, R) for R in (E.add(P, Q), E.sub(P, Q), P, Q)]
    lhs = parts[0].value + parts[1].value - 2 * parts[2].value - 2 * parts[3].value
    bound = parts[0].error_bound + parts[1].error_bound + 2 * parts[2].error_bound + 2 * parts[3].error_bound
    assert abs(lhs) <= bound


@given(st.sampled_from(NONTORSION), st.integers(1, 5))
def test_resultant_gcd_matches_full_gcd(EP, n):
    E, P = EP
    A, B = int(E.a4), int(E.a6)
    R = 256 * (4 * A ** 3 + 27 * B ** 2) ** 2
    a = b = (Fraction(P[0]).numerator, Fraction(P[0]).denominator)
    for _ in range(n):
        a, b = _x_double(*a, A, B), _x_double(*b, A, B, R)
    assert a == b


def test_survey_small_range():
    res = rank_jump_search(G1, 2, [0, 2, 3, 5, 6])
    recs = {r["s"]: r for r in res["records"]}
    assert recs["0"]["skipped"]
    assert recs["3"]["duplicate_of_s"] == "2"
    assert not recs["2"]["certified"] and recs["2"]["relation"] is not None
    for r in res["records"]:
        if r.get("certified"):
            assert r["relation"] is None and r["determinant"] - r["determinant_error"] > 1e-2
    assert res["density_table"][-1]["count"] == res["certified_fibres"]


def test_survey_parallel_is_deterministic(monkeypatch):
    a = rank_jump_search(G1, 2, [5, 6, 7], workers=1)
    monkeypatch.setenv("RANKJUMP_THREADS", "2")
    b = rank_jump_search(G1, 2, [5, 6, 7])
    assert a == b


def test_survey_requires_genus_one():
    with pytest.raises(ValueError):
        rank_jump_search(G2, 3, [2])
