from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rankjump.algebra import QQs
from rankjump.basechange import (
    BaseChangeError,
    ConicParametrization,
    cab_scan,
    conic_base_change,
    double_base_change,
    double_jump_report,
    new_section_independence,
    quadratic_pullback,
    search_points_on_Cab,
)
from rankjump.curves import on_curve
from rankjump.families import FamilyError, build_biquadratic, build_shioda

G1 = build_shioda([-1, 0, 1])
G2 = build_shioda([-2, -1, 0, 1, 2])
BQ = build_biquadratic([0, 1, -1], [4, 0, 11, 0, 1])


@pytest.mark.parametrize("F,ranks", [(G1, (0, 2)), (G2, (0, 4))])
def test_quadratic_pullback(F, ranks):
    rec = quadratic_pullback(F)
    assert rec["verdict"] == "PASS"
    assert (rec["ranks"]["k(u)"], rec["ranks"]["k(t)"]) == ranks


@given(st.fractions(min_value=-1000, max_value=1000, max_denominator=50).filter(lambda c: c != 0))
def test_conic_identity(c):
    par = ConicParametrization(c)
    assert par.identity_holds()
    t0, v0 = par.at(3)
    assert v0 * v0 - t0 * t0 == c


def test_conic_values_at_two():
    par = ConicParametrization(Fraction(6))
    assert par.at(2) == (Fraction(1, 2), Fraction(5, 2))
    assert par.twist(2) == 3
    with pytest.raises(BaseChangeError):
        par.at(0)


def test_conic_base_change_sections():
    G = conic_base_change(G1, 2)
    assert G.parametrization.c == 6
    assert all(on_curve(G.curve, S.point) for S in G.sections)
    Pa = G.new_section.point
    assert Pa.y * Pa.y == G.parametrization.c + G.parametrization.t ** 2


@pytest.mark.parametrize("a", [1, 0, -1])
def test_conic_base_change_rejects_roots(a):
    with pytest.raises(BaseChangeError):
        conic_base_change(G1, a)


def test_new_section_g1():
    cert = new_section_independence(G1, 2)
    assert cert.verdict == "PASS" and cert.conclusion_rank == 3
    ws = cert.data["witnesses"]
    assert len(ws) >= 2 and all(w["proven"] for w in ws)
    assert len({abs(Fraction(w["t0"])) for w in ws}) == len(ws)


def test_new_section_g2():
    cert = new_section_independence(G2, 3)
    assert cert.verdict == "PASS" and cert.conclusion_rank == 5


def test_new_section_inconclusive_when_witness_is_two_torsion():
    # p(-9) = -400 for roots -4, -1, 1, so s = 20 gives v = 0 and P_a is 2-torsion there
    F = build_shioda([-4, -1, 1])
    par = ConicParametrization(F.p(Fraction(-9)))
    assert par.at(20)[1] == 0
    cert = new_section_independence(F, -9, s_values=[20])
    assert cert.verdict == "INCONCLUSIVE"
    assert cert.conclusion_rank == 2
    assert new_section_independence(F, -9).verdict == "PASS"


def test_double_base_change_genus_one():
    C = double_base_change(BQ, 2, 3)
    assert C.genus_one and C.pencil_discriminant != 0


@pytest.mark.parametrize("a,b", [(2, 0), (1, 3), (2, 2)])
def test_double_base_change_degenerate(a, b):
    C = double_base_change(BQ, a, b)
    assert not C.genus_one and C.degeneracies


def test_degenerate_control_search():
    C = double_base_change(BQ, 2, 0)
    pts = search_points_on_Cab(C, 10)
    assert (Fraction(1, 2), Fraction(5, 2), Fraction(1)) in pts
    # closed form: s^2 = 4 t^2, so every t with 6 + t^2 square is a hit
    for t, r, s in pts:
        assert r * r == 6 + t * t and s == 2 * abs(t)


def test_search_points_verified_and_empty():
    recs = cab_scan(BQ, range(-5, 6), range(-5, 6), 60)
    found = [(r["a"], r["b"], p) for r in recs for p in r["points"]]
    assert found
    for a, b, p in found:
        C = double_base_change(BQ, a, b)
        assert C.is_on(Fraction(p["t"]), Fraction(p["r"]), Fraction(p["s"]))
    assert search_points_on_Cab(double_base_change(BQ, 2, 3), 1) == []


def test_double_jump_report():
    C = double_base_change(BQ, -3, 4)
    pts = search_points_on_Cab(C, 20)
    assert pts
    rep = double_jump_report(BQ, -3, 4, pts[:1])
    assert rep["target"]["generic"] == 5 and rep["target"]["jumped_at_least"] == 7
    assert rep["candidate_t_values"] == [str(pts[0][0])]
    assert rep["fibres"][0]["X3"]["scored"] is False
    if rep["fibres"][0]["x1_leg_certified"]:
        assert rep["x1_certified_t_values"] == [str(pts[0][0])]
    assert double_jump_report(BQ, -3, 4, [])["fibres"] == []


def test_double_jump_rejects_wrong_degree():
    F = build_biquadratic([0, 1, -1, 2, -2], [4, 0, -1, 0, 1])
    with pytest.raises(FamilyError):
        double_jump_report(F, 3, 5, [])
