"""One test per acceptance criterion; each records a "CRITERION n: PASS/FAIL" line."""

import random
import time
from fractions import Fraction

import conftest
from oracles import check_group_axioms, count_points_brute
from rankjump.algebra import GF, QQs, Polynomial
from rankjump.basechange import (
    ConicParametrization,
    cab_scan,
    conic_base_change,
    double_base_change,
    double_jump_report,
    new_section_independence,
    quadratic_pullback,
    search_points_on_Cab,
)
from rankjump.curves import HyperellipticCurve, on_curve
from rankjump.elliptic import WeierstrassCurve
from rankjump.families import build_biquadratic, build_shioda, verify_relations_biquadratic, verify_relations_shioda
from rankjump.independence import certify_biquadratic_ranks, certify_generic_rank, jacobian_order_mod_p
from rankjump.jacobian import preimage_degree
from rankjump.shioda_tate import generic_rank_table
from rankjump.specialization import canonical_height, integral_model, rank_jump_search, specialize

G1 = build_shioda([-1, 0, 1])
G2 = build_shioda([-2, -1, 0, 1, 2])
G3 = build_shioda([-3, -2, -1, 0, 1, 2, 3])
BQ = build_biquadratic([-1, 0, 1], [4, 0, 11, 0, 1])


def record(n, ok, detail):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_relation_suite():
    t0 = time.perf_counter()
    certs = [verify_relations_shioda(F) for F in (G1, G2)]
    dt = time.perf_counter() - t0
    checks = sum(len(c.checks) for c in certs)
    record(1, all(c.passed for c in certs) and dt < 10, f"{checks} exact checks on g=1,2 in {dt:.2f}s")


def test_criterion_2_generic_ranks():
    t0 = time.perf_counter()
    out = []
    for F, expected in ((G1, 2), (G2, 4), (G3, 6)):
        cert = certify_generic_rank(F)
        bound = generic_rank_table("shioda", F.d)["rank"]
        out.append(cert.verdict == "PASS" and cert.conclusion_rank == expected == bound
                   and cert.f2_rank == expected and cert.torsion_trivial)
    dt = time.perf_counter() - t0
    record(2, all(out) and dt < 30, f"ranks 2,4,6 with matching upper bounds in {dt:.2f}s")


def test_criterion_3_biquadratic_table():
    t0 = time.perf_counter()
    res = certify_biquadratic_ranks(BQ)
    suite = verify_relations_biquadratic(BQ)
    C = BQ.X3_curve
    dt = time.perf_counter() - t0
    table = (res["ranks"]["X1"], res["ranks"]["X3"], res["ranks"]["total_mod_trace"])
    ok = (table == (2, 3, 5) and res["verdict"] == "PASS" and suite.passed
          and C.genus == 3 and C.f.degree % 2 == 1 and dt < 60)
    record(3, ok, f"table {table}, X3 suite on genus {C.genus} model in {dt:.2f}s")


def test_criterion_4_quadratic_base_change():
    recs = [quadratic_pullback(F) for F in (G1, G2)]
    ok = all(r["verdict"] == "PASS" for r in recs) and [
        (r["ranks"]["k(u)"], r["ranks"]["k(t)"]) for r in recs] == [(0, 2), (0, 4)]
    record(4, ok, "rank 0 over k(u), 2g over k(t) for g=1,2")


def test_criterion_5_new_section():
    t0 = time.perf_counter()
    par = ConicParametrization(G1.p(Fraction(2)))
    G = conic_base_change(G1, 2)
    on = G.curve.field == QQs and all(on_curve(G.curve, S.point) for S in G.sections)
    cert = new_section_independence(G1, 2, primes=(5, 7, 11))
    proven = [w for w in cert.data["witnesses"] if w["proven"]]
    dt = time.perf_counter() - t0
    ok = par.identity_holds() and on and cert.verdict == "PASS" and cert.conclusion_rank == 3 \
        and len(proven) >= 2 and dt < 60
    record(5, ok, f"rank >= 3, {len(proven)} witnesses proven at primes 5,7,11 in {dt:.2f}s")


def test_criterion_6_rank_jump_survey():
    t0 = time.perf_counter()
    s_values = list(range(2, 41))
    res = rank_jump_search(G1, 2, s_values, eps=1e-2, doublings=6, coeff_bound=10)
    dt = time.perf_counter() - t0
    cert = [r for r in res["records"] if r.get("certified")]
    sound = all(r["determinant"] - r["determinant_error"] > 1e-2 and r["relation"] is None for r in cert)
    ok = len(s_values) >= 30 and len(cert) >= 10 and sound and dt < 1200
    record(6, ok, f"{len(cert)} of {len(s_values)} fibres certified rank >= 3 in {dt:.1f}s")


def test_criterion_7_height_properties():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    models = []
    for s in (5, 6, 7, 9, 11):
        fib = specialize(conic_base_change(G1, 2), s)
        models.append(integral_model(fib.curve, [fib.point(lab) for lab in ("P_1", "P_2", "P_a")]))
    pts = []
    while len(pts) < 20:
        M = models[len(pts) % 5]
        E = M.curve
        P = None
        for Q in M.points:
            P = E.add(P, E.mul(rng.randint(-1, 1), Q))
        if P is not None and E.torsion_order(P) is None:
            pts.append((E, P))
    bad = 0
    for k, (E, P) in enumerate(pts):
        h = canonical_height(E, P)
        h2 = canonical_height(E, E.mul(2, P))
        bad += abs(h2.value - 4 * h.value) > h2.error_bound + 4 * h.error_bound
        _, Q = pts[(k + 5) % 20]
        parts = [canonical_height(E, R) for R in (E.add(P, Q), E.sub(P, Q), P, Q)]
        lhs = parts[0].value + parts[1].value - 2 * parts[2].value - 2 * parts[3].value
        bound = parts[0].error_bound + parts[1].error_bound + 2 * parts[2].error_bound + 2 * parts[3].error_bound
        bad += abs(lhs) > bound
    torsion = [
        (WeierstrassCurve(Fraction(0), Fraction(0), Fraction(1)), (Fraction(2), Fraction(3))),
        (WeierstrassCurve(Fraction(0), Fraction(-43), Fraction(166)), (Fraction(3), Fraction(8))),
        (WeierstrassCurve(Fraction(0), Fraction(-1), Fraction(0)), (Fraction(1), Fraction(0))),
    ]
    zero = all(canonical_height(E, P).value == 0 and canonical_height(E, P).exact for E, P in torsion)
    dt = time.perf_counter() - t0
    record(7, bad == 0 and zero and dt < 600,
           f"20 points on 5 curves, {bad} violations, torsion heights exactly 0, {dt:.1f}s")


def test_criterion_8_group_law_oracle():
    t0 = time.perf_counter()
    cases = [
        (Polynomial([0, -1, 0, 1], GF(5)), 8),
        (Polynomial([0, -1, 0, 0, 0, 1], GF(5)), None),
        (Polynomial([0, 4, 0, 2, 0, 1], GF(7)), None),
    ]
    ok = True
    sizes = []
    for f, expected in cases:
        C = HyperellipticCurve(f)
        n, res = check_group_axioms(C)
        sizes.append(n)
        if expected is not None:
            ok &= n == expected == count_points_brute(f, f.field.p)
        ok &= n == jacobian_order_mod_p(C) and all(res.values())
    dt = time.perf_counter() - t0
    record(8, ok and dt < 60, f"|J| = {sizes}, all axioms exhaustive in {dt:.1f}s")


def test_criterion_9_double_base_change():
    t0 = time.perf_counter()
    ctrl = double_base_change(BQ, 2, 0)
    ctrl_ok = (Fraction(1, 2), Fraction(5, 2), Fraction(1)) in search_points_on_Cab(ctrl, 10) and not ctrl.genus_one
    recs = cab_scan(BQ, range(-5, 6), range(-5, 6), 200)
    hits = [(Fraction(r["a"]), Fraction(r["b"]), p) for r in recs for p in r["points"]]
    report_ok = False
    if hits:
        a, b, p = hits[0]
        pt = (Fraction(p["t"]), Fraction(p["r"]), Fraction(p["s"]))
        rep = double_jump_report(BQ, a, b, [pt])
        fib = rep["fibres"][0]
        report_ok = (rep["target"]["generic"] == 5 and rep["target"]["jumped_at_least"] == 7
                     and rep["candidate_t_values"] == [p["t"]] and "determinant" in fib["X1"])
        scored = fib["x1_leg_certified"]
    dt = time.perf_counter() - t0
    ok = ctrl_ok and bool(hits) and report_ok and dt < 1800
    record(9, ok, f"control hit t=1/2, {len(hits)} scan hits, X1 leg certified={scored if hits else None}, {dt:.1f}s")


def test_criterion_10_degree_formula():
    ok = all(preimage_degree(n, g) == n ** (2 * g) for n in range(1, 6) for g in range(1, 6))
    # independent cross-check: J[2] has 2^(2g) points when all Weierstrass points are rational
    from rankjump.jacobian import scalar_mul
    from oracles import group_table

    elems, _, _ = group_table(HyperellipticCurve(Polynomial([0, -1, 0, 0, 0, 1], GF(5))))
    two = sum(scalar_mul(2, D).is_identity() for D in elems)
    record(10, ok and two == preimage_degree(2, 2), f"n<=5, g<=5 closed form; |J[2]| = {two} for g=2")
