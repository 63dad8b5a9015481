"""Cantor arithmetic on Mumford pairs, over a finite field and over Q(t)."""
from rankjump.algebra import GF, Polynomial
from rankjump.curves import CurvePoint, HyperellipticCurve
from rankjump.independence import jacobian_order_mod_p
from rankjump.jacobian import cantor_add, embed, identity, scalar_mul

F = GF(7)
C = HyperellipticCurve(Polynomial([0, 4, 0, 2, 0, 1], F))  # y^2 = x^5 + 2x^3 + 4x, genus 2
N = jacobian_order_mod_p(C)
print("|J(F_7)| =", N, "from the L-polynomial")

P, Q = CurvePoint(F(1), F.sqrt(C.f(F(1)))), CurvePoint(F(3), F.sqrt(C.f(F(3))))
D = cantor_add(C, embed(C, P), embed(C, Q))
print("[P] + [Q] = (u, v) =", D.u, ",", D.v)
print("|J| * D is the identity:", scalar_mul(N, D) == identity(C))

# the same algorithm over Q(t): the sections (e_i, t) of y^2 = x^3 - x + t^2 sum to zero
from rankjump.families import build_shioda

G = build_shioda([-1, 0, 1])
total = identity(G.curve)
for i in (1, 2, 3):
    total = cantor_add(G.curve, total, embed(G.curve, G.section(f"P_{i}").point))
print("j(P_1) + j(P_2) + j(P_3) = 0 over Q(t):", total.is_identity())
