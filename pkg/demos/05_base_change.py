"""Quadratic base change kills the rank; a conic base change adds a section."""
from rankjump.basechange import conic_base_change, new_section_independence, quadratic_pullback
from rankjump.families import build_shioda

G = build_shioda([-1, 0, 1])
print("t = u^2 pullback:", quadratic_pullback(G)["ranks"])

H = conic_base_change(G, 2)
par = H.parametrization
print(f"v^2 - t^2 = {par.c}: t = {par.t}, v = {par.v}; identity holds:", par.identity_holds())
print("new section P_a =", H.new_section.point)
cert = new_section_independence(G, 2)
print("rank over Q(s) at least", cert.conclusion_rank, cert.verdict)
for w in cert.data["witnesses"]:
    print("   witness s =", w["s"], "t0 =", w["t0"], "proven:", w["proven"])
