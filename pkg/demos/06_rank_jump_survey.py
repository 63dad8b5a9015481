"""Specialize the conic base change and certify rank >= 3 on fibres by heights."""
from rankjump.basechange import conic_base_change
from rankjump.families import build_shioda
from rankjump.specialization import gram_matrix, integral_model, rank_jump_search, specialize

G = build_shioda([-1, 0, 1])
fib = specialize(conic_base_change(G, 2), 5)
M = integral_model(fib.curve, [fib.point(lab) for lab in ("P_1", "P_2", "P_a")])
print("s = 5: fibre", fib.curve.f, "-> Y^2 = X^3 + (%s)X + (%s)" % (M.curve.a4, M.curve.a6))
gm = gram_matrix(M.curve, M.points)
print(f"   Gram det {gm['determinant']:.4f} +- {gm['determinant_error']:.2g}, independent: {gm['independent']}")

res = rank_jump_search(G, 2, range(2, 16), eps=1e-2, doublings=6)
for r in res["records"]:
    tag = "skipped" if r.get("skipped") else ("duplicate" if r.get("duplicate_of_s") else
                                              ("certified" if r["certified"] else f"relation {r['relation']}"))
    print("   s =", r["s"], tag)
print("certified fibres:", res["certified_fibres"])
