"""Points on the genus-one curves C_(a,b) give candidate fibres with two extra sections."""
from fractions import Fraction

from rankjump.basechange import cab_scan, double_base_change, double_jump_report, search_points_on_Cab
from rankjump.families import build_biquadratic

B = build_biquadratic([-1, 0, 1], [4, 0, 11, 0, 1])
ctrl = double_base_change(B, 2, 0)
print("degenerate control (a, b) = (2, 0):", ctrl.degeneracies, search_points_on_Cab(ctrl, 10)[:2])

recs = [r for r in cab_scan(B, range(-5, 6), range(-5, 6), 200) if r["points"]]
print(len(recs), "curves C_(a,b) with points of height <= 200")
r = recs[0]
a, b = Fraction(r["a"]), Fraction(r["b"])
pts = [(Fraction(p["t"]), Fraction(p["r"]), Fraction(p["s"])) for p in r["points"]]
rep = double_jump_report(B, a, b, pts[:1])
f = rep["fibres"][0]
print(f"(a, b) = ({a}, {b}), t = {f['t']}: X1 Gram det {f['X1']['determinant']:.3f}, "
      f"X1 leg certified {f['x1_leg_certified']}, X3 leg scored {f['X3']['scored']}")
