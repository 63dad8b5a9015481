"""Construct Shioda families and check their divisor relations exactly."""
from rankjump.families import bad_fiber_locus, build_biquadratic, build_shioda, verify_relations_biquadratic, verify_relations_shioda

for roots in ([-1, 0, 1], [-2, -1, 0, 1, 2]):
    F = build_shioda(roots)
    cert = verify_relations_shioda(F)
    print(F.name, "genus", F.genus, cert.verdict)
    for c in cert.checks:
        print("   ", "ok " if c.passed else "BAD", c.name)
    print("    bad fibres: roots in t of", bad_fiber_locus(F).polynomial)

B = build_biquadratic([-1, 0, 1], [4, 0, 11, 0, 1])
print(B.name, "X3 relation suite:", verify_relations_biquadratic(B).verdict)
