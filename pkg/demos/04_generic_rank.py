"""Generic ranks: lower bound from 2-torsion specialization, upper bound from Shioda-Tate."""
import json

from rankjump.families import build_biquadratic, build_shioda
from rankjump.independence import certify_biquadratic_ranks, certify_generic_rank
from rankjump.shioda_tate import generic_rank_table

for d in (3, 5, 7):
    F = build_shioda(list(range(-(d // 2), d // 2 + 1)))
    cert = certify_generic_rank(F)
    bound = generic_rank_table("shioda", d)["rank"]
    print(f"d={d}: F2-rank {cert.f2_rank}, torsion trivial {cert.torsion_trivial}, "
          f"upper bound {bound} -> rank {cert.conclusion_rank} [{cert.verdict}]")

res = certify_biquadratic_ranks(build_biquadratic([-1, 0, 1], [4, 0, 11, 0, 1]))
print("biquadratic table:", json.dumps(res["ranks"]), res["verdict"])
