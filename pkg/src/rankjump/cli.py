"""Batch front end: rankjump {verify, certify, basechange, search, cab-scan, shioda-tate}."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .basechange import (
    BaseChangeError,
    cab_scan,
    double_base_change,
    double_jump_report,
    new_section_independence,
    quadratic_pullback,
    search_points_on_Cab,
)
from .families import BiquadraticFamily, FamilyError, load_family, verify_relations_biquadratic, verify_relations_shioda
from .independence import certify_biquadratic_ranks, certify_generic_rank
from .shioda_tate import FibrationData, ShiodaTateError, shioda_tate_rank
from .specialization import rank_jump_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _primes(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"bad prime list {text!r}") from exc


def _int_range(text: str) -> list:
    """'2..40' (inclusive) or a comma list."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [Fraction(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}") from exc


def _family(args):
    try:
        return load_family(args.family)
    except FileNotFoundError as exc:
        raise UsageError(f"family file not found: {args.family}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"family file is not valid JSON: {exc}") from exc
    except (FamilyError, ValueError) as exc:
        raise UsageError(f"invalid family: {exc}") from exc


def cmd_verify(args):
    F = _family(args)
    cert = verify_relations_biquadratic(F) if isinstance(F, BiquadraticFamily) else verify_relations_shioda(F)
    out = cert.to_dict()
    return out, cert.passed


def cmd_certify(args):
    F = _family(args)
    primes = _primes(args.primes)
    if isinstance(F, BiquadraticFamily):
        out = certify_biquadratic_ranks(F, primes)
        return out, out["verdict"] == "PASS"
    cert = certify_generic_rank(F)
    out = cert.to_dict()
    out["pullback"] = quadratic_pullback(F)
    return out, cert.verdict == "PASS" and out["pullback"]["verdict"] == "PASS"


def cmd_basechange(args):
    F = _family(args)
    if args.a is None:
        raise UsageError("basechange needs --a")
    primes = _primes(args.primes)
    if args.b is None:
        base = F.X1 if isinstance(F, BiquadraticFamily) else F
        cert = new_section_independence(base, Fraction(args.a), primes=primes)
        return cert.to_dict(), cert.verdict == "PASS"
    if not isinstance(F, BiquadraticFamily):
        raise UsageError("--b needs a biquadratic family (with q)")
    C = double_base_change(F, Fraction(args.a), Fraction(args.b))
    pts = search_points_on_Cab(C, args.height)
    out = {"claim": "C_ab-point-search", "curve": C.to_dict(), "height_bound": args.height,
           "points": [{"t": str(t), "r": str(r), "s": str(s)} for t, r, s in pts]}
    if C.genus_one and pts and F.p.degree == 3 and F.q.degree == 4:
        out["report"] = double_jump_report(F, args.a, args.b, pts, eps=args.eps)
    return out, True


def cmd_search(args):
    F = _family(args)
    if isinstance(F, BiquadraticFamily):
        F = F.X1
    if args.a is None:
        raise UsageError("search needs --a")
    survey = rank_jump_search(F, Fraction(args.a), _int_range(args.s_num), eps=args.eps,
                              doublings=args.doublings, coeff_bound=args.coeff_bound)
    lines = [{"record": r} for r in survey["records"]]
    summary = {k: v for k, v in survey.items() if k != "records"}
    lines.append({"summary": summary})
    return lines, True


def cmd_cab_scan(args):
    F = _family(args)
    if not isinstance(F, BiquadraticFamily):
        raise UsageError("cab-scan needs a biquadratic family (with q)")
    recs = cab_scan(F, _int_range(args.a_range), _int_range(args.b_range), args.height)
    return [{"record": r} for r in recs], True


def cmd_shioda_tate(args):
    if args.rho is None:
        raise UsageError("shioda-tate needs --rho")
    known, symbolic = [], []
    for tok in (args.fibers or "").split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            known.append(int(tok))
        except ValueError:
            symbolic.append(tok)
    if len(symbolic) > 1:
        raise UsageError("at most one symbolic fibre count is supported")
    try:
        if symbolic and args.m_inf is None:
            D = FibrationData(args.rho, tuple(known))
            const = args.rho - 1 - D.fibre_excess
            out = {"claim": "shioda-tate", "rho": args.rho, "fibers": known, "unknown": symbolic[0],
                   "rank_expression": f"{const} - {symbolic[0]}", "rank_constant": const}
            return out, True
        if symbolic:
            known.append(args.m_inf)
        D = FibrationData(args.rho, tuple(known))
        r = shioda_tate_rank(D)
    except ShiodaTateError as exc:
        return {"claim": "shioda-tate", "rho": args.rho, "fibers": known, "error": str(exc)}, False
    return {"claim": "shioda-tate", "rho": args.rho, "fibers": known, "rank": r}, True


COMMANDS = {
    "verify": cmd_verify,
    "certify": cmd_certify,
    "basechange": cmd_basechange,
    "search": cmd_search,
    "cab-scan": cmd_cab_scan,
    "shioda-tate": cmd_shioda_tate,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankjump", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, family=True):
        if family:
            p.add_argument("--family", required=True, help="family config JSON")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--seed", type=int, default=0, help="recorded for reproducibility")
        return p

    common(sub.add_parser("verify", help="relation suite over Q(t)"))
    p = common(sub.add_parser("certify", help="generic rank certificates"))
    p.add_argument("--primes", default="5,7,11")
    p = common(sub.add_parser("basechange", help="conic base change / C_ab point search"))
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--height", type=int, default=200)
    p.add_argument("--primes", default="5,7,11")
    p.add_argument("--eps", type=float, default=1e-2)
    p = common(sub.add_parser("search", help="rank-jump survey (JSON lines)"))
    p.add_argument("--a")
    p.add_argument("--s-num", default="2..40")
    p.add_argument("--eps", type=float, default=1e-2)
    p.add_argument("--doublings", type=int, default=6)
    p.add_argument("--coeff-bound", type=int, default=10)
    p = common(sub.add_parser("cab-scan", help="scan (a, b) for points on C_ab (JSON lines)"))
    p.add_argument("--a-range", default="-5..5")
    p.add_argument("--b-range", default="-5..5")
    p.add_argument("--height", type=int, default=200)
    p = common(sub.add_parser("shioda-tate", help="rank from rho and fibre components"), family=False)
    p.add_argument("--rho", type=int)
    p.add_argument("--fibers", default="")
    p.add_argument("--m-inf", type=int, help="value for a symbolic fibre count")
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    config = {k: v for k, v in sorted(vars(args).items()) if k != "out"}
    try:
        result, ok = COMMANDS[args.command](args)
    except (UsageError, FamilyError, BaseChangeError) as exc:
        print(f"rankjump: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # invariant violation: report as a bug
        print(f"rankjump: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BUG
    if isinstance(result, list):
        text = "".join(json.dumps(dict(line, config=config), sort_keys=True) + "\n" for line in result)
    else:
        text = _dump(dict(result, config=config)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
