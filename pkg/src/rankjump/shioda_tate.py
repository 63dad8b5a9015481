"""Shioda-Tate bookkeeping: rho = r + 2 + sum_v (m_v - 1).

Neron-Severi ranks are not computed here; they come from conic-bundle
component counts, and the module only makes the two-fibration comparison
executable and consistency-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ShiodaTateError(ValueError):
    """Inconsistent fibration data (negative rank)."""


@dataclass(frozen=True)
class FibrationData:
    rho: int
    fiber_components: tuple = field(default=())
    trace_rank_contribution: int = 0

    def __post_init__(self):
        if self.rho < 2:
            raise ShiodaTateError("rho must be at least 2 (zero section and fibre class)")
        if any(m < 1 for m in self.fiber_components):
            raise ShiodaTateError("every fibre has at least one component")

    @property
    def fibre_excess(self) -> int:
        return sum(m - 1 for m in self.fiber_components)


def shioda_tate_rank(D: FibrationData) -> int:
    """Generic Mordell-Weil rank r = rho - 2 - sum (m_v - 1)."""
    r = D.rho - 2 - D.fibre_excess
    if r < 0:
        raise ShiodaTateError(f"negative rank {r}: rho={D.rho} too small for the fibre configuration")
    return r


def conic_bundle_rho(degenerate_fibers: int, reducible_splittings: int = 0) -> int:
    """Picard number of a conic bundle: 2 plus one per degenerate (two-line) fibre.

    `reducible_splittings` counts any additional components beyond the first
    two in a degenerate fibre.
    """
    if degenerate_fibers < 0 or reducible_splittings < 0:
        raise ValueError("counts must be non-negative")
    return 2 + degenerate_fibers + reducible_splittings


def shioda_surface_rank(d: int) -> dict:
    """Generic rank of y^2 = p(x) + t^2, deg p = d, with m_infinity eliminated.

    Over the t-line: 2(d-1) irreducible singular fibres plus the fibre at
    infinity with m_inf components, so rho = r + m_inf + 1.  Viewed as a conic
    bundle y^2 - t^2 = p(x) over the x-line, the d degenerate affine fibres give
    rho - m_inf = d.  Hence r = d - 1.
    """
    if d < 3 or d % 2 == 0:
        raise ValueError("need odd d >= 3")
    rho_minus_m_inf = d
    irreducible_bad = 2 * (d - 1)
    # rho = r + 2 + (m_inf - 1) + irreducible_bad * 0
    r = rho_minus_m_inf - 1
    return {"rho_minus_m_inf": rho_minus_m_inf, "irreducible_singular_fibres": irreducible_bad,
            "rank": r, "relation": "rho = r + m_inf + 1"}


def x3_surface_rank(d1: int, d2: int) -> dict:
    """Geometric generic rank of w^2 = (p(x) + t^2) q(x): conic bundle over the x-line with
    d1 + d2 + 1 degenerate fibres gives rho = d1 + d2 + 3; the rank over the t-line is d1,
    i.e. the singular t-fibres contribute d2 + 1 extra components."""
    rho = conic_bundle_rho(d1 + d2 + 1)
    rank = d1
    excess = rho - 2 - rank
    D = FibrationData(rho, tuple([2] * excess))
    if shioda_tate_rank(D) != rank:
        raise ShiodaTateError("inconsistent X3 bookkeeping")
    return {"rho": rho, "implied_fibre_excess": excess, "rank": rank}


def generic_rank_table(kind: str, d) -> dict:
    """Closed-form generic ranks (the upper-bound leg)."""
    if kind == "shioda":
        d = int(d)
        st = shioda_surface_rank(d)
        return {"kind": kind, "d": d, "genus": (d - 1) // 2, "rank": st["rank"], "shioda_tate": st}
    if kind == "biquadratic":
        d1, d2 = (int(v) for v in d)
        if d1 % 2 == 0 or d2 % 2:
            raise ValueError("need odd d1 and even d2")
        x1 = shioda_surface_rank(d1)["rank"]
        x3 = x3_surface_rank(d1, d2)
        return {"kind": kind, "d1": d1, "d2": d2, "X1": x1, "X3": x3["rank"],
                "total_mod_trace": x1 + x3["rank"], "trace_dimension": d2 // 2 - 1, "shioda_tate_X3": x3}
    raise ValueError(f"unknown family kind {kind!r}")
