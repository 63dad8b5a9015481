import pytest
from hypothesis import given
from hypothesis import strategies as st

from rankjump.families import build_biquadratic, build_shioda
from rankjump.independence import certify_biquadratic_ranks, certify_generic_rank
from rankjump.shioda_tate import (
    FibrationData,
    ShiodaTateError,
    conic_bundle_rho,
    generic_rank_table,
    shioda_surface_rank,
    shioda_tate_rank,
    x3_surface_rank,
)


def test_shioda_tate_examples():
    assert shioda_tate_rank(FibrationData(10, (3, 3, 3, 2))) == 1
    assert shioda_tate_rank(FibrationData(10, (2,) * 8)) == 0
    assert shioda_surface_rank(3)["rank"] == 2
    assert shioda_surface_rank(5)["rank"] == 4


def test_negative_rank_rejected():
    with pytest.raises(ShiodaTateError):
        shioda_tate_rank(FibrationData(4, (5,)))
    with pytest.raises(ShiodaTateError):
        FibrationData(1)


def test_conic_bundle_rho():
    assert conic_bundle_rho(3) - 2 == 3  # rho - m_inf = d for the Shioda surface
    assert conic_bundle_rho(3 + 4 + 1) == 10
    assert conic_bundle_rho(0) == 2
    assert x3_surface_rank(3, 4)["rho"] == 10


def test_generic_rank_table():
    assert generic_rank_table("shioda", 7)["rank"] == 6
    T = generic_rank_table("biquadratic", (3, 4))
    assert (T["X1"], T["X3"], T["total_mod_trace"]) == (2, 3, 5)
    assert generic_rank_table("biquadratic", (5, 4))["total_mod_trace"] == 9


@given(st.integers(2, 40), st.lists(st.integers(1, 4), max_size=6))
def test_linear_in_rho_and_unit_fibres_free(rho, fibres):
    D = FibrationData(rho + sum(m - 1 for m in fibres), tuple(fibres))
    r = shioda_tate_rank(D)
    assert shioda_tate_rank(FibrationData(D.rho + 1, D.fiber_components)) == r + 1
    assert shioda_tate_rank(FibrationData(D.rho, D.fiber_components + (1,))) == r
    if r > 0:
        assert shioda_tate_rank(FibrationData(D.rho, D.fiber_components + (2,))) == r - 1


@pytest.mark.parametrize("roots", [[-1, 0, 1], [-2, -1, 0, 1, 2]])
def test_directions_agree_shioda(roots):
    F = build_shioda(roots)
    assert generic_rank_table("shioda", F.d)["rank"] == certify_generic_rank(F).conclusion_rank


def test_directions_agree_biquadratic():
    F = build_biquadratic([0, 1, -1], [4, 0, 11, 0, 1])
    res = certify_biquadratic_ranks(F)
    T = generic_rank_table("biquadratic", (3, 4))
    assert res["ranks"] == {"X1": T["X1"], "X3": T["X3"], "total_mod_trace": T["total_mod_trace"]}
