"""Exact Jacobian arithmetic and rank certificates for Shioda-type hyperelliptic families."""

from .basechange import (
    ConicParametrization,
    DoubleBaseChangeCurve,
    cab_scan,
    conic_base_change,
    double_base_change,
    double_jump_report,
    new_section_independence,
    quadratic_pullback,
    search_points_on_Cab,
)
from .certificate import Certificate, Check
from .curves import INFINITY, CurvePoint, HyperellipticCurve, curve_from_json, make_curve, on_curve
from .elliptic import WeierstrassCurve
from .families import (
    BiquadraticFamily,
    ShiodaFamily,
    bad_fiber_locus,
    build_biquadratic,
    build_shioda,
    family_from_config,
    load_family,
    verify_relations_biquadratic,
    verify_relations_shioda,
)
from .independence import (
    IndependenceCertificate,
    TwoTorsionVector,
    certify_biquadratic_ranks,
    certify_generic_rank,
    count_points,
    f2_rank,
    galois_twist_conclusion,
    jacobian_order_mod_p,
    nontorsion_witness,
    reduce_curve_mod_p,
    specialize_to_two_torsion,
    two_torsion_trivial_over_Kt,
)
from .jacobian import (
    MumfordDivisor,
    apply_automorphism,
    cantor_add,
    embed,
    identity,
    negate,
    preimage_degree,
    reduce_divisor,
    scalar_mul,
)
from .shioda_tate import FibrationData, conic_bundle_rho, generic_rank_table, shioda_tate_rank
from .specialization import (
    HeightEstimate,
    SpecializedFiber,
    canonical_height,
    gram_matrix,
    integral_model,
    rank_jump_search,
    small_relation_search,
    specialize,
)

__version__ = "0.1.0"
