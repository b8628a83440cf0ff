"""Exact classification of nets and pencils of plane conics, with the
cubic-curve invariants and the finite-algebra deformation checks that
certify the classification."""

from .classify import (
    EXPECTED_DUALS,
    FamilySpec,
    NetReport,
    classify_net,
    classify_pencil,
    dual_pairs_check,
    verify_family,
)
from .cubics import (
    AronholdReport,
    CubicType,
    apolar_generators,
    aronhold,
    classify_cubic,
    cubic_orbit_dimension,
    hesse_cubic,
    hesse_j,
    hesse_net,
    hessian_cubic,
    jacobian_net,
    jacobian_preimage,
    preimage_dimension,
)
from .deform import build_1r2, verify_deformation_1r2, verify_smoothing_133
from .forms import HForm, conic_matrix, parse_form
from .scalar import ONE, W, ZERO, Scalar, parse_scalar
from .spaces import (
    LinearSystem,
    discriminant_cubic,
    graded_quotient_report,
    orbit_dimension,
    orthogonal_complement,
    rank_one_report,
    rational_points,
    support_count,
)

__all__ = [
    "AronholdReport",
    "CubicType",
    "EXPECTED_DUALS",
    "FamilySpec",
    "HForm",
    "LinearSystem",
    "NetReport",
    "ONE",
    "Scalar",
    "W",
    "ZERO",
    "apolar_generators",
    "aronhold",
    "build_1r2",
    "classify_cubic",
    "classify_net",
    "classify_pencil",
    "conic_matrix",
    "cubic_orbit_dimension",
    "discriminant_cubic",
    "dual_pairs_check",
    "graded_quotient_report",
    "hesse_cubic",
    "hesse_j",
    "hesse_net",
    "hessian_cubic",
    "jacobian_net",
    "jacobian_preimage",
    "orbit_dimension",
    "orthogonal_complement",
    "parse_form",
    "parse_scalar",
    "preimage_dimension",
    "rank_one_report",
    "rational_points",
    "support_count",
    "verify_deformation_1r2",
    "verify_family",
    "verify_smoothing_133",
]
