"""Feasible exchange-ratio regions for stock-for-stock mergers."""

from .errors import (
    EncodingFailure,
    Inadmissible,
    InvalidCase,
    InvalidProfile,
    InvalidRiskReduction,
    NegativeSynergy,
    NotAnInterval,
    ParseError,
    RegionError,
    ValidationError,
)
from .kulpa import (
    CaseRange,
    CurveKind,
    Hyperbola,
    KulpaPoint,
    Locus,
    br_mu_point,
    br_rho_point,
    case_mu_range,
    case_rho_range,
    intersect_points,
    locus_fixed_mu,
    locus_fixed_rho,
    mu_curve,
    mu_curve_residual,
    rho_curve,
    rho_curve_residual,
    to_interval,
    to_point,
)
from .model import (
    DEFAULT_EPS,
    Acceptance,
    CaseLabel,
    CompanyProfile,
    Interval,
    MergerPair,
    PostMergerOutcome,
    RegionReport,
    SynergyView,
    accepts,
    br_mu,
    br_rho,
    classify,
    cr_a,
    cr_b,
    derive_pair,
    lambda_m,
    lambda_m_comparisons,
    min_synergy_a,
    min_synergy_a_raw,
    min_synergy_b,
    min_synergy_b_raw,
    mu_bounds,
    outcome_from_synergy,
    per_share_risk_b,
    rho_bounds,
)
from .sweep import (
    DEFAULT_RESOLUTION,
    Marker,
    Polyline,
    Scene,
    Series,
    SvgStyle,
    build_scene,
    emit_csv,
    emit_svg,
    scene_to_dict,
    series_to_dict,
    sweep_br_mu,
    sweep_br_rho,
    sweep_curve,
)

__version__ = "0.1.0"

__all__ = [
    "Acceptance",
    "CaseLabel",
    "CaseRange",
    "CompanyProfile",
    "CurveKind",
    "DEFAULT_EPS",
    "DEFAULT_RESOLUTION",
    "EncodingFailure",
    "Hyperbola",
    "Inadmissible",
    "Interval",
    "InvalidCase",
    "InvalidProfile",
    "InvalidRiskReduction",
    "KulpaPoint",
    "Locus",
    "Marker",
    "MergerPair",
    "NegativeSynergy",
    "NotAnInterval",
    "ParseError",
    "Polyline",
    "PostMergerOutcome",
    "RegionError",
    "RegionReport",
    "Scene",
    "Series",
    "SvgStyle",
    "SynergyView",
    "ValidationError",
    "accepts",
    "br_mu",
    "br_mu_point",
    "br_rho",
    "br_rho_point",
    "build_scene",
    "case_mu_range",
    "case_rho_range",
    "classify",
    "cr_a",
    "cr_b",
    "derive_pair",
    "emit_csv",
    "emit_svg",
    "intersect_points",
    "lambda_m",
    "lambda_m_comparisons",
    "locus_fixed_mu",
    "locus_fixed_rho",
    "min_synergy_a",
    "min_synergy_a_raw",
    "min_synergy_b",
    "min_synergy_b_raw",
    "mu_bounds",
    "mu_curve",
    "mu_curve_residual",
    "outcome_from_synergy",
    "per_share_risk_b",
    "rho_bounds",
    "rho_curve",
    "rho_curve_residual",
    "scene_to_dict",
    "series_to_dict",
    "sweep_br_mu",
    "sweep_br_rho",
    "sweep_curve",
    "to_interval",
    "to_point",
]
