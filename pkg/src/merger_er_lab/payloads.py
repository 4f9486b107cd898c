"""Analysis bundle shared by the CLI and the HTTP service.

Both channels serialize the same dict, so every number a client displays is
traceable to one computation here.
"""

from __future__ import annotations

from typing import Optional

from . import model
from .model import DEFAULT_EPS, Interval, MergerPair, PostMergerOutcome
from .sweep import DEFAULT_RESOLUTION, build_scene, scene_to_dict


def _iv(interval: Optional[Interval]) -> Optional[list[float]]:
    return None if interval is None else [interval.lo, interval.hi]


def build_analysis(
    pair: MergerPair,
    outcome: PostMergerOutcome,
    *,
    r_candidate: Optional[float] = None,
    eps: float = DEFAULT_EPS,
    resolution: int = DEFAULT_RESOLUTION,
    include_scene: bool = True,
) -> dict:
    """Compute the full region report for one admissible outcome.

    The implied synergy coordinates (s, v) always accompany the outcome, the
    synergy thresholds are evaluated at the implied v, and the candidate
    block is present only when a candidate ratio was supplied.
    """
    mu_m, rho_m = outcome.mu_m, outcome.rho_m
    report = model.classify(pair, mu_m, rho_m, eps=eps)
    s_implied = mu_m - pair.mu_sum
    v_implied = pair.rho_sum - rho_m

    payload: dict = {
        "inputs": {
            "a": {
                "price": pair.a.price,
                "shares": pair.a.shares,
                "risk_per_share": pair.a.risk_per_share,
            },
            "b": {
                "price": pair.b.price,
                "shares": pair.b.shares,
                "risk_per_share": pair.b.risk_per_share,
            },
            "mu_m": mu_m,
            "rho_m": rho_m,
            "s": s_implied,
            "v": v_implied,
        },
        "pair": {
            "mu_a": pair.mu_a,
            "mu_b": pair.mu_b,
            "rho_a": pair.rho_a,
            "rho_b": pair.rho_b,
            "mu_sum": pair.mu_sum,
            "rho_sum": pair.rho_sum,
            "rho_floor": pair.rho_floor,
            "r_star": pair.r_star,
            "r_star_star": pair.r_star_star,
            "lambda_a": pair.lambda_a,
            "lambda_b": pair.lambda_b,
        },
        "report": {
            "case": report.case_label.value,
            "interval": _iv(report.interval),
            "tie": report.tie,
        },
        "regions": {
            "br_mu": _iv(report.br_mu),
            "br_rho": _iv(report.br_rho),
            "cr_a": _iv(model.cr_a(pair, mu_m, rho_m)),
            "cr_b": _iv(model.cr_b(pair, mu_m, rho_m)),
        },
        "performance": {
            "lambda_m": model.lambda_m(pair, s_implied, v_implied),
            "reaches_a": model.lambda_m_comparisons(pair, s_implied, v_implied)[0],
            "reaches_b": model.lambda_m_comparisons(pair, s_implied, v_implied)[1],
        },
        "synergy_thresholds": {
            "a": {
                "required": model.min_synergy_a(pair, v_implied),
                "raw": model.min_synergy_a_raw(pair, v_implied),
            },
            "b": {
                "required": model.min_synergy_b(pair, v_implied),
                "raw": model.min_synergy_b_raw(pair, v_implied),
            },
        },
        "candidate": None,
    }

    if r_candidate is not None:
        verdicts = model.accepts(pair, mu_m, rho_m, r_candidate)
        interval = report.interval
        distance = None
        inside = False
        if interval is not None:
            inside = interval.contains(r_candidate)
            distance = min(abs(r_candidate - interval.lo), abs(r_candidate - interval.hi))
        payload["candidate"] = {
            "r": float(r_candidate),
            "verdicts": {
                "a_value": verdicts.a_value,
                "b_value": verdicts.b_value,
                "a_risk": verdicts.a_risk,
                "b_risk": verdicts.b_risk,
            },
            "all_accept": verdicts.all_accept,
            "inside": inside,
            "distance_to_nearest_endpoint": distance,
            "per_share_risk_b": model.per_share_risk_b(pair, rho_m, r_candidate),
        }

    if include_scene:
        payload["scene"] = scene_to_dict(
            build_scene(pair, mu_m, rho_m, resolution=resolution, eps=eps)
        )
    return payload
