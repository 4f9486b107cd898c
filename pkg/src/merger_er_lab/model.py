"""Feasible exchange-ratio regions for a stock-for-stock merger.

Two firms A (acquirer) and B (target) enter a merger in which B's shares are
swapped for newly issued A shares at an exchange ratio r, so the merged firm
has N_M = N_A + r*N_B shares outstanding.  Each firm i is described by its
share price p_i, share count N_i and per-share risk charge phi_i.  Aggregates:

    mu_i  = p_i * N_i      market value
    rho_i = phi_i * N_i    total risk
    lambda_i = p_i / phi_i risk-corrected performance (value per unit risk)

Reference ratios:

    r*  = p_B / p_A        price ratio: both sides' value per share is
                           preserved exactly when mu_M = mu_A + mu_B
    r** = phi_B / phi_A    risk ratio: the analogue for total risk

A post-merger outcome (mu_M, rho_M) is admissible when it creates value and
does not create risk:

    mu_M  >= mu_A + mu_B
    max{rho_A, rho_B} < rho_M <= rho_A + rho_B

Requiring both sides to gain value and both sides to shed (or hold) risk per
share pins r into two intervals:

    BR_mu(mu_M)  = [ r* mu_A / (mu_M - mu_B),  r* (mu_M - mu_A) / mu_B ]
    BR_rho(rho_M)= [ r** (rho_M - rho_A) / rho_B,  r** rho_A / (rho_M - rho_B) ]

Their intersection, when non-empty, is the feasible region.  The relative
position of the two intervals yields four cases plus two empty outcomes; the
one-sided mixed regions are

    CR_A = [ BR_rho.lo, BR_mu.hi ]   non-empty iff (mu_M-mu_A)/(rho_M-rho_A) >= lambda_A
    CR_B = [ BR_mu.lo, BR_rho.hi ]   non-empty iff (mu_M-mu_B)/(rho_M-rho_B) >= lambda_B

Synergy s and risk reduction v parameterize outcomes via mu_M = mu_A+mu_B+s,
rho_M = rho_A+rho_B-v (valid iff 0 <= v < min{rho_A, rho_B}).  All monetary
quantities are unit-agnostic; everything here is pure and immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .errors import (
    Inadmissible,
    InvalidProfile,
    InvalidRiskReduction,
    NegativeSynergy,
)

#: Absolute tolerance on the (dimensionless) ratio scale for endpoint
#: comparisons in classify.  Configurable per call.
DEFAULT_EPS = 1e-12


def _require_positive_finite(value: float, path: str) -> float:
    v = float(value)
    if not math.isfinite(v) or v <= 0.0:
        raise InvalidProfile(f"{path} must be a positive finite number, got {value!r}", path=path)
    return v


@dataclass(frozen=True, slots=True)
class CompanyProfile:
    """One firm: share price, share count, per-share risk charge."""

    price: float
    shares: float
    risk_per_share: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "price", _require_positive_finite(self.price, "price"))
        object.__setattr__(self, "shares", _require_positive_finite(self.shares, "shares"))
        object.__setattr__(
            self, "risk_per_share", _require_positive_finite(self.risk_per_share, "risk_per_share")
        )

    @property
    def market_value(self) -> float:
        return self.price * self.shares

    @property
    def total_risk(self) -> float:
        return self.risk_per_share * self.shares

    @property
    def performance(self) -> float:
        """Risk-corrected performance lambda = price / risk_per_share."""
        return self.price / self.risk_per_share


@dataclass(frozen=True, slots=True)
class MergerPair:
    """Acquirer A and target B with the derived aggregates."""

    a: CompanyProfile
    b: CompanyProfile

    @property
    def mu_a(self) -> float:
        return self.a.market_value

    @property
    def mu_b(self) -> float:
        return self.b.market_value

    @property
    def rho_a(self) -> float:
        return self.a.total_risk

    @property
    def rho_b(self) -> float:
        return self.b.total_risk

    @property
    def r_star(self) -> float:
        """Price ratio p_B / p_A."""
        return self.b.price / self.a.price

    @property
    def r_star_star(self) -> float:
        """Risk ratio phi_B / phi_A; never an independent input."""
        return self.b.risk_per_share / self.a.risk_per_share

    @property
    def lambda_a(self) -> float:
        return self.a.performance

    @property
    def lambda_b(self) -> float:
        return self.b.performance

    @property
    def mu_sum(self) -> float:
        return self.mu_a + self.mu_b

    @property
    def rho_sum(self) -> float:
        return self.rho_a + self.rho_b

    @property
    def rho_floor(self) -> float:
        """Open lower end of the admissible rho_M range."""
        return max(self.rho_a, self.rho_b)


def derive_pair(a: CompanyProfile, b: CompanyProfile) -> MergerPair:
    """Bundle two validated profiles; aggregates are exact products."""
    return MergerPair(a=a, b=b)


@dataclass(frozen=True, slots=True)
class PostMergerOutcome:
    """Combined market value and total risk of the merged firm."""

    mu_m: float
    rho_m: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu_m", _require_positive_finite(self.mu_m, "mu_m"))
        object.__setattr__(self, "rho_m", _require_positive_finite(self.rho_m, "rho_m"))


@dataclass(frozen=True, slots=True)
class SynergyView:
    """Outcome expressed as synergy s >= 0 and risk reduction v >= 0."""

    s: float
    v: float

    def __post_init__(self) -> None:
        s = float(self.s)
        v = float(self.v)
        if not math.isfinite(s) or s < 0.0:
            raise NegativeSynergy(f"synergy s must be >= 0, got {self.s!r}", path="s")
        if not math.isfinite(v) or v < 0.0:
            raise InvalidRiskReduction(f"risk reduction v must be >= 0, got {self.v!r}", path="v")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "v", v)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] of exchange ratios or sweep parameters."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo = float(self.lo)
        hi = float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints must not be NaN")
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def singleton(cls, value: float) -> "Interval":
        return cls(value, value)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def is_singleton(self, tol: float = 0.0) -> bool:
        return self.width <= tol

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= value <= self.hi + tol

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None


class CaseLabel(str, Enum):
    """Relative position of BR_mu = [a, b] and BR_rho = [c, d]."""

    CASE1_CR_B = "Case1CrB"        # c <= a, d <= b: intersection [a, d]
    CASE2_BR_MU = "Case2BrMu"      # c <= a, d >= b: BR_mu inside BR_rho
    CASE3_BR_RHO = "Case3BrRho"    # c >= a, d <= b: BR_rho inside BR_mu
    CASE4_CR_A = "Case4CrA"        # c >= a, d >= b: intersection [c, b]
    EMPTY_RHO_BELOW_MU = "EmptyRhoBelowMu"  # d < a
    EMPTY_MU_BELOW_RHO = "EmptyMuBelowRho"  # b < c

    @property
    def is_empty(self) -> bool:
        return self in (CaseLabel.EMPTY_RHO_BELOW_MU, CaseLabel.EMPTY_MU_BELOW_RHO)


@dataclass(frozen=True, slots=True)
class RegionReport:
    """Classification outcome: label, feasible interval, both source regions.

    ``interval`` is present exactly for the four non-empty cases and then
    equals br_mu intersected with br_rho.  ``tie`` records that coinciding
    endpoints made several labels describe the same intersection and the
    fixed priority Case2 > Case1 > Case4 > Case3 picked one.
    """

    case_label: CaseLabel
    interval: Optional[Interval]
    br_mu: Interval
    br_rho: Interval
    tie: bool = False


class Acceptance(NamedTuple):
    """Outcome of the four defining inequalities at a candidate ratio."""

    a_value: bool
    b_value: bool
    a_risk: bool
    b_risk: bool

    @property
    def all_accept(self) -> bool:
        return self.a_value and self.b_value and self.a_risk and self.b_risk


# --- admissibility -----------------------------------------------------------


def check_mu_admissible(pair: MergerPair, mu_m: float) -> None:
    if not math.isfinite(mu_m):
        raise Inadmissible(f"mu_m must be finite, got {mu_m!r}", path="mu_m")
    if mu_m < pair.mu_sum:
        raise NegativeSynergy(
            f"mu_m={mu_m} below combined stand-alone value {pair.mu_sum}", path="mu_m"
        )


def check_rho_admissible(pair: MergerPair, rho_m: float) -> None:
    if not math.isfinite(rho_m):
        raise Inadmissible(f"rho_m must be finite, got {rho_m!r}", path="rho_m")
    if not (pair.rho_floor < rho_m <= pair.rho_sum):
        raise Inadmissible(
            f"rho_m={rho_m} outside ({pair.rho_floor}, {pair.rho_sum}]", path="rho_m"
        )


# --- exchange-ratio bounds ---------------------------------------------------


def mu_bounds(pair: MergerPair, mu_m: float) -> tuple[float, float]:
    """Value-side bounds (lower, upper) on r at combined value mu_m.

    lower keeps A whole (per-share value of A not diluted); upper keeps B
    whole.  Both require mu_m to exceed each stand-alone value so the
    denominators stay positive.
    """
    if not math.isfinite(mu_m) or mu_m <= pair.mu_b or mu_m <= pair.mu_a:
        raise Inadmissible(
            f"mu_m={mu_m!r} must exceed both stand-alone values "
            f"({pair.mu_a}, {pair.mu_b})",
            path="mu_m",
        )
    lower = pair.r_star * pair.mu_a / (mu_m - pair.mu_b)
    upper = pair.r_star * (mu_m - pair.mu_a) / pair.mu_b
    return lower, upper


def rho_bounds(pair: MergerPair, rho_m: float) -> tuple[float, float]:
    """Risk-side bounds (lower, upper) on r at combined risk rho_m.

    lower keeps B's per-share risk from rising; upper does the same for A.
    Requires rho_m > max{rho_A, rho_B}.
    """
    if not math.isfinite(rho_m) or rho_m <= pair.rho_floor:
        raise Inadmissible(
            f"rho_m={rho_m!r} must exceed max stand-alone risk {pair.rho_floor}", path="rho_m"
        )
    lower = pair.r_star_star * (rho_m - pair.rho_a) / pair.rho_b
    upper = pair.r_star_star * pair.rho_a / (rho_m - pair.rho_b)
    return lower, upper


def _ordered(lower: float, upper: float) -> Interval:
    # Admissibility makes both regions provably non-empty, so an inverted
    # pair is cancellation noise near the singleton limit; take the midpoint.
    if lower > upper:
        return Interval.singleton(0.5 * (lower + upper))
    return Interval(lower, upper)


def br_mu(pair: MergerPair, mu_m: float) -> Interval:
    """Value bargaining region; collapses to {r*} at zero synergy."""
    check_mu_admissible(pair, mu_m)
    return _ordered(*mu_bounds(pair, mu_m))


def br_rho(pair: MergerPair, rho_m: float) -> Interval:
    """Risk bargaining region; collapses to {r**} at zero risk reduction."""
    check_rho_admissible(pair, rho_m)
    return _ordered(*rho_bounds(pair, rho_m))


def cr_a(pair: MergerPair, mu_m: float, rho_m: float) -> Optional[Interval]:
    """Mixed region favoring A: risk-side lower bound to value-side upper.

    Non-empty iff the outcome's marginal performance over A,
    (mu_m - mu_a) / (rho_m - rho_a), is at least lambda_a.
    """
    check_mu_admissible(pair, mu_m)
    check_rho_admissible(pair, rho_m)
    lower = rho_bounds(pair, rho_m)[0]
    upper = mu_bounds(pair, mu_m)[1]
    return Interval(lower, upper) if lower <= upper else None


def cr_b(pair: MergerPair, mu_m: float, rho_m: float) -> Optional[Interval]:
    """Mixed region favoring B: value-side lower bound to risk-side upper.

    Non-empty iff (mu_m - mu_b) / (rho_m - rho_b) >= lambda_b.
    """
    check_mu_admissible(pair, mu_m)
    check_rho_admissible(pair, rho_m)
    lower = mu_bounds(pair, mu_m)[0]
    upper = rho_bounds(pair, rho_m)[1]
    return Interval(lower, upper) if lower <= upper else None


# --- synergy thresholds and combined performance -----------------------------


def _check_v(pair: MergerPair, v: float) -> float:
    v = float(v)
    vmax = min(pair.rho_a, pair.rho_b)
    if not math.isfinite(v) or v < 0.0 or v >= vmax:
        raise InvalidRiskReduction(
            f"risk reduction v={v!r} outside [0, {vmax})", path="v"
        )
    return v


def min_synergy_a_raw(pair: MergerPair, v: float) -> float:
    """Un-clamped least synergy making CR_A non-empty at risk reduction v."""
    v = _check_v(pair, v)
    return pair.lambda_a * (pair.rho_b - v) - pair.mu_b


def min_synergy_a(pair: MergerPair, v: float) -> float:
    """Least synergy making CR_A non-empty at risk reduction v, floored at 0."""
    return max(0.0, min_synergy_a_raw(pair, v))


def min_synergy_b_raw(pair: MergerPair, v: float) -> float:
    """Un-clamped least synergy making CR_B non-empty at risk reduction v."""
    v = _check_v(pair, v)
    return pair.lambda_b * (pair.rho_a - v) - pair.mu_a


def min_synergy_b(pair: MergerPair, v: float) -> float:
    """Least synergy making CR_B non-empty at risk reduction v, floored at 0."""
    return max(0.0, min_synergy_b_raw(pair, v))


def lambda_m(pair: MergerPair, s: float, v: float) -> float:
    """Risk-corrected performance of the merged firm at synergy s, reduction v."""
    s = float(s)
    v = float(v)
    if not math.isfinite(s) or s < 0.0:
        raise NegativeSynergy(f"synergy s must be >= 0, got {s!r}", path="s")
    if not math.isfinite(v) or v >= pair.rho_sum:
        raise InvalidRiskReduction(
            f"risk reduction v={v!r} must stay below combined risk {pair.rho_sum}", path="v"
        )
    return (pair.mu_sum + s) / (pair.rho_sum - v)


def lambda_m_comparisons(pair: MergerPair, s: float, v: float) -> tuple[bool, bool]:
    """Whether the merged performance reaches each side's stand-alone level."""
    lm = lambda_m(pair, s, v)
    return lm >= pair.lambda_a, lm >= pair.lambda_b


def outcome_from_synergy(pair: MergerPair, s: float, v: float) -> PostMergerOutcome:
    """Map synergy/risk-reduction coordinates to a post-merger outcome.

    Valid iff s >= 0 and 0 <= v < min{rho_A, rho_B}; the resulting outcome
    is admissible by construction.
    """
    s = float(s)
    if not math.isfinite(s) or s < 0.0:
        raise NegativeSynergy(f"synergy s must be >= 0, got {s!r}", path="s")
    v = _check_v(pair, v)
    return PostMergerOutcome(mu_m=pair.mu_sum + s, rho_m=pair.rho_sum - v)


# --- classification ----------------------------------------------------------


def classify(
    pair: MergerPair, mu_m: float, rho_m: float, *, eps: float = DEFAULT_EPS
) -> RegionReport:
    """Locate BR_rho relative to BR_mu and intersect them.

    Endpoint comparisons use the absolute tolerance ``eps`` on the ratio
    scale.  When several case predicates hold simultaneously (coinciding
    endpoints) the label is chosen by the fixed priority
    Case2 > Case1 > Case4 > Case3; the interval is the same either way.
    """
    region_mu = br_mu(pair, mu_m)
    region_rho = br_rho(pair, rho_m)
    a, b = region_mu.lo, region_mu.hi
    c, d = region_rho.lo, region_rho.hi

    if d < a - eps:
        return RegionReport(CaseLabel.EMPTY_RHO_BELOW_MU, None, region_mu, region_rho)
    if b < c - eps:
        return RegionReport(CaseLabel.EMPTY_MU_BELOW_RHO, None, region_mu, region_rho)

    lo, hi = max(a, c), min(b, d)
    if lo > hi:
        # Touching within eps only; collapse to the shared point.
        lo = hi = 0.5 * (lo + hi)
    interval = Interval(lo, hi)

    case2 = c <= a + eps and b <= d + eps
    case1 = c <= a + eps and d <= b + eps
    case4 = a <= c + eps and b <= d + eps
    case3 = a <= c + eps and d <= b + eps
    tie = (case1 + case2 + case3 + case4) > 1

    if case2:
        label = CaseLabel.CASE2_BR_MU
    elif case1:
        label = CaseLabel.CASE1_CR_B
    elif case4:
        label = CaseLabel.CASE4_CR_A
    else:
        label = CaseLabel.CASE3_BR_RHO
    return RegionReport(label, interval, region_mu, region_rho, tie=tie)


# --- direct membership oracle ------------------------------------------------


def accepts(pair: MergerPair, mu_m: float, rho_m: float, r: float) -> Acceptance:
    """Evaluate the four defining per-share inequalities directly at r.

    Independent of the closed-form bounds: shares out the merged per-share
    value mu_m / (N_A + r N_B) and risk rho_m / (N_A + r N_B) and compares
    each side against its stand-alone level.
    """
    r = float(r)
    if not math.isfinite(r) or r < 0.0:
        raise Inadmissible(f"exchange ratio r must be >= 0, got {r!r}", path="r")
    for name, value in (("mu_m", float(mu_m)), ("rho_m", float(rho_m))):
        if not math.isfinite(value) or value <= 0.0:
            raise Inadmissible(f"{name} must be positive and finite, got {value!r}", path=name)

    n_a, n_b = pair.a.shares, pair.b.shares
    n_m = n_a + r * n_b
    value_share = mu_m / n_m
    risk_share = rho_m / n_m
    return Acceptance(
        a_value=value_share >= pair.a.price,
        b_value=r * value_share >= pair.b.price,
        a_risk=risk_share <= pair.a.risk_per_share,
        b_risk=r * risk_share <= pair.b.risk_per_share,
    )


def per_share_risk_b(pair: MergerPair, rho_m: float, r: float) -> float:
    """Risk carried by one former B share after the swap: r*rho_m/(N_A+r*N_B).

    Strictly increasing in r, approaching rho_m / N_B from below.
    """
    r = float(r)
    if not math.isfinite(r) or r < 0.0:
        raise Inadmissible(f"exchange ratio r must be >= 0, got {r!r}", path="r")
    if not math.isfinite(rho_m) or rho_m <= 0.0:
        raise Inadmissible(f"rho_m must be positive and finite, got {rho_m!r}", path="rho_m")
    return r * rho_m / (pair.a.shares + r * pair.b.shares)
