"""Midpoint-radius (Kulpa) diagram geometry for exchange-ratio regions.

An interval [lo, hi] maps to the plane point (x, y) = ((lo+hi)/2, (hi-lo)/2):
midpoint on the horizontal axis, radius on the vertical.  Degenerate
intervals sit on the x-axis, and the preimage of any point requires y >= 0.
Interval intersection becomes a picture: [a,b] and [c,d] overlap iff
max{a,c} <= min{b,d}, and the intersection's image is
((max{a,c}+min{b,d})/2, (min{b,d}-max{a,c})/2).

As the post-merger value mu_M sweeps its admissible range, the image of the
value bargaining region BR_mu(mu_M) traces one branch of a rectangular
hyperbola (eccentricity sqrt(2), asymptote slopes +-1):

    x^2 - y^2 + c1*(x - y) - c2 = 0,   c1 = r*(mu_A/mu_B - 1),  c2 = r*^2 mu_A/mu_B

with x - y = r* mu_A/(mu_M - mu_B) in (0, r*].  The risk region BR_rho(rho_M)
traces the analogue with the linear term on (x + y):

    x^2 - y^2 + c1*(x + y) - c2 = 0,   c1 = r**(rho_A/rho_B - 1), c2 = r**^2 rho_A/rho_B

with x + y = r** rho_A/(rho_M - rho_B) and x - y = r**(rho_M - rho_A)/rho_B
in (0, r**].  Only the branch through the right-hand vertex carries
admissible outcomes; the other branch is kept for completeness but marked
non-admissible by the strip predicate.

Case loci: holding one of (mu_M, rho_M) fixed and sweeping the other moves
the feasible-interval image along straight lines of slope +-1 for the mixed
cases, along the hyperbola branch when the swept side's own region is the
answer, and degenerates to a single point when the fixed side's region is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .errors import Inadmissible, InvalidCase, NotAnInterval
from .model import (
    CaseLabel,
    Interval,
    MergerPair,
    br_mu,
    br_rho,
    check_mu_admissible,
    check_rho_admissible,
    mu_bounds,
    rho_bounds,
)


@dataclass(frozen=True, slots=True)
class KulpaPoint:
    """A point of the midpoint-radius plane."""

    x: float
    y: float

    @property
    def is_interval(self) -> bool:
        """True when the point is the image of some interval (y >= 0)."""
        return self.y >= 0.0


def to_point(interval: Interval) -> KulpaPoint:
    """Midpoint-radius image of a closed interval."""
    return KulpaPoint(0.5 * (interval.lo + interval.hi), 0.5 * (interval.hi - interval.lo))


def to_interval(point: KulpaPoint) -> Interval:
    """Interval preimage; defined only on or above the x-axis."""
    if point.y < 0.0:
        raise NotAnInterval(f"point with radius {point.y} has no interval preimage", path="y")
    return Interval(point.x - point.y, point.x + point.y)


def intersect_points(p1: KulpaPoint, p2: KulpaPoint) -> Optional[KulpaPoint]:
    """Image of the intersection of the two preimages, None when disjoint.

    Defined as the round-trip composition, so it agrees with direct interval
    intersection bit for bit.
    """
    i1, i2 = to_interval(p1), to_interval(p2)
    met = i1.intersect(i2)
    return to_point(met) if met is not None else None


def br_mu_point(pair: MergerPair, mu_m: float) -> KulpaPoint:
    """Image of the value bargaining region at mu_m."""
    return to_point(br_mu(pair, mu_m))


def br_rho_point(pair: MergerPair, rho_m: float) -> KulpaPoint:
    """Image of the risk bargaining region at rho_m."""
    return to_point(br_rho(pair, rho_m))


@dataclass(frozen=True, slots=True)
class Locus:
    """A straight line of slope +-1 in the diagram plane.

    ``param_range`` is the range of the sweep parameter generating the locus
    (the free one of mu_M/rho_M for case loci; the x-coordinate itself for
    asymptotes, where it is unbounded).
    """

    slope: int
    intercept: float
    param_range: Interval
    description: str

    def __post_init__(self) -> None:
        if self.slope not in (-1, 1):
            raise ValueError(f"locus slope must be +1 or -1, got {self.slope}")

    def y_at(self, x: float) -> float:
        return self.slope * x + self.intercept

    def residual(self, x: float, y: float) -> float:
        return y - self.y_at(x)


_FULL_LINE = Interval(-math.inf, math.inf)


class CurveKind(Enum):
    """Which bargaining region's image the hyperbola is the locus of."""

    MU = "mu"
    RHO = "rho"


@dataclass(frozen=True, slots=True)
class Hyperbola:
    """One region-image hyperbola x^2 - y^2 + c1*(x -+ y) - c2 = 0.

    The linear term acts on (x - y) for kind MU and on (x + y) for kind RHO.
    ``vertices`` is (left, right); only the branch through the right vertex
    meets the admissible strip 0 < x - y <= strip_bound.  The generating
    sweep parameter (mu_M or rho_M) lives in [param_min, param_max], the
    lower end open when ``param_min_open``.
    """

    kind: CurveKind
    coeff_linear: float
    coeff_const: float
    center: KulpaPoint
    semi_axis: float
    vertices: tuple[KulpaPoint, KulpaPoint]
    asymptotes: tuple[Locus, Locus]
    strip_bound: float
    param_min: float
    param_max: float
    param_min_open: bool
    ratio: float
    agg_a: float
    agg_b: float
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def relevant_vertex(self) -> KulpaPoint:
        return self.vertices[1]

    def residual(self, x: float, y: float) -> float:
        mix = (x - y) if self.kind is CurveKind.MU else (x + y)
        return x * x - y * y + self.coeff_linear * mix - self.coeff_const

    def point_at(self, param: float) -> KulpaPoint:
        """Image of the bargaining region at the given sweep parameter."""
        near = self.ratio * self.agg_a / (param - self.agg_b)
        far = self.ratio * (param - self.agg_a) / self.agg_b
        if self.kind is CurveKind.MU:
            lo, hi = near, far
        else:
            lo, hi = far, near
        return KulpaPoint(0.5 * (lo + hi), 0.5 * (hi - lo))

    def in_strip(self, point: KulpaPoint, tol: float = 0.0) -> bool:
        """Admissible-branch predicate 0 < x - y <= strip_bound."""
        gap = point.x - point.y
        return 0.0 < gap <= self.strip_bound + tol


def mu_curve(pair: MergerPair) -> Hyperbola:
    """Locus of the value-region image as mu_M sweeps [mu_A+mu_B, inf)."""
    ratio, agg_a, agg_b = pair.r_star, pair.mu_a, pair.mu_b
    c1 = ratio * (agg_a / agg_b - 1.0)
    c2 = ratio * ratio * agg_a / agg_b
    k = -0.5 * c1
    semi = math.sqrt(c2)
    vertices = (KulpaPoint(k - semi, k), KulpaPoint(k + semi, k))
    asymptotes = (
        Locus(1, 0.0, _FULL_LINE, "asymptote"),
        Locus(-1, 2.0 * k, _FULL_LINE, "asymptote"),
    )
    diagnostics = ()
    if k + semi <= 0.0:
        diagnostics = (
            "value-curve vertex abscissa is non-positive; the admissible branch "
            "starts left of the radius axis",
        )
    return Hyperbola(
        kind=CurveKind.MU,
        coeff_linear=c1,
        coeff_const=c2,
        center=KulpaPoint(k, k),
        semi_axis=semi,
        vertices=vertices,
        asymptotes=asymptotes,
        strip_bound=ratio,
        param_min=pair.mu_sum,
        param_max=math.inf,
        param_min_open=False,
        ratio=ratio,
        agg_a=agg_a,
        agg_b=agg_b,
        diagnostics=diagnostics,
    )


def rho_curve(pair: MergerPair) -> Hyperbola:
    """Locus of the risk-region image as rho_M sweeps (max{rho_A,rho_B}, rho_A+rho_B]."""
    ratio, agg_a, agg_b = pair.r_star_star, pair.rho_a, pair.rho_b
    c1 = ratio * (agg_a / agg_b - 1.0)
    c2 = ratio * ratio * agg_a / agg_b
    m = -0.5 * c1
    semi = math.sqrt(c2)
    # Canonical form completes the square to (y + m)^2, so the center sits at
    # (m, -m) and both vertices share ordinate -m.
    vertices = (KulpaPoint(m - semi, -m), KulpaPoint(m + semi, -m))
    asymptotes = (
        Locus(-1, 0.0, _FULL_LINE, "asymptote"),
        Locus(1, -2.0 * m, _FULL_LINE, "asymptote"),
    )
    diagnostics = ()
    if m + semi <= 0.0:
        diagnostics = (
            "risk-curve vertex abscissa is non-positive; the admissible branch "
            "starts left of the radius axis",
        )
    return Hyperbola(
        kind=CurveKind.RHO,
        coeff_linear=c1,
        coeff_const=c2,
        center=KulpaPoint(m, -m),
        semi_axis=semi,
        vertices=vertices,
        asymptotes=asymptotes,
        strip_bound=ratio,
        param_min=pair.rho_floor,
        param_max=pair.rho_sum,
        param_min_open=True,
        ratio=ratio,
        agg_a=agg_a,
        agg_b=agg_b,
        diagnostics=diagnostics,
    )


def mu_curve_residual(pair: MergerPair, x: float, y: float) -> float:
    """Implicit-equation residual of the value curve at (x, y)."""
    return mu_curve(pair).residual(x, y)


def rho_curve_residual(pair: MergerPair, x: float, y: float) -> float:
    """Implicit-equation residual of the risk curve at (x, y)."""
    return rho_curve(pair).residual(x, y)


# --- case ranges of the free parameter ---------------------------------------


@dataclass(frozen=True, slots=True)
class CaseRange:
    """Range of the free parameter over which a case label holds.

    ``values`` is None when the case is unattainable at the fixed parameter.
    ``open_below`` marks that the lower endpoint itself is inadmissible (the
    strict risk floor); ``unbounded_above`` marks a range with no finite
    upper end, in which case ``values.hi`` is either +inf or the caller's
    clamp.  ``synergy_values`` / ``risk_reduction_values`` restate the range
    in synergy (mu_M - mu_A - mu_B) or risk-reduction (rho_A + rho_B - rho_M)
    coordinates, whichever applies to the free parameter.
    """

    case_label: CaseLabel
    fixed_parameter: str
    fixed_value: float
    values: Optional[Interval]
    unbounded_above: bool = False
    open_below: bool = False
    synergy_values: Optional[Interval] = None
    risk_reduction_values: Optional[Interval] = None

    @property
    def empty(self) -> bool:
        return self.values is None


def _require_case(case_label: CaseLabel) -> None:
    if case_label.is_empty:
        raise InvalidCase(f"{case_label.value} has no parameter range", path="case")


def case_mu_range(
    pair: MergerPair,
    rho_hat: float,
    case_label: CaseLabel,
    clamp: Optional[float] = None,
) -> CaseRange:
    """Range of mu_M producing ``case_label`` at fixed rho_M = rho_hat.

    The only case open above is Case3BrRho; pass ``clamp`` to cap it for
    sampling, otherwise its upper end is +inf.
    """
    _require_case(case_label)
    check_rho_admissible(pair, rho_hat)
    rs, rss = pair.r_star, pair.r_star_star
    mu_a, mu_b = pair.mu_a, pair.mu_b
    rho_a, rho_b = pair.rho_a, pair.rho_b

    t1 = (rs / rss) * mu_a * rho_b / (rho_hat - rho_a) + mu_b
    t2 = (rss / rs) * mu_b * rho_a / (rho_hat - rho_b) + mu_a
    t3 = (rs / rss) * mu_a * (rho_hat - rho_b) / rho_a + mu_b
    t4 = (rss / rs) * mu_b * (rho_hat - rho_a) / rho_b + mu_a

    unbounded = False
    if case_label is CaseLabel.CASE1_CR_B:
        lo, hi = max(t2, t3), t1
    elif case_label is CaseLabel.CASE2_BR_MU:
        lo, hi = pair.mu_sum, min(t1, t2)
    elif case_label is CaseLabel.CASE3_BR_RHO:
        lo, hi = max(t1, t2), math.inf
        unbounded = True
    else:
        lo, hi = max(t1, t4), t2

    lo = max(lo, pair.mu_sum)
    if unbounded and clamp is not None:
        hi = max(lo, float(clamp))
    if lo > hi:
        return CaseRange(case_label, "rho_m", rho_hat, None, unbounded_above=unbounded)
    values = Interval(lo, hi)
    synergy = Interval(lo - pair.mu_sum, hi - pair.mu_sum)
    return CaseRange(
        case_label,
        "rho_m",
        rho_hat,
        values,
        unbounded_above=unbounded,
        synergy_values=synergy,
    )


def case_rho_range(
    pair: MergerPair,
    mu_hat: float,
    case_label: CaseLabel,
    clamp: Optional[float] = None,
) -> CaseRange:
    """Range of rho_M producing ``case_label`` at fixed mu_M = mu_hat.

    Always bounded (the admissible rho_M range is), so ``clamp`` is unused;
    it is accepted for symmetry with the mu version.
    """
    del clamp
    _require_case(case_label)
    check_mu_admissible(pair, mu_hat)
    rs, rss = pair.r_star, pair.r_star_star
    mu_a, mu_b = pair.mu_a, pair.mu_b
    rho_a, rho_b = pair.rho_a, pair.rho_b

    u1 = (rs / rss) * rho_b * mu_a / (mu_hat - mu_b) + rho_a
    u2 = (rss / rs) * rho_a * mu_b / (mu_hat - mu_a) + rho_b
    u3 = (rss / rs) * rho_a * (mu_hat - mu_b) / mu_a + rho_b
    u4 = (rs / rss) * rho_b * (mu_hat - mu_a) / mu_b + rho_a

    if case_label is CaseLabel.CASE1_CR_B:
        lo, hi = u2, min(u1, u3)
    elif case_label is CaseLabel.CASE2_BR_MU:
        lo, hi = pair.rho_floor, min(u1, u2)
    elif case_label is CaseLabel.CASE3_BR_RHO:
        lo, hi = max(u1, u2), pair.rho_sum
    else:
        lo, hi = u1, min(u2, u4)

    open_below = lo <= pair.rho_floor
    lo = max(lo, pair.rho_floor)
    hi = min(hi, pair.rho_sum)
    if lo > hi or (open_below and lo >= hi):
        return CaseRange(case_label, "mu_m", mu_hat, None, open_below=open_below)
    values = Interval(lo, hi)
    reduction = Interval(pair.rho_sum - hi, pair.rho_sum - lo)
    return CaseRange(
        case_label,
        "mu_m",
        mu_hat,
        values,
        open_below=open_below,
        risk_reduction_values=reduction,
    )


# --- case loci ----------------------------------------------------------------


CaseLocus = Union[Locus, Hyperbola, KulpaPoint]


def locus_fixed_rho(pair: MergerPair, rho_hat: float, case_label: CaseLabel) -> CaseLocus:
    """Locus of the feasible-region image at fixed rho_M, sweeping mu_M.

    The mixed cases move along slope -+1 lines (constant risk-side bound);
    Case2BrMu rides the value curve; Case3BrRho pins the single point of the
    risk region.  Raises InvalidCase for empty labels and for cases
    unattainable at this rho_hat.
    """
    _require_case(case_label)
    rng = case_mu_range(pair, rho_hat, case_label)
    if rng.empty:
        raise InvalidCase(
            f"{case_label.value} is unattainable at rho_m={rho_hat}", path="case"
        )
    lower, upper = rho_bounds(pair, rho_hat)
    if case_label is CaseLabel.CASE1_CR_B:
        # x + y equals the fixed risk-side upper bound along CR_B.
        return Locus(-1, upper, rng.values, case_label.value)
    if case_label is CaseLabel.CASE4_CR_A:
        # x - y equals the fixed risk-side lower bound along CR_A.
        return Locus(1, -lower, rng.values, case_label.value)
    if case_label is CaseLabel.CASE2_BR_MU:
        return mu_curve(pair)
    return br_rho_point(pair, rho_hat)


def locus_fixed_mu(pair: MergerPair, mu_hat: float, case_label: CaseLabel) -> CaseLocus:
    """Locus of the feasible-region image at fixed mu_M, sweeping rho_M."""
    _require_case(case_label)
    rng = case_rho_range(pair, mu_hat, case_label)
    if rng.empty:
        raise InvalidCase(
            f"{case_label.value} is unattainable at mu_m={mu_hat}", path="case"
        )
    lower, upper = mu_bounds(pair, mu_hat)
    if case_label is CaseLabel.CASE1_CR_B:
        # x - y equals the fixed value-side lower bound along CR_B.
        return Locus(1, -lower, rng.values, case_label.value)
    if case_label is CaseLabel.CASE4_CR_A:
        # x + y equals the fixed value-side upper bound along CR_A.
        return Locus(-1, upper, rng.values, case_label.value)
    if case_label is CaseLabel.CASE3_BR_RHO:
        return rho_curve(pair)
    return br_mu_point(pair, mu_hat)
