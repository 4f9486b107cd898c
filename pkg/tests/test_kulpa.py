"""Midpoint-radius geometry: point maps, curves, case ranges, loci."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from merger_er_lab import (
    CaseLabel,
    CompanyProfile,
    Hyperbola,
    Interval,
    InvalidCase,
    KulpaPoint,
    Locus,
    NotAnInterval,
    br_mu,
    br_mu_point,
    br_rho,
    br_rho_point,
    case_mu_range,
    case_rho_range,
    classify,
    derive_pair,
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

from conftest import pairs

# Endpoints with denominators that are powers of two map and unmap without
# any rounding at all; arbitrary floats are only 1-ulp faithful.
dyadic = st.integers(min_value=-4096, max_value=4096).map(lambda k: k / 1024.0)


def test_point_map_frozen():
    assert to_point(Interval(0.4, 1.0)) == KulpaPoint(0.7, 0.3)
    assert to_point(Interval(0.5, 0.5)) == KulpaPoint(0.5, 0.0)
    assert to_interval(KulpaPoint(0.75, 0.25)) == Interval(0.5, 1.0)
    back = to_interval(KulpaPoint(0.7, 0.3))
    assert back.lo == pytest.approx(0.4, abs=1e-15)
    assert back.hi == 1.0
    with pytest.raises(NotAnInterval):
        to_interval(KulpaPoint(0.5, -1e-9))


def test_intersection_in_point_space_frozen():
    # Dyadic endpoints: exact through both maps.
    met = intersect_points(to_point(Interval(0.375, 1.0)), to_point(Interval(0.3125, 0.9375)))
    assert met == KulpaPoint(0.65625, 0.28125)
    # Example-pair endpoints are decimal, so allow ulp-level slack.
    met = intersect_points(KulpaPoint(0.7, 0.3), KulpaPoint(0.64375, 0.29375))
    assert met.x == pytest.approx(0.66875, abs=1e-15)
    assert met.y == pytest.approx(0.26875, abs=1e-15)
    # Disjoint intervals have no image point.
    gap = intersect_points(to_point(Interval(0.0, 1.0)), to_point(Interval(2.0, 3.0)))
    assert gap is None


def test_intersect_points_matches_interval_route():
    cases = [
        (Interval(0.4, 1.0), Interval(0.35, 0.9375)),
        (Interval(0.0, 0.25), Interval(0.25, 0.5)),
        (Interval(-1.0, 2.0), Interval(0.5, 0.75)),
    ]
    for left, right in cases:
        point = intersect_points(to_point(left), to_point(right))
        met = left.intersect(right)
        assert met is not None
        back = to_interval(point)
        assert back.lo == pytest.approx(met.lo, abs=1e-15)
        assert back.hi == pytest.approx(met.hi, abs=1e-15)


@given(dyadic, dyadic, dyadic, dyadic)
@settings(max_examples=300)
def test_dyadic_round_trips_exact(p, q, u, w):
    lo1, hi1 = sorted((p, q))
    lo2, hi2 = sorted((u, w))
    first, second = Interval(lo1, hi1), Interval(lo2, hi2)
    assert to_interval(to_point(first)) == first
    point = intersect_points(to_point(first), to_point(second))
    met = first.intersect(second)
    if met is None:
        assert point is None
    else:
        assert point is not None and to_interval(point) == met


@given(
    st.floats(min_value=-1e6, max_value=1e6),
    st.floats(min_value=0.0, max_value=1e6),
)
@settings(max_examples=300)
def test_float_round_trip_is_tight(lo, width):
    interval = Interval(lo, lo + width)
    back = to_interval(to_point(interval))
    scale = max(abs(interval.lo), abs(interval.hi), 1.0)
    assert back.lo == pytest.approx(interval.lo, abs=4 * math.ulp(scale))
    assert back.hi == pytest.approx(interval.hi, abs=4 * math.ulp(scale))


def test_region_points_frozen(example_pair):
    assert br_mu_point(example_pair, 120.0) == KulpaPoint(0.7, 0.3)
    assert br_mu_point(example_pair, 100.0) == KulpaPoint(0.5, 0.0)
    assert br_rho_point(example_pair, 110.0) == KulpaPoint(0.75, 0.0)
    point = br_rho_point(example_pair, 94.0)
    assert point.x == pytest.approx(0.64375, rel=1e-12)
    assert point.y == pytest.approx(0.29375, rel=1e-12)


# --- curve traces ------------------------------------------------------------


def test_mu_curve_frozen(example_pair):
    curve = mu_curve(example_pair)
    assert curve.coeff_linear == pytest.approx(1.5, rel=1e-12)
    assert curve.coeff_const == pytest.approx(1.0, rel=1e-12)
    assert curve.center == KulpaPoint(-0.75, -0.75)
    assert curve.semi_axis == pytest.approx(1.0, rel=1e-12)
    left, right = curve.vertices
    assert left == KulpaPoint(-1.75, -0.75)
    assert right == KulpaPoint(0.25, -0.75)
    rising, falling = curve.asymptotes
    assert (rising.slope, rising.intercept) == (1, 0.0)
    assert (falling.slope, falling.intercept) == (-1, -1.5)
    assert curve.strip_bound == 0.5
    assert curve.param_min == 100.0
    assert not curve.param_min_open
    assert curve.param_max == math.inf
    assert curve.residual(left.x, left.y) == pytest.approx(0.0, abs=1e-12)
    assert curve.residual(right.x, right.y) == pytest.approx(0.0, abs=1e-12)


def test_rho_curve_frozen(example_pair):
    curve = rho_curve(example_pair)
    assert curve.coeff_linear == pytest.approx(1.25, rel=1e-12)
    assert curve.coeff_const == pytest.approx(1.5, rel=1e-12)
    assert curve.center == KulpaPoint(-0.625, 0.625)
    assert curve.semi_axis == pytest.approx(math.sqrt(1.5), rel=1e-12)
    left, right = curve.vertices
    assert left.x == pytest.approx(-0.625 - math.sqrt(1.5), rel=1e-12)
    assert right.x == pytest.approx(-0.625 + math.sqrt(1.5), rel=1e-12)
    # Both vertex ordinates sit at -center-abscissa; a positive ordinate here
    # is what puts the right vertex on the interval side of the diagram.
    assert left.y == right.y == pytest.approx(0.625, rel=1e-12)
    falling, rising = curve.asymptotes
    assert (falling.slope, falling.intercept) == (-1, 0.0)
    assert (rising.slope, rising.intercept) == (1, 1.25)
    assert curve.strip_bound == 0.75
    assert curve.param_min == 80.0
    assert curve.param_min_open
    assert curve.param_max == 110.0
    assert curve.residual(right.x, right.y) == pytest.approx(0.0, abs=1e-12)
    assert curve.diagnostics == ()


def test_curve_points_lie_on_curve(example_pair):
    curve = mu_curve(example_pair)
    for mu_m in (100.0, 104.0, 120.0, 360.0):
        point = curve.point_at(mu_m)
        assert point == br_mu_point(example_pair, mu_m)
        assert curve.residual(point.x, point.y) == pytest.approx(0.0, abs=1e-9)
        assert curve.in_strip(point)
    curve = rho_curve(example_pair)
    for rho_m in (86.0, 94.0, 106.0, 110.0):
        point = curve.point_at(rho_m)
        assert point == br_rho_point(example_pair, rho_m)
        assert curve.residual(point.x, point.y) == pytest.approx(0.0, abs=1e-9)
        assert curve.in_strip(point)


def test_other_branch_outside_strip(example_pair):
    # Mirroring a trace point through the center lands on the second branch,
    # which the strip predicate must exclude.
    curve = mu_curve(example_pair)
    point = curve.point_at(120.0)
    cx, cy = curve.center.x, curve.center.y
    mirrored_x, mirrored_y = 2 * cx - point.x, 2 * cy - point.y
    assert curve.residual(mirrored_x, mirrored_y) == pytest.approx(0.0, abs=1e-9)
    assert not curve.in_strip(KulpaPoint(mirrored_x, mirrored_y))
    curve = rho_curve(example_pair)
    point = curve.point_at(94.0)
    cx, cy = curve.center.x, curve.center.y
    mirrored_x, mirrored_y = 2 * cx - point.x, 2 * cy - point.y
    assert curve.residual(mirrored_x, mirrored_y) == pytest.approx(0.0, abs=1e-9)
    assert not curve.in_strip(KulpaPoint(mirrored_x, mirrored_y))


def test_curve_residual_helpers(example_pair):
    assert mu_curve_residual(example_pair, 0.25, -0.75) == pytest.approx(0.0, abs=1e-12)
    assert abs(mu_curve_residual(example_pair, 0.0, 0.0)) > 0.5
    x = -0.625 + math.sqrt(1.5)
    assert rho_curve_residual(example_pair, x, 0.625) == pytest.approx(0.0, abs=1e-12)


def test_vertex_diagnostic_for_skewed_pair():
    pair = derive_pair(
        CompanyProfile(price=4.0, shares=20.0, risk_per_share=4.0),
        CompanyProfile(price=0.1, shares=10.0, risk_per_share=3.0),
    )
    curve = mu_curve(pair)
    assert curve.vertices[1].x <= 0.0
    assert len(curve.diagnostics) == 1
    assert "vertex" in curve.diagnostics[0]


@given(pairs(), st.floats(min_value=1e-4, max_value=2.0))
@settings(max_examples=200)
def test_trace_points_always_satisfy_equations(pair, gain):
    mu_m = pair.mu_sum * (1.0 + gain)
    point = br_mu_point(pair, mu_m)
    scale = max(abs(point.x), abs(point.y), 1.0)
    assert abs(mu_curve_residual(pair, point.x, point.y)) <= 1e-9 * scale * scale
    rho_m = pair.rho_floor + gain / 2.0 * (pair.rho_sum - pair.rho_floor)
    if rho_m <= pair.rho_floor or rho_m > pair.rho_sum:
        return
    point = br_rho_point(pair, rho_m)
    scale = max(abs(point.x), abs(point.y), 1.0)
    assert abs(rho_curve_residual(pair, point.x, point.y)) <= 1e-9 * scale * scale


# --- case ranges along each axis ---------------------------------------------


def test_case_mu_ranges_frozen(example_pair):
    rng = case_mu_range(example_pair, 94.0, CaseLabel.CASE2_BR_MU)
    assert rng.values == Interval(100.0, 117.5)
    assert not rng.unbounded_above

    rng = case_mu_range(example_pair, 94.0, CaseLabel.CASE1_CR_B)
    assert rng.values.lo == pytest.approx(117.5, rel=1e-12)
    assert rng.values.hi == pytest.approx(940.0 / 7.0, rel=1e-12)

    rng = case_mu_range(example_pair, 94.0, CaseLabel.CASE3_BR_RHO)
    assert rng.values.lo == pytest.approx(940.0 / 7.0, rel=1e-12)
    assert rng.unbounded_above
    assert rng.values.hi == math.inf

    rng = case_mu_range(example_pair, 94.0, CaseLabel.CASE4_CR_A)
    assert rng.values is None and rng.empty

    rng = case_mu_range(example_pair, 99.0, CaseLabel.CASE4_CR_A)
    assert rng.values.lo == pytest.approx(1980.0 / 19.0, rel=1e-12)
    assert rng.values.hi == pytest.approx(2640.0 / 23.0, rel=1e-12)

    # Synergy is just the axis value shifted by the no-deal total.
    rng = case_mu_range(example_pair, 94.0, CaseLabel.CASE2_BR_MU)
    assert rng.synergy_values == Interval(0.0, 17.5)


def test_case_mu_range_clamp(example_pair):
    rng = case_mu_range(example_pair, 94.0, CaseLabel.CASE3_BR_RHO, clamp=200.0)
    assert rng.values.hi == 200.0
    assert rng.unbounded_above
    # Clamp below the start still reports the start so emptiness stays visible.
    rng = case_mu_range(example_pair, 94.0, CaseLabel.CASE3_BR_RHO, clamp=120.0)
    assert rng.values.lo == rng.values.hi == pytest.approx(940.0 / 7.0, rel=1e-12)


def test_case_rho_ranges_frozen(example_pair):
    rng = case_rho_range(example_pair, 120.0, CaseLabel.CASE1_CR_B)
    assert rng.values == Interval(90.0, 96.0)
    assert not rng.open_below

    rng = case_rho_range(example_pair, 120.0, CaseLabel.CASE2_BR_MU)
    assert rng.values == Interval(80.0, 90.0)
    assert rng.open_below

    rng = case_rho_range(example_pair, 120.0, CaseLabel.CASE3_BR_RHO)
    assert rng.values == Interval(96.0, 110.0)

    rng = case_rho_range(example_pair, 120.0, CaseLabel.CASE4_CR_A)
    assert rng.values is None and rng.empty

    rng = case_rho_range(example_pair, 112.0, CaseLabel.CASE4_CR_A)
    assert rng.values.lo == pytest.approx(2240.0 / 23.0, rel=1e-12)
    assert rng.values.hi == pytest.approx(105.0, rel=1e-12)

    # Risk-reduction form counts down from the no-deal total.
    rng = case_rho_range(example_pair, 120.0, CaseLabel.CASE1_CR_B)
    assert rng.risk_reduction_values == Interval(14.0, 20.0)


def test_case_ranges_reject_empty_labels(example_pair):
    with pytest.raises(InvalidCase):
        case_mu_range(example_pair, 94.0, CaseLabel.EMPTY_RHO_BELOW_MU)
    with pytest.raises(InvalidCase):
        case_rho_range(example_pair, 120.0, CaseLabel.EMPTY_MU_BELOW_RHO)


@given(pairs(), st.floats(min_value=1e-3, max_value=0.999), st.sampled_from([
    CaseLabel.CASE1_CR_B,
    CaseLabel.CASE2_BR_MU,
    CaseLabel.CASE3_BR_RHO,
    CaseLabel.CASE4_CR_A,
]))
@settings(max_examples=300)
def test_case_mu_range_interior_classifies_back(pair, t, label):
    rho_hat = pair.rho_floor + t * (pair.rho_sum - pair.rho_floor)
    rng = case_mu_range(pair, rho_hat, label)
    if rng.empty:
        return
    lo, hi = rng.values.lo, rng.values.hi
    if rng.unbounded_above:
        hi = lo * 2.0 + pair.mu_sum
    if hi - lo <= 1e-7 * max(hi, 1.0):
        return
    mid = 0.5 * (lo + hi)
    report = classify(pair, mid, rho_hat, eps=0.0)
    assert report.case_label is label


@given(pairs(), st.floats(min_value=1e-3, max_value=2.0), st.sampled_from([
    CaseLabel.CASE1_CR_B,
    CaseLabel.CASE2_BR_MU,
    CaseLabel.CASE3_BR_RHO,
    CaseLabel.CASE4_CR_A,
]))
@settings(max_examples=300)
def test_case_rho_range_interior_classifies_back(pair, gain, label):
    mu_hat = pair.mu_sum * (1.0 + gain)
    rng = case_rho_range(pair, mu_hat, label)
    if rng.empty:
        return
    lo, hi = rng.values.lo, rng.values.hi
    if rng.open_below:
        lo = math.nextafter(lo, hi)
    if hi - lo <= 1e-7 * max(hi, 1.0):
        return
    mid = 0.5 * (lo + hi)
    report = classify(pair, mu_hat, mid, eps=0.0)
    assert report.case_label is label


# --- per-case loci -----------------------------------------------------------


def test_locus_fixed_rho_frozen(example_pair):
    locus = locus_fixed_rho(example_pair, 94.0, CaseLabel.CASE1_CR_B)
    assert isinstance(locus, Locus)
    assert locus.slope == -1
    assert locus.intercept == pytest.approx(0.9375, rel=1e-12)
    assert locus.param_range == Interval(117.5, 940.0 / 7.0)
    # The classified result for an interior outcome lands on the line.
    report = classify(example_pair, 120.0, 94.0)
    point = to_point(report.interval)
    assert locus.residual(point.x, point.y) == pytest.approx(0.0, abs=1e-12)

    locus = locus_fixed_rho(example_pair, 99.0, CaseLabel.CASE4_CR_A)
    assert locus.slope == 1
    assert locus.intercept == pytest.approx(-0.475, rel=1e-12)

    locus = locus_fixed_rho(example_pair, 94.0, CaseLabel.CASE2_BR_MU)
    assert isinstance(locus, Hyperbola)

    locus = locus_fixed_rho(example_pair, 94.0, CaseLabel.CASE3_BR_RHO)
    assert isinstance(locus, KulpaPoint)
    assert locus == br_rho_point(example_pair, 94.0)


def test_locus_fixed_mu_frozen(example_pair):
    locus = locus_fixed_mu(example_pair, 120.0, CaseLabel.CASE1_CR_B)
    assert isinstance(locus, Locus)
    assert locus.slope == 1
    assert locus.intercept == pytest.approx(-0.4, rel=1e-12)
    assert locus.param_range == Interval(90.0, 96.0)

    locus = locus_fixed_mu(example_pair, 112.0, CaseLabel.CASE4_CR_A)
    assert locus.slope == -1
    assert locus.intercept == pytest.approx(0.8, rel=1e-12)
    report = classify(example_pair, 112.0, 99.0)
    point = to_point(report.interval)
    assert locus.residual(point.x, point.y) == pytest.approx(0.0, abs=1e-12)

    locus = locus_fixed_mu(example_pair, 120.0, CaseLabel.CASE2_BR_MU)
    assert isinstance(locus, KulpaPoint)
    assert locus == br_mu_point(example_pair, 120.0)

    locus = locus_fixed_mu(example_pair, 120.0, CaseLabel.CASE3_BR_RHO)
    assert isinstance(locus, Hyperbola)


def test_locus_unattainable_case_raises(example_pair):
    with pytest.raises(InvalidCase):
        locus_fixed_rho(example_pair, 94.0, CaseLabel.CASE4_CR_A)
    with pytest.raises(InvalidCase):
        locus_fixed_mu(example_pair, 120.0, CaseLabel.CASE4_CR_A)
    with pytest.raises(InvalidCase):
        locus_fixed_rho(example_pair, 94.0, CaseLabel.EMPTY_MU_BELOW_RHO)


@given(pairs(), st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=0.1, max_value=0.9))
@settings(max_examples=200)
def test_result_points_sweep_the_locus(pair, t, u):
    rho_hat = pair.rho_floor + t * (pair.rho_sum - pair.rho_floor)
    for label in (CaseLabel.CASE1_CR_B, CaseLabel.CASE4_CR_A):
        rng = case_mu_range(pair, rho_hat, label)
        if rng.empty or rng.values.width <= 1e-6 * max(rng.values.hi, 1.0):
            continue
        locus = locus_fixed_rho(pair, rho_hat, label)
        mu_m = rng.values.lo + u * rng.values.width
        report = classify(pair, mu_m, rho_hat, eps=0.0)
        if report.case_label is not label or report.interval is None:
            continue
        point = to_point(report.interval)
        scale = max(abs(point.x), abs(point.y), 1.0)
        assert abs(locus.residual(point.x, point.y)) <= 1e-9 * scale
