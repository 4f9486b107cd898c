"""Parameter sweeps and deterministic SVG/CSV rendering.

Sweeps sample the closed-form bounds over an admissible parameter range;
scenes collect the diagram geometry (curve branches, asymptotes, case locus,
markers, result segment) for one outcome.  Emission is deterministic and
locale-independent: every number is written with ``%.9g``, so identical
inputs produce identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import EncodingFailure, Inadmissible, ValidationError
from .kulpa import (
    Hyperbola,
    KulpaPoint,
    Locus,
    br_mu_point,
    br_rho_point,
    case_mu_range,
    locus_fixed_rho,
    mu_curve,
    rho_curve,
    to_point,
)
from .model import (
    DEFAULT_EPS,
    CaseLabel,
    Interval,
    MergerPair,
    classify,
    mu_bounds,
    rho_bounds,
)

#: Default number of samples for curves and sweeps.
DEFAULT_RESOLUTION = 512


@dataclass(frozen=True, slots=True)
class Series:
    """Sampled envelope (param, r_lower, r_upper), params strictly increasing."""

    name: str
    parameter: str
    points: tuple[tuple[float, float, float], ...]

    def __post_init__(self) -> None:
        last = -math.inf
        for param, lo, hi in self.points:
            if param <= last:
                raise ValueError("series parameters must be strictly increasing")
            if lo > hi:
                raise ValueError(f"series sample at {param} has lo > hi")
            last = param


@dataclass(frozen=True, slots=True)
class Polyline:
    """Labeled point chain; role is one of curve / asymptote / locus."""

    label: str
    role: str
    points: tuple[KulpaPoint, ...]


@dataclass(frozen=True, slots=True)
class Marker:
    label: str
    point: KulpaPoint


@dataclass(frozen=True, slots=True)
class Scene:
    """Everything needed to draw one outcome in the midpoint-radius plane."""

    curves: tuple[Polyline, ...]
    markers: tuple[Marker, ...]
    result_segment: Optional[tuple[KulpaPoint, KulpaPoint]]
    annotations: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class SvgStyle:
    width: int = 720
    height: int = 540
    margin: float = 52.0
    font_size: int = 12
    background: str = "#ffffff"


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    return [float(v) for v in np.linspace(lo, hi, n)]


def _check_samples(n: int) -> None:
    if n < 2:
        raise ValidationError(f"samples must be >= 2, got {n}", path="samples")


def sweep_br_mu(pair: MergerPair, mu_range: Interval, n: int = DEFAULT_RESOLUTION) -> Series:
    """Sample the value-region envelope over mu_M in ``mu_range``."""
    _check_samples(n)
    if mu_range.lo < pair.mu_sum:
        raise Inadmissible(
            f"sweep range starts at {mu_range.lo}, below combined value {pair.mu_sum}",
            path="range",
        )
    if mu_range.width == 0.0:
        raise Inadmissible("sweep range must have positive width", path="range")
    points = []
    for mu in _linspace(mu_range.lo, mu_range.hi, n):
        lo, hi = mu_bounds(pair, mu)
        points.append((mu, lo, hi))
    return Series(name="br_mu", parameter="mu_m", points=tuple(points))


def sweep_br_rho(pair: MergerPair, rho_range: Interval, n: int = DEFAULT_RESOLUTION) -> Series:
    """Sample the risk-region envelope over rho_M in ``rho_range``.

    The admissible range is open at max{rho_A, rho_B}; a sweep starting
    exactly there is moved half a step inside.
    """
    _check_samples(n)
    lo, hi = rho_range.lo, rho_range.hi
    if lo < pair.rho_floor or hi > pair.rho_sum:
        raise Inadmissible(
            f"sweep range [{lo}, {hi}] outside ({pair.rho_floor}, {pair.rho_sum}]",
            path="range",
        )
    if rho_range.width == 0.0:
        raise Inadmissible("sweep range must have positive width", path="range")
    if lo == pair.rho_floor:
        lo += (hi - lo) / (n - 1) / 2.0
    points = []
    for rho in _linspace(lo, hi, n):
        rlo, rhi = rho_bounds(pair, rho)
        points.append((rho, rlo, rhi))
    return Series(name="br_rho", parameter="rho_m", points=tuple(points))


def sweep_curve(curve: Hyperbola, n: int = DEFAULT_RESOLUTION, clamp: Optional[Interval] = None) -> Polyline:
    """Sample the admissible branch, ordered by the sweep parameter.

    ``clamp`` restricts the parameter window; it is intersected with the
    curve's own domain and an open lower end is sampled half a step inside.
    """
    _check_samples(n)
    lo, hi = curve.param_min, curve.param_max
    open_below = curve.param_min_open
    if clamp is not None:
        if clamp.lo > lo:
            lo, open_below = clamp.lo, False
        hi = min(hi, clamp.hi)
    if not math.isfinite(hi):
        raise Inadmissible("curve sweep needs a finite upper clamp", path="clamp")
    if lo > hi:
        raise Inadmissible(f"curve sweep window [{lo}, {hi}] is empty", path="clamp")
    if open_below:
        lo += (hi - lo) / (n - 1) / 2.0
    label = "BR_mu curve" if curve.kind.value == "mu" else "BR_rho curve"
    points = tuple(curve.point_at(p) for p in _linspace(lo, hi, n))
    return Polyline(label=label, role="curve", points=points)


def _asymptote_segment(
    line: Locus, x_lo: float, x_hi: float, y_lo: float, y_hi: float
) -> Optional[Polyline]:
    """Segment of the line inside the data box, None when it misses it."""
    if line.slope > 0:
        lo = max(x_lo, y_lo - line.intercept)
        hi = min(x_hi, y_hi - line.intercept)
    else:
        lo = max(x_lo, line.intercept - y_hi)
        hi = min(x_hi, line.intercept - y_lo)
    if lo >= hi:
        return None
    pts = (KulpaPoint(lo, line.y_at(lo)), KulpaPoint(hi, line.y_at(hi)))
    sign = "+" if line.slope > 0 else "-"
    label = f"asymptote y = {sign}x {'+' if line.intercept >= 0 else '-'} {abs(line.intercept):.9g}"
    return Polyline(label=label, role="asymptote", points=pts)


def _case_locus_polyline(
    pair: MergerPair, mu_m: float, rho_m: float, label: CaseLabel, resolution: int
) -> Optional[Polyline]:
    """Case locus at fixed rho_M: a straight segment for the mixed cases, a
    value-curve sub-branch for Case2; Case3's locus is a single point and is
    already covered by the result marker."""
    if label in (CaseLabel.CASE1_CR_B, CaseLabel.CASE4_CR_A):
        locus = locus_fixed_rho(pair, rho_m, label)
        assert isinstance(locus, Locus)
        ends = []
        for mu in (locus.param_range.lo, locus.param_range.hi):
            report = classify(pair, mu, rho_m)
            ends.append(to_point(report.interval) if report.interval else None)
        if None in ends:
            return None
        return Polyline(label=f"{label.value} locus", role="locus", points=tuple(ends))
    if label is CaseLabel.CASE2_BR_MU:
        rng = case_mu_range(pair, rho_m, label)
        if rng.empty or rng.values.width == 0.0:
            return None
        n = max(2, min(64, resolution))
        sub = sweep_curve(mu_curve(pair), n, clamp=rng.values)
        return Polyline(label=f"{label.value} locus", role="locus", points=sub.points)
    return None


def build_scene(
    pair: MergerPair,
    mu_m: float,
    rho_m: float,
    *,
    resolution: int = DEFAULT_RESOLUTION,
    eps: float = DEFAULT_EPS,
) -> Scene:
    """Assemble the diagram for one admissible outcome.

    Curves cover mu_M from zero synergy up to a deterministic window past
    the requested outcome, and rho_M over its whole admissible range; both
    markers are always present, the result marker/segment only when the
    feasible region is non-empty.
    """
    report = classify(pair, mu_m, rho_m, eps=eps)

    mu_hi = max(2.0 * pair.mu_sum, 1.25 * mu_m)
    curve_mu = sweep_curve(mu_curve(pair), resolution, clamp=Interval(pair.mu_sum, mu_hi))
    curve_rho = sweep_curve(rho_curve(pair), resolution)
    curves = [curve_mu, curve_rho]

    data = [*curve_mu.points, *curve_rho.points]
    markers = [
        Marker(f"BR_mu({mu_m:.9g})", br_mu_point(pair, mu_m)),
        Marker(f"BR_rho({rho_m:.9g})", br_rho_point(pair, rho_m)),
    ]
    result_segment = None
    annotations = [f"case: {report.case_label.value}"]
    if report.interval is not None:
        result_point = to_point(report.interval)
        markers.append(Marker("feasible region", result_point))
        result_segment = (
            KulpaPoint(report.interval.lo, 0.0),
            KulpaPoint(report.interval.hi, 0.0),
        )
        data.append(result_point)
        locus_line = _case_locus_polyline(pair, mu_m, rho_m, report.case_label, resolution)
        if locus_line is not None:
            curves.append(locus_line)
        annotations.append(
            f"r in [{report.interval.lo:.9g}, {report.interval.hi:.9g}]"
        )
    else:
        annotations.append("empty")

    data.extend(m.point for m in markers)
    x_lo, x_hi = min(p.x for p in data), max(p.x for p in data)
    y_lo, y_hi = min(p.y for p in data), max(p.y for p in data)
    pad = 0.05 * max(x_hi - x_lo, y_hi - y_lo, 1e-9)
    box = (x_lo - pad, x_hi + pad, min(y_lo, 0.0) - pad, y_hi + pad)
    for curve in (mu_curve(pair), rho_curve(pair)):
        for line in curve.asymptotes:
            segment = _asymptote_segment(line, *box)
            if segment is not None:
                curves.append(segment)
        annotations.extend(curve.diagnostics)

    return Scene(
        curves=tuple(curves),
        markers=tuple(markers),
        result_segment=result_segment,
        annotations=tuple(annotations),
    )


# --- serialization -----------------------------------------------------------


def _f(value: float) -> str:
    """Locale-independent number rendering, 9 significant digits."""
    if value == 0.0:
        value = 0.0  # normalize -0.0
    return f"{value:.9g}"


def series_to_dict(series: Series) -> dict:
    return {
        "name": series.name,
        "parameter": series.parameter,
        "points": [[p, lo, hi] for p, lo, hi in series.points],
    }


def scene_to_dict(scene: Scene) -> dict:
    return {
        "curves": [
            {
                "label": c.label,
                "role": c.role,
                "points": [[pt.x, pt.y] for pt in c.points],
            }
            for c in scene.curves
        ],
        "markers": [{"label": m.label, "x": m.point.x, "y": m.point.y} for m in scene.markers],
        "result_segment": (
            [[scene.result_segment[0].x, scene.result_segment[0].y],
             [scene.result_segment[1].x, scene.result_segment[1].y]]
            if scene.result_segment is not None
            else None
        ),
        "annotations": list(scene.annotations),
    }


def emit_csv(series: Series) -> bytes:
    """RFC-4180 CSV: header row, CRLF line endings, 9 significant digits."""
    lines = [f"{series.parameter},r_lower,r_upper"]
    for param, lo, hi in series.points:
        lines.append(f"{_f(param)},{_f(lo)},{_f(hi)}")
    return ("\r\n".join(lines) + "\r\n").encode("ascii")


_SERIES_COLORS = {"lower": "#1f77b4", "upper": "#d62728", "band": "#9ecae1"}
_SCENE_COLORS = {
    "BR_mu curve": "#1f77b4",
    "BR_rho curve": "#d62728",
    "asymptote": "#999999",
    "locus": "#2ca02c",
}


def _color_for(poly: Polyline) -> str:
    return _SCENE_COLORS.get(poly.label) or _SCENE_COLORS.get(poly.role, "#333333")


class _Frame:
    """Affine map from data coordinates to SVG pixels (y flipped)."""

    def __init__(self, xs, ys, style: SvgStyle, equal_aspect: bool):
        pad_x = (max(xs) - min(xs)) * 0.05 or 1.0
        pad_y = (max(ys) - min(ys)) * 0.05 or 1.0
        self.x_lo, self.x_hi = min(xs) - pad_x, max(xs) + pad_x
        self.y_lo, self.y_hi = min(ys) - pad_y, max(ys) + pad_y
        inner_w = style.width - 2.0 * style.margin
        inner_h = style.height - 2.0 * style.margin
        sx = inner_w / (self.x_hi - self.x_lo)
        sy = inner_h / (self.y_hi - self.y_lo)
        if equal_aspect:
            # One scale for both axes so unit slopes render at 45 degrees.
            sx = sy = min(sx, sy)
        self.sx, self.sy = sx, sy
        self.margin = style.margin
        self.height = style.height

    def px(self, x: float) -> str:
        return _f(self.margin + (x - self.x_lo) * self.sx)

    def py(self, y: float) -> str:
        return _f(self.height - self.margin - (y - self.y_lo) * self.sy)

    def path(self, pts) -> str:
        return " ".join(f"{self.px(p.x)},{self.py(p.y)}" for p in pts)


def _svg_open(style: SvgStyle, title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}" '
        f'font-family="monospace" font-size="{style.font_size}">',
        f'<rect width="{style.width}" height="{style.height}" fill="{style.background}"/>',
        f'<text x="{_f(style.margin)}" y="{_f(style.margin * 0.55)}" fill="#000000">{title}</text>',
    ]


def _axis_lines(frame: _Frame, out: list[str]) -> None:
    if frame.x_lo < 0.0 < frame.x_hi:
        out.append(
            f'<line x1="{frame.px(0.0)}" y1="{frame.py(frame.y_lo)}" '
            f'x2="{frame.px(0.0)}" y2="{frame.py(frame.y_hi)}" stroke="#cccccc"/>'
        )
    if frame.y_lo < 0.0 < frame.y_hi:
        out.append(
            f'<line x1="{frame.px(frame.x_lo)}" y1="{frame.py(0.0)}" '
            f'x2="{frame.px(frame.x_hi)}" y2="{frame.py(0.0)}" stroke="#cccccc"/>'
        )
    out.append(
        f'<text x="{frame.px(frame.x_lo)}" y="{_f(frame.height - 8.0)}" fill="#555555">'
        f"x: {_f(frame.x_lo)} .. {_f(frame.x_hi)}  y: {_f(frame.y_lo)} .. {_f(frame.y_hi)}</text>"
    )


def _scene_svg(scene: Scene, style: SvgStyle) -> bytes:
    xs, ys = [], []
    for poly in scene.curves:
        xs.extend(p.x for p in poly.points)
        ys.extend(p.y for p in poly.points)
    for marker in scene.markers:
        xs.append(marker.point.x)
        ys.append(marker.point.y)
    if scene.result_segment:
        for p in scene.result_segment:
            xs.append(p.x)
            ys.append(p.y)
    if not xs:
        raise EncodingFailure("scene has no geometry to render")
    frame = _Frame(xs, ys, style, equal_aspect=True)

    out = _svg_open(style, "midpoint-radius diagram")
    _axis_lines(frame, out)
    for poly in scene.curves:
        dash = ' stroke-dasharray="6,4"' if poly.role == "asymptote" else ""
        width = "2.5" if poly.role == "locus" else "1.5"
        out.append(
            f'<polyline fill="none" stroke="{_color_for(poly)}" stroke-width="{width}"{dash} '
            f'points="{frame.path(poly.points)}"/>'
        )
    if scene.result_segment:
        a, b = scene.result_segment
        out.append(
            f'<line x1="{frame.px(a.x)}" y1="{frame.py(a.y)}" x2="{frame.px(b.x)}" '
            f'y2="{frame.py(b.y)}" stroke="#000000" stroke-width="3"/>'
        )
    for marker in scene.markers:
        cx, cy = frame.px(marker.point.x), frame.py(marker.point.y)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="3.5" fill="#000000"/>')
        out.append(
            f'<text x="{_f(float(cx) + 6.0)}" y="{_f(float(cy) - 6.0)}" fill="#000000">'
            f"{marker.label}</text>"
        )
    for i, note in enumerate(scene.annotations):
        out.append(
            f'<text x="{_f(style.margin)}" y="{_f(style.margin + 14.0 * (i + 1))}" '
            f'fill="#333333">{note}</text>'
        )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def _series_svg(series: Series, style: SvgStyle) -> bytes:
    xs = [p for p, _, _ in series.points]
    ys = [v for _, lo, hi in series.points for v in (lo, hi)]
    frame = _Frame(xs, ys, style, equal_aspect=False)

    lower = [KulpaPoint(p, lo) for p, lo, _ in series.points]
    upper = [KulpaPoint(p, hi) for p, _, hi in series.points]
    out = _svg_open(style, f"{series.name} envelope over {series.parameter}")
    _axis_lines(frame, out)
    band = frame.path(lower + list(reversed(upper)))
    out.append(f'<polygon fill="{_SERIES_COLORS["band"]}" fill-opacity="0.45" points="{band}"/>')
    out.append(
        f'<polyline fill="none" stroke="{_SERIES_COLORS["lower"]}" stroke-width="1.5" '
        f'points="{frame.path(lower)}"/>'
    )
    out.append(
        f'<polyline fill="none" stroke="{_SERIES_COLORS["upper"]}" stroke-width="1.5" '
        f'points="{frame.path(upper)}"/>'
    )
    out.append(
        f'<text x="{_f(style.width - style.margin * 3.2)}" y="{_f(style.margin * 0.55)}" '
        f'fill="#555555">r_lower / r_upper</text>'
    )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def emit_svg(obj: Union[Scene, Series], style: Optional[SvgStyle] = None) -> bytes:
    """Render a Scene (equal aspect) or Series (band chart) to SVG bytes."""
    style = style or SvgStyle()
    if isinstance(obj, Scene):
        return _scene_svg(obj, style)
    if isinstance(obj, Series):
        return _series_svg(obj, style)
    raise EncodingFailure(f"cannot render object of type {type(obj).__name__}")
