"""Scenario file format and the merger-er-lab command line."""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from . import payloads
from .errors import (
    EncodingFailure,
    InvalidCase,
    ParseError,
    RegionError,
    ValidationError,
)
from .kulpa import (
    CaseRange,
    Hyperbola,
    KulpaPoint,
    Locus,
    case_mu_range,
    case_rho_range,
    locus_fixed_mu,
    locus_fixed_rho,
)
from .model import (
    CaseLabel,
    CompanyProfile,
    Interval,
    MergerPair,
    PostMergerOutcome,
    SynergyView,
    classify,
    derive_pair,
    outcome_from_synergy,
)
from .sweep import (
    DEFAULT_RESOLUTION,
    build_scene,
    emit_csv,
    emit_svg,
    series_to_dict,
    sweep_br_mu,
    sweep_br_rho,
)

log = logging.getLogger("merger_er_lab")

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    range: Interval
    samples: int = DEFAULT_RESOLUTION


@dataclass(frozen=True)
class ScenarioFile:
    """Parsed scenario: two companies, one outcome form, optional sweep."""

    a: CompanyProfile
    b: CompanyProfile
    outcome: Union[PostMergerOutcome, SynergyView]
    sweep: Optional[SweepSpec] = None
    metadata: dict = field(default_factory=dict)
    version: int = SCHEMA_VERSION


def _num(obj: dict, path: str, key: str) -> float:
    if key not in obj:
        raise ParseError(f"missing required field {path}.{key}", path=f"{path}.{key}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(
            f"{path}.{key} must be a number, got {type(value).__name__}",
            path=f"{path}.{key}",
            constraint="number",
        )
    if not math.isfinite(float(value)):
        raise ValidationError(f"{path}.{key} must be finite", path=f"{path}.{key}", constraint="finite")
    return float(value)


def _profile(obj: Any, path: str) -> CompanyProfile:
    if not isinstance(obj, dict):
        raise ParseError(f"{path} must be an object", path=path)
    values = {key: _num(obj, path, key) for key in ("price", "shares", "risk_per_share")}
    extra = set(obj) - {"price", "shares", "risk_per_share"}
    if extra:
        raise ValidationError(
            f"{path} has unknown fields: {sorted(extra)}", path=path, constraint="known fields"
        )
    try:
        return CompanyProfile(**values)
    except RegionError as err:
        raise ValidationError(err.message, path=f"{path}.{err.path}", constraint="positive") from err


def parse_scenario_obj(data: Any) -> ScenarioFile:
    """Validate an already-decoded scenario object."""
    if not isinstance(data, dict):
        raise ParseError("scenario must be a JSON object", path="")
    if "v" not in data:
        raise ParseError("missing required field v", path="v")
    if data["v"] != SCHEMA_VERSION:
        raise ValidationError(
            f"unsupported schema version {data['v']!r}", path="v", constraint=f"v == {SCHEMA_VERSION}"
        )

    companies = data.get("companies")
    if not isinstance(companies, dict):
        raise ParseError("missing required object companies", path="companies")
    a = _profile(companies.get("a"), "companies.a")
    b = _profile(companies.get("b"), "companies.b")

    outcome_obj = data.get("outcome")
    if not isinstance(outcome_obj, dict):
        raise ParseError("missing required object outcome", path="outcome")
    keys = set(outcome_obj)
    if keys == {"mu_m", "rho_m"}:
        outcome: Union[PostMergerOutcome, SynergyView] = PostMergerOutcome(
            mu_m=_num(outcome_obj, "outcome", "mu_m"),
            rho_m=_num(outcome_obj, "outcome", "rho_m"),
        )
    elif keys == {"s", "v"}:
        outcome = SynergyView(
            s=_num(outcome_obj, "outcome", "s"), v=_num(outcome_obj, "outcome", "v")
        )
    else:
        raise ValidationError(
            f"outcome must hold exactly mu_m/rho_m or s/v, got {sorted(keys)}",
            path="outcome",
            constraint="exactly one outcome form",
        )

    sweep_spec = None
    if "sweep" in data and data["sweep"] is not None:
        sw = data["sweep"]
        if not isinstance(sw, dict):
            raise ParseError("sweep must be an object", path="sweep")
        parameter = sw.get("parameter")
        if parameter not in ("mu_m", "rho_m"):
            raise ValidationError(
                f"sweep.parameter must be mu_m or rho_m, got {parameter!r}",
                path="sweep.parameter",
                constraint="mu_m | rho_m",
            )
        rng = sw.get("range")
        if not isinstance(rng, list) or len(rng) != 2:
            raise ValidationError(
                "sweep.range must be a two-element array", path="sweep.range", constraint="[lo, hi]"
            )
        lo, hi = (_num({"lo": rng[0]}, "sweep.range", "lo"), _num({"hi": rng[1]}, "sweep.range", "hi"))
        if lo > hi:
            raise ValidationError(
                f"sweep.range is empty: [{lo}, {hi}]", path="sweep.range", constraint="lo <= hi"
            )
        samples = sw.get("samples", DEFAULT_RESOLUTION)
        if isinstance(samples, bool) or not isinstance(samples, int):
            raise ValidationError(
                "sweep.samples must be an integer", path="sweep.samples", constraint="integer"
            )
        if samples < 2:
            raise ValidationError(
                f"sweep.samples must be >= 2, got {samples}", path="sweep.samples", constraint=">= 2"
            )
        sweep_spec = SweepSpec(parameter=parameter, range=Interval(lo, hi), samples=samples)

    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ValidationError("metadata must be an object", path="metadata", constraint="object")

    known = {"v", "companies", "outcome", "sweep", "metadata"}
    extra = set(data) - known
    if extra:
        raise ValidationError(
            f"unknown top-level fields: {sorted(extra)}", path="", constraint="known fields"
        )
    return ScenarioFile(a=a, b=b, outcome=outcome, sweep=sweep_spec, metadata=dict(metadata))


def parse_scenario(data: bytes) -> ScenarioFile:
    """Decode and validate scenario bytes (UTF-8 JSON)."""
    try:
        decoded = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as err:
        raise ParseError(f"not valid UTF-8 JSON: {err}", path="") from err
    return parse_scenario_obj(decoded)


def _round15(value: Any) -> Any:
    if isinstance(value, float):
        return float(f"{value:.15g}")
    if isinstance(value, dict):
        return {k: _round15(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_round15(v) for v in value]
    return value


def serialize_scenario(scenario: ScenarioFile) -> bytes:
    """Scenario back to JSON bytes, numbers at up to 15 significant digits."""
    doc: dict = {
        "v": scenario.version,
        "companies": {
            "a": {
                "price": scenario.a.price,
                "shares": scenario.a.shares,
                "risk_per_share": scenario.a.risk_per_share,
            },
            "b": {
                "price": scenario.b.price,
                "shares": scenario.b.shares,
                "risk_per_share": scenario.b.risk_per_share,
            },
        },
    }
    if isinstance(scenario.outcome, PostMergerOutcome):
        doc["outcome"] = {"mu_m": scenario.outcome.mu_m, "rho_m": scenario.outcome.rho_m}
    else:
        doc["outcome"] = {"s": scenario.outcome.s, "v": scenario.outcome.v}
    if scenario.sweep is not None:
        doc["sweep"] = {
            "parameter": scenario.sweep.parameter,
            "range": [scenario.sweep.range.lo, scenario.sweep.range.hi],
            "samples": scenario.sweep.samples,
        }
    if scenario.metadata:
        doc["metadata"] = scenario.metadata
    return (json.dumps(_round15(doc), indent=2) + "\n").encode("utf-8")


# --- outcome resolution -------------------------------------------------------


def resolve_outcome(
    scenario: ScenarioFile,
    *,
    mu_m: Optional[float] = None,
    rho_m: Optional[float] = None,
    s: Optional[float] = None,
    v: Optional[float] = None,
) -> tuple[MergerPair, PostMergerOutcome]:
    """Apply command-line overrides on top of the scenario outcome.

    --s/--v replace the same component as --mu-m/--rho-m via the synergy
    map, so each component accepts at most one override.
    """
    if mu_m is not None and s is not None:
        raise ValidationError(
            "--mu-m and --s override the same component", path="mu_m", constraint="one override"
        )
    if rho_m is not None and v is not None:
        raise ValidationError(
            "--rho-m and --v override the same component", path="rho_m", constraint="one override"
        )
    pair = derive_pair(scenario.a, scenario.b)
    if isinstance(scenario.outcome, SynergyView):
        base = outcome_from_synergy(pair, scenario.outcome.s, scenario.outcome.v)
    else:
        base = scenario.outcome
    out_mu, out_rho = base.mu_m, base.rho_m
    if s is not None:
        out_mu = outcome_from_synergy(pair, s, 0.0).mu_m
    if v is not None:
        out_rho = outcome_from_synergy(pair, 0.0, v).rho_m
    if mu_m is not None:
        out_mu = float(mu_m)
    if rho_m is not None:
        out_rho = float(rho_m)
    return pair, PostMergerOutcome(mu_m=out_mu, rho_m=out_rho)


# --- command implementations --------------------------------------------------


def _json_bytes(doc: Any, *, compact: bool = False) -> bytes:
    if compact:
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def cmd_analyze(scenario: ScenarioFile, args: argparse.Namespace) -> bytes:
    if args.format not in (None, "json"):
        raise EncodingFailure(f"analyze emits json, not {args.format}")
    pair, outcome = resolve_outcome(
        scenario, mu_m=args.mu_m, rho_m=args.rho_m, s=args.s, v=args.v
    )
    resolution = args.samples or DEFAULT_RESOLUTION
    return _json_bytes(
        payloads.build_analysis(pair, outcome, resolution=resolution)
    )


def cmd_classify(scenario: ScenarioFile, args: argparse.Namespace) -> bytes:
    if args.format not in (None, "json"):
        raise EncodingFailure(f"classify emits json, not {args.format}")
    pair, outcome = resolve_outcome(
        scenario, mu_m=args.mu_m, rho_m=args.rho_m, s=args.s, v=args.v
    )
    report = classify(pair, outcome.mu_m, outcome.rho_m)
    doc: dict = {"case": report.case_label.value}
    if report.interval is not None:
        doc["interval"] = [report.interval.lo, report.interval.hi]
    return _json_bytes(doc, compact=True)


def cmd_sweep(scenario: ScenarioFile, args: argparse.Namespace) -> bytes:
    if scenario.sweep is None:
        raise ValidationError(
            "scenario has no sweep block and sweep needs one", path="sweep", constraint="present"
        )
    spec = scenario.sweep
    samples = args.samples or spec.samples
    pair, _ = resolve_outcome(scenario, mu_m=args.mu_m, rho_m=args.rho_m, s=args.s, v=args.v)
    if spec.parameter == "mu_m":
        series = sweep_br_mu(pair, spec.range, samples)
    else:
        series = sweep_br_rho(pair, spec.range, samples)
    fmt = args.format or "csv"
    if fmt == "csv":
        return emit_csv(series)
    if fmt == "json":
        return _json_bytes(series_to_dict(series))
    if fmt == "svg":
        return emit_svg(series)
    raise EncodingFailure(f"unknown sweep format {fmt}")


def cmd_plot(scenario: ScenarioFile, args: argparse.Namespace) -> bytes:
    if args.format not in (None, "svg"):
        raise EncodingFailure(f"plot emits svg, not {args.format}")
    pair, outcome = resolve_outcome(
        scenario, mu_m=args.mu_m, rho_m=args.rho_m, s=args.s, v=args.v
    )
    resolution = args.samples or DEFAULT_RESOLUTION
    scene = build_scene(pair, outcome.mu_m, outcome.rho_m, resolution=resolution)
    return emit_svg(scene)


def _range_doc(rng: CaseRange) -> dict:
    def bounds(iv: Optional[Interval]) -> Optional[list]:
        if iv is None:
            return None
        hi = None if math.isinf(iv.hi) else iv.hi
        return [iv.lo, hi]

    return {
        "values": bounds(rng.values),
        "unbounded_above": rng.unbounded_above,
        "open_below": rng.open_below,
        "synergy": bounds(rng.synergy_values),
        "risk_reduction": bounds(rng.risk_reduction_values),
    }


def _locus_doc(locus: Union[Locus, Hyperbola, KulpaPoint]) -> dict:
    if isinstance(locus, Locus):
        rng = locus.param_range
        hi = None if math.isinf(rng.hi) else rng.hi
        return {
            "kind": "line",
            "slope": locus.slope,
            "intercept": locus.intercept,
            "param_range": [rng.lo, hi],
        }
    if isinstance(locus, Hyperbola):
        return {"kind": "curve", "curve": locus.kind.value}
    return {"kind": "point", "x": locus.x, "y": locus.y}


def cmd_locus(scenario: ScenarioFile, args: argparse.Namespace) -> bytes:
    if args.format not in (None, "json"):
        raise EncodingFailure(f"locus emits json, not {args.format}")
    if args.case is None:
        raise ValidationError("locus needs --case", path="case", constraint="required")
    label = CaseLabel(args.case)
    pair, outcome = resolve_outcome(
        scenario, mu_m=args.mu_m, rho_m=args.rho_m, s=args.s, v=args.v
    )
    doc: dict = {"case": label.value}
    for key, fixed, locus_fn, range_fn in (
        ("fixed_rho", outcome.rho_m, locus_fixed_rho, case_mu_range),
        ("fixed_mu", outcome.mu_m, locus_fixed_mu, case_rho_range),
    ):
        rng = range_fn(pair, fixed, label)
        entry: dict = {"fixed_value": fixed, "range": _range_doc(rng)}
        if rng.empty:
            entry["attainable"] = False
        else:
            entry["attainable"] = True
            try:
                entry["locus"] = _locus_doc(locus_fn(pair, fixed, label))
            except InvalidCase:
                entry["attainable"] = False
        doc[key] = entry
    return _json_bytes(doc)


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(cors_origins=tuple(args.cors_origin) if args.cors_origin else ("*",))
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


# --- entry point ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="merger-er-lab",
        description="Feasible exchange-ratio regions for stock-for-stock mergers",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_file in (
        ("analyze", True),
        ("classify", True),
        ("sweep", True),
        ("plot", True),
        ("locus", True),
        ("serve", False),
    ):
        p = sub.add_parser(name)
        if needs_file:
            p.add_argument("file", help="scenario JSON file")
            p.add_argument("--mu-m", dest="mu_m", type=float, default=None)
            p.add_argument("--rho-m", dest="rho_m", type=float, default=None)
            p.add_argument("--s", dest="s", type=float, default=None)
            p.add_argument("--v", dest="v", type=float, default=None)
            p.add_argument("--out", dest="out", default=None)
            p.add_argument("--samples", dest="samples", type=int, default=None)
            p.add_argument("--format", dest="format", choices=("json", "csv", "svg"), default=None)
        if name == "locus":
            p.add_argument("--case", dest="case", choices=[c.value for c in CaseLabel], default=None)
        if name == "serve":
            p.add_argument("--host", default="127.0.0.1")
            p.add_argument("--port", type=int, default=8787)
            p.add_argument("--cors-origin", action="append", default=None)
    return parser


_COMMANDS = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "plot": cmd_plot,
    "locus": cmd_locus,
}


def main(argv: Optional[list[str]] = None) -> int:
    level = os.environ.get("MERGER_ER_LOG")
    if level:
        logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO))
    args = _build_parser().parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    try:
        with open(args.file, "rb") as handle:
            scenario = parse_scenario(handle.read())
        log.debug("parsed scenario %s", args.file)
        output = _COMMANDS[args.command](scenario, args)
    except FileNotFoundError:
        err = ParseError(f"cannot read scenario file {args.file}", path="file")
        sys.stderr.write(json.dumps(err.to_dict()) + "\n")
        return 2
    except RegionError as err:
        sys.stderr.write(json.dumps(err.to_dict()) + "\n")
        return 2
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(output)
    else:
        sys.stdout.buffer.write(output)
        sys.stdout.buffer.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
