#!/usr/bin/env python3
"""Render the five shipped scenarios and the value sweep to out/.

Usage: python3 scripts/make_figures.py [--out-dir out]
"""

from __future__ import annotations

import argparse
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from merger_er_lab import build_scene, emit_csv, emit_svg, sweep_br_mu  # noqa: E402
from merger_er_lab.io_cli import parse_scenario, resolve_outcome  # noqa: E402

SCENES = ["case1_cr_b", "case2_br_mu", "case3_br_rho", "case4_cr_a", "empty_region"]


def render(out_dir: pathlib.Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for stem in SCENES:
        scenario = parse_scenario((ROOT / "scenarios" / f"{stem}.json").read_bytes())
        pair, outcome = resolve_outcome(scenario)
        scene = build_scene(pair, outcome.mu_m, outcome.rho_m)
        target = out_dir / f"{stem}.svg"
        target.write_bytes(emit_svg(scene))
        print(f"wrote {target}")

    scenario = parse_scenario((ROOT / "scenarios" / "value_sweep.json").read_bytes())
    pair, _ = resolve_outcome(scenario)
    series = sweep_br_mu(pair, scenario.sweep.range, scenario.sweep.samples)
    (out_dir / "value_sweep.svg").write_bytes(emit_svg(series))
    (out_dir / "value_sweep.csv").write_bytes(emit_csv(series))
    print(f"wrote {out_dir / 'value_sweep.svg'}")
    print(f"wrote {out_dir / 'value_sweep.csv'}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=str(ROOT / "out"))
    args = parser.parse_args()
    render(pathlib.Path(args.out_dir))
