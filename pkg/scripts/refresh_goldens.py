#!/usr/bin/env python3
"""Regenerate the golden CLI outputs checked by the acceptance suite.

Run after any intentional change to payload or drawing output, then review
the diff before committing.
"""

from __future__ import annotations

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from merger_er_lab.io_cli import main  # noqa: E402

FIXTURES = ["case1_cr_b", "case2_br_mu", "case3_br_rho", "case4_cr_a", "empty_region"]


def refresh() -> None:
    golden = ROOT / "tests" / "golden"
    golden.mkdir(parents=True, exist_ok=True)
    for stem in FIXTURES:
        scenario = str(ROOT / "scenarios" / f"{stem}.json")
        for command, suffix in (("classify", "classify.json"), ("analyze", "analyze.json"), ("plot", "plot.svg")):
            out = golden / f"{stem}.{suffix}"
            code = main([command, scenario, "--out", str(out)])
            if code != 0:
                raise SystemExit(f"{command} failed for {scenario}")
            print(f"wrote {out.relative_to(ROOT)} ({out.stat().st_size} bytes)")


if __name__ == "__main__":
    refresh()
