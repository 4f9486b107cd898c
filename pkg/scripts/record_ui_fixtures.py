"""Record service responses used as explorer UI test fixtures.

Rerun after changing the analysis payload or the scenario fixtures so the
frontend tests keep asserting against real service output, then rerun the
frontend suite.
"""

import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from fastapi.testclient import TestClient

from merger_er_lab.service import create_app

FIXTURES = ROOT / "frontend" / "tests" / "fixtures"


def main() -> int:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())
    base = json.loads((ROOT / "scenarios" / "case1_cr_b.json").read_text())
    empty = json.loads((ROOT / "scenarios" / "empty_region.json").read_text())
    jobs = {
        "analyze_r05.json": {**base, "r_candidate": 0.5},
        "analyze_r10.json": {**base, "r_candidate": 1.0},
        "analyze_empty.json": {**empty, "r_candidate": 0.5},
    }
    for name, body in jobs.items():
        resp = client.post("/api/v1/analyze", json=body)
        if resp.status_code != 200:
            print(f"{name}: HTTP {resp.status_code} {resp.text}", file=sys.stderr)
            return 1
        out = FIXTURES / name
        out.write_bytes(resp.content)
        print(f"{out.relative_to(ROOT)}  {len(resp.content)} bytes")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
