/** Shared fixture loading for the frontend suite.
 *
 * Fixtures are verbatim service responses captured by
 * scripts/record_ui_fixtures.py; tests must treat them as read-only.
 */

import { readFileSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import type { EditableInputs } from "../src/scenario.js";
import type { ApiResponse } from "../src/types.js";

const here = path.dirname(fileURLToPath(import.meta.url));

export function loadFixture(name: string): ApiResponse {
  const text = readFileSync(path.join(here, "fixtures", name), "utf8");
  return JSON.parse(text) as ApiResponse;
}

export function repoFile(relative: string): string {
  return readFileSync(path.join(here, "..", "..", relative), "utf8");
}

/** The mixed scenario in direct outcome form, matching the fixtures. */
export function directInputs(r: number): EditableInputs {
  return {
    a: { price: 4, shares: 20, risk_per_share: 4 },
    b: { price: 2, shares: 10, risk_per_share: 3 },
    mode: "direct",
    s: 0,
    v: 0,
    mu_m: 120,
    rho_m: 94,
    r,
  };
}
