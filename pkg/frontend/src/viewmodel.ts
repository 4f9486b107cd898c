/** Pure projections from a service response to display values.
 *
 * Every number the page shows is a response field rendered through fmt(),
 * which uses the shortest decimal that round-trips, so the text parses
 * back to the exact field value. No region mathematics happens here; the
 * only arithmetic is slider ergonomics sanctioned by the pair block.
 */

import type { ApiResponse, IntervalPair, Verdicts } from "./types.js";

export function fmt(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  return String(value);
}

export function fmtInterval(interval: IntervalPair | null | undefined): string {
  if (interval === null || interval === undefined) return "empty";
  return `[${fmt(interval[0])}, ${fmt(interval[1])}]`;
}

export type LampState = "green" | "red" | "off";

export interface Lamp {
  key: keyof Verdicts;
  label: string;
  state: LampState;
}

const LAMP_ORDER: [keyof Verdicts, string][] = [
  ["a_value", "A value"],
  ["b_value", "B value"],
  ["a_risk", "A risk"],
  ["b_risk", "B risk"],
];

/** Four accept/reject lamps; all off until a candidate verdict exists. */
export function verdictLamps(response: ApiResponse | null): Lamp[] {
  const verdicts = response?.candidate?.verdicts ?? null;
  return LAMP_ORDER.map(([key, label]) => ({
    key,
    label,
    state: verdicts === null ? "off" : verdicts[key] ? "green" : "red",
  }));
}

export interface NumberField {
  path: string;
  label: string;
  value: number | null;
}

/** Scalar readouts in panel order; path names the response field. */
export function numberFields(response: ApiResponse): NumberField[] {
  const c = response.candidate;
  const fields: NumberField[] = [
    { path: "inputs.mu_m", label: "mu_M", value: response.inputs.mu_m },
    { path: "inputs.rho_m", label: "rho_M", value: response.inputs.rho_m },
    { path: "inputs.s", label: "synergy s", value: response.inputs.s },
    { path: "inputs.v", label: "risk reduction v", value: response.inputs.v },
    { path: "pair.r_star", label: "r*", value: response.pair.r_star },
    { path: "pair.r_star_star", label: "r**", value: response.pair.r_star_star },
    { path: "performance.lambda_m", label: "lambda_M", value: response.performance.lambda_m },
  ];
  if (c !== null) {
    fields.push(
      { path: "candidate.r", label: "candidate r", value: c.r },
      {
        path: "candidate.distance_to_nearest_endpoint",
        label: "distance to nearest endpoint",
        value: c.distance_to_nearest_endpoint,
      },
      { path: "candidate.per_share_risk_b", label: "per-share risk to B", value: c.per_share_risk_b },
    );
  }
  return fields;
}

export interface IntervalField {
  path: string;
  label: string;
  value: IntervalPair | null;
}

export function intervalFields(response: ApiResponse): IntervalField[] {
  return [
    { path: "report.interval", label: "feasible r", value: response.report.interval },
    { path: "regions.br_mu", label: "BR_mu", value: response.regions.br_mu },
    { path: "regions.br_rho", label: "BR_rho", value: response.regions.br_rho },
    { path: "regions.cr_a", label: "CR_A", value: response.regions.cr_a },
    { path: "regions.cr_b", label: "CR_B", value: response.regions.cr_b },
  ];
}

export interface SliderBounds {
  sMin: number;
  sMax: number;
  sStep: number;
  vMin: number;
  vMax: number; // strictly below min(rho_a, rho_b)
  vStep: number;
  muMin: number;
  muMax: number;
  muStep: number;
  rhoMin: number; // strictly above rho_floor
  rhoMax: number;
  rhoStep: number;
  rMin: number;
  rMax: number;
  rStep: number;
}

// Power of ten near span/200 keeps handle moves readable.
function niceStep(span: number): number {
  if (!Number.isFinite(span) || span <= 0) return 0.01;
  return Math.pow(10, Math.floor(Math.log10(span)) - 2);
}

/** Admissible slider ranges from the pair block of the last response. */
export function sliderBounds(response: ApiResponse): SliderBounds {
  const pair = response.pair;
  const vBound = Math.min(pair.rho_a, pair.rho_b);
  const vStep = niceStep(vBound);
  const sStep = niceStep(pair.mu_sum);
  const rhoStep = niceStep(pair.rho_sum - pair.rho_floor);
  return {
    sMin: 0,
    sMax: pair.mu_sum,
    sStep,
    vMin: 0,
    vMax: vBound - vStep,
    vStep,
    muMin: pair.mu_sum,
    muMax: 2 * pair.mu_sum,
    muStep: sStep,
    rhoMin: pair.rho_floor + rhoStep,
    rhoMax: pair.rho_sum,
    rhoStep,
    rMin: 0,
    rMax: 3,
    rStep: 0.005,
  };
}
