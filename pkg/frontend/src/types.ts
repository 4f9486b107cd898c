/** Wire types for the /api/v1 analysis service.
 *
 * Field names mirror the JSON exactly; nothing here is recomputed on the
 * client. Interval-valued fields arrive as [lo, hi] pairs or null.
 */

export interface CompanyInput {
  price: number;
  shares: number;
  risk_per_share: number;
}

export interface ScenarioCompanies {
  a: CompanyInput;
  b: CompanyInput;
}

// A scenario document carries exactly one outcome form.
export type OutcomeDoc = { mu_m: number; rho_m: number } | { s: number; v: number };

export interface ScenarioDoc {
  v: 1;
  companies: ScenarioCompanies;
  outcome: OutcomeDoc;
  metadata?: Record<string, unknown>;
}

/** Analyze request: the scenario document plus request-only extras. */
export interface AnalyzeRequest extends ScenarioDoc {
  r_candidate?: number;
  resolution?: number;
}

export interface ApiErrorBody {
  code: string;
  path: string;
  message: string;
}

export type IntervalPair = [number, number];

export interface InputsEcho {
  a: CompanyInput;
  b: CompanyInput;
  mu_m: number;
  rho_m: number;
  s: number;
  v: number;
}

export interface PairBlock {
  mu_a: number;
  mu_b: number;
  rho_a: number;
  rho_b: number;
  mu_sum: number;
  rho_sum: number;
  rho_floor: number;
  r_star: number;
  r_star_star: number;
  lambda_a: number;
  lambda_b: number;
}

export interface ReportBlock {
  case: string;
  interval: IntervalPair | null;
  tie: boolean;
}

export interface RegionsBlock {
  br_mu: IntervalPair | null;
  br_rho: IntervalPair | null;
  cr_a: IntervalPair | null;
  cr_b: IntervalPair | null;
}

export interface PerformanceBlock {
  lambda_m: number;
  reaches_a: boolean;
  reaches_b: boolean;
}

export interface ThresholdPair {
  required: number;
  raw: number;
}

export interface SynergyThresholds {
  a: ThresholdPair;
  b: ThresholdPair;
}

export interface Verdicts {
  a_value: boolean;
  b_value: boolean;
  a_risk: boolean;
  b_risk: boolean;
}

export interface CandidateBlock {
  r: number;
  verdicts: Verdicts;
  all_accept: boolean;
  inside: boolean;
  distance_to_nearest_endpoint: number | null;
  per_share_risk_b: number;
}

export interface SceneCurve {
  label: string;
  role: string;
  points: [number, number][];
}

export interface SceneMarker {
  label: string;
  x: number;
  y: number;
}

export interface SceneDict {
  curves: SceneCurve[];
  markers: SceneMarker[];
  result_segment: [[number, number], [number, number]] | null;
  annotations: string[];
}

export interface ApiResponse {
  inputs: InputsEcho;
  pair: PairBlock;
  report: ReportBlock;
  regions: RegionsBlock;
  performance: PerformanceBlock;
  synergy_thresholds: SynergyThresholds;
  candidate: CandidateBlock | null;
  scene: SceneDict;
}
