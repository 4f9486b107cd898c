/** Editable scenario state and the CLI scenario JSON it round-trips through.
 *
 * Exported documents use the exact shape the command line tool and the
 * service accept, so a pinned proposal can be replayed outside the browser.
 */

import type { CompanyInput, OutcomeDoc, ScenarioDoc } from "./types.js";

export type OutcomeMode = "synergy" | "direct";

/** Everything the control panel edits. Both outcome forms are kept so
 * switching modes starts from the last equivalent values. */
export interface EditableInputs {
  a: CompanyInput;
  b: CompanyInput;
  mode: OutcomeMode;
  s: number;
  v: number;
  mu_m: number;
  rho_m: number;
  r: number;
}

export function scenarioFromInputs(inputs: EditableInputs): ScenarioDoc {
  const outcome: OutcomeDoc =
    inputs.mode === "synergy"
      ? { s: inputs.s, v: inputs.v }
      : { mu_m: inputs.mu_m, rho_m: inputs.rho_m };
  return {
    v: 1,
    companies: {
      a: { ...inputs.a },
      b: { ...inputs.b },
    },
    outcome,
  };
}

/** Load a document into editable state, keeping the candidate ratio.
 *
 * The inactive outcome pair starts at zero; the first response echoes the
 * implied coordinates and the panel syncs them from there.
 */
export function inputsFromScenario(doc: ScenarioDoc, r: number): EditableInputs {
  const companies = { a: { ...doc.companies.a }, b: { ...doc.companies.b } };
  if ("s" in doc.outcome) {
    const { s, v } = doc.outcome;
    return { ...companies, mode: "synergy", s, v, mu_m: 0, rho_m: 0, r };
  }
  const { mu_m, rho_m } = doc.outcome;
  return { ...companies, mode: "direct", s: 0, v: 0, mu_m, rho_m, r };
}

function fail(msg: string): never {
  throw new Error(`scenario: ${msg}`);
}

function asRecord(value: unknown, what: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    fail(`${what} must be a JSON object`);
  }
  return value as Record<string, unknown>;
}

function asNumber(value: unknown, what: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    fail(`${what} must be a finite number`);
  }
  return value;
}

function parseCompany(value: unknown, which: string): CompanyInput {
  const rec = asRecord(value, `companies.${which}`);
  return {
    price: asNumber(rec.price, `companies.${which}.price`),
    shares: asNumber(rec.shares, `companies.${which}.shares`),
    risk_per_share: asNumber(rec.risk_per_share, `companies.${which}.risk_per_share`),
  };
}

/** Validate an imported document. Throws Error with a field path on any
 * shape problem; admissibility itself is the service's call. */
export function parseScenarioDoc(value: unknown): ScenarioDoc {
  const doc = asRecord(value, "document");
  if (doc.v !== 1) fail("v must be 1");
  const companies = asRecord(doc.companies, "companies");
  const a = parseCompany(companies.a, "a");
  const b = parseCompany(companies.b, "b");
  const raw = asRecord(doc.outcome, "outcome");
  const keys = Object.keys(raw).sort();
  let outcome: OutcomeDoc;
  if (keys.join(",") === "mu_m,rho_m") {
    outcome = { mu_m: asNumber(raw.mu_m, "outcome.mu_m"), rho_m: asNumber(raw.rho_m, "outcome.rho_m") };
  } else if (keys.join(",") === "s,v") {
    outcome = { s: asNumber(raw.s, "outcome.s"), v: asNumber(raw.v, "outcome.v") };
  } else {
    fail("outcome must be exactly {mu_m, rho_m} or {s, v}");
  }
  const out: ScenarioDoc = { v: 1, companies: { a, b }, outcome };
  if (doc.metadata !== undefined) {
    out.metadata = asRecord(doc.metadata, "metadata");
  }
  return out;
}
