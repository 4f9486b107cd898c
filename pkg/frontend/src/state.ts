/** Request scheduling and snapshot pinning for the explorer session.
 *
 * Slider moves debounce at 100 ms. Firing a request aborts the in-flight
 * one, and a response is applied only while it is still the newest issued
 * request, so rendered state always matches the most recent completed
 * answer (strict last write wins).
 */

import type { AnalyzeClient } from "./api.js";
import type { AnalyzeRequest, ApiResponse, IntervalPair, Verdicts } from "./types.js";
import { scenarioFromInputs, type EditableInputs } from "./scenario.js";

export const DEBOUNCE_MS = 100;

/** Client-side only; comparing proposals needs no server state. */
export interface Snapshot {
  label: string;
  inputs: EditableInputs;
  caseLabel: string;
  interval: IntervalPair | null;
  r: number;
  verdicts: Verdicts | null;
  allAccept: boolean;
}

export interface SessionHooks {
  onResponse(response: ApiResponse): void;
  onError(error: unknown): void;
}

export class Session {
  inputs: EditableInputs;
  lastResponse: ApiResponse | null = null;
  pinned: Snapshot[] = [];

  private seq = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private controller: AbortController | null = null;

  constructor(
    private readonly client: AnalyzeClient,
    private readonly hooks: SessionHooks,
    initial: EditableInputs,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {
    this.inputs = structuredClone(initial);
  }

  /** Merge a partial edit and schedule a debounced request. */
  update(patch: Partial<EditableInputs>): void {
    Object.assign(this.inputs, structuredClone(patch));
    this.schedule();
  }

  schedule(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire();
    }, this.debounceMs);
  }

  /** Issue the request now (initial load, explicit import). */
  async fire(): Promise<void> {
    const id = ++this.seq;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    let response: ApiResponse;
    try {
      response = await this.client.analyze(this.buildRequest(), controller.signal);
    } catch (error) {
      if (controller.signal.aborted) return; // superseded on purpose
      if (id !== this.seq) return;
      this.hooks.onError(error);
      return;
    }
    if (id !== this.seq) return; // a newer request owns the screen
    this.lastResponse = response;
    this.hooks.onResponse(response);
  }

  buildRequest(): AnalyzeRequest {
    return { ...scenarioFromInputs(this.inputs), r_candidate: this.inputs.r };
  }

  pin(label?: string): Snapshot | null {
    const resp = this.lastResponse;
    if (resp === null) return null;
    const snapshot: Snapshot = {
      label: label ?? `pin ${this.pinned.length + 1}`,
      inputs: structuredClone(this.inputs),
      caseLabel: resp.report.case,
      interval: resp.report.interval,
      r: resp.candidate?.r ?? this.inputs.r,
      verdicts: resp.candidate?.verdicts ?? null,
      allAccept: resp.candidate?.all_accept ?? false,
    };
    this.pinned.push(snapshot);
    return snapshot;
  }

  unpin(index: number): void {
    this.pinned.splice(index, 1);
  }

  restore(snapshot: Snapshot): void {
    this.inputs = structuredClone(snapshot.inputs);
    this.schedule();
  }
}
