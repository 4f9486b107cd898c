import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import type { AnalyzeClient } from "../src/api.js";
import { Session, type SessionHooks } from "../src/state.js";
import type { AnalyzeRequest, ApiResponse } from "../src/types.js";
import { directInputs, loadFixture } from "./helpers.js";

const r05 = loadFixture("analyze_r05.json");
const r10 = loadFixture("analyze_r10.json");

interface Pending {
  request: AnalyzeRequest;
  signal: AbortSignal;
  resolve: (response: ApiResponse) => void;
  reject: (reason: unknown) => void;
}

/** Client whose promises are settled by hand, so tests control ordering. */
function manualClient(): { client: AnalyzeClient; calls: Pending[] } {
  const calls: Pending[] = [];
  const client: AnalyzeClient = {
    analyze(request, signal) {
      return new Promise<ApiResponse>((resolve, reject) => {
        calls.push({ request, signal, resolve, reject });
      });
    },
  };
  return { client, calls };
}

function recordingHooks(): {
  hooks: SessionHooks;
  responses: ApiResponse[];
  errors: unknown[];
} {
  const responses: ApiResponse[] = [];
  const errors: unknown[] = [];
  return {
    hooks: {
      onResponse: (resp) => responses.push(resp),
      onError: (err) => errors.push(err),
    },
    responses,
    errors,
  };
}

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe("debounce", () => {
  it("collapses a burst of slider moves into one request", async () => {
    const { client, calls } = manualClient();
    const { hooks } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));

    session.update({ r: 0.6 });
    await vi.advanceTimersByTimeAsync(40);
    session.update({ r: 0.7 });
    await vi.advanceTimersByTimeAsync(40);
    session.update({ r: 0.8 });
    await vi.advanceTimersByTimeAsync(99);
    expect(calls.length).toBe(0); // still inside the 100 ms window

    await vi.advanceTimersByTimeAsync(1);
    expect(calls.length).toBe(1);
    expect(calls[0]?.request.r_candidate).toBe(0.8);
  });
});

describe("last write wins", () => {
  it("aborts the in-flight request when a newer one fires", async () => {
    const { client, calls } = manualClient();
    const { hooks, responses } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));

    session.update({ r: 0.5 });
    await vi.advanceTimersByTimeAsync(100);
    session.update({ r: 1.0 });
    await vi.advanceTimersByTimeAsync(100);

    expect(calls.length).toBe(2);
    expect(calls[0]?.signal.aborted).toBe(true);
    expect(calls[1]?.signal.aborted).toBe(false);

    calls[1]?.resolve(r10);
    await vi.runAllTimersAsync();
    expect(responses.length).toBe(1);
    expect(session.lastResponse).toBe(r10);
  });

  it("discards a stale response that resolves after its successor", async () => {
    const { client, calls } = manualClient();
    const { hooks, responses, errors } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));

    session.update({ r: 0.5 });
    await vi.advanceTimersByTimeAsync(100);
    session.update({ r: 1.0 });
    await vi.advanceTimersByTimeAsync(100);

    calls[1]?.resolve(r10);
    await vi.runAllTimersAsync();
    // the first request ignores its abort signal and answers late
    calls[0]?.resolve(r05);
    await vi.runAllTimersAsync();

    expect(responses).toEqual([r10]);
    expect(session.lastResponse).toBe(r10);
    expect(errors).toEqual([]);
  });

  it("stays silent when a superseded request rejects on abort", async () => {
    const { client, calls } = manualClient();
    const { hooks, errors } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));

    session.update({ r: 0.5 });
    await vi.advanceTimersByTimeAsync(100);
    calls[0]?.signal.addEventListener("abort", () => {
      calls[0]?.reject(new DOMException("aborted", "AbortError"));
    });
    session.update({ r: 1.0 });
    await vi.advanceTimersByTimeAsync(100);

    calls[1]?.resolve(r10);
    await vi.runAllTimersAsync();
    expect(errors).toEqual([]);
  });
});

describe("errors", () => {
  it("reports a current failure and recovers on the next response", async () => {
    const { client, calls } = manualClient();
    const { hooks, responses, errors } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));

    session.update({ rho_m: 80 });
    await vi.advanceTimersByTimeAsync(100);
    calls[0]?.reject(new Error("rho_m out of range"));
    await vi.runAllTimersAsync();
    expect(errors.length).toBe(1);

    session.update({ rho_m: 94 });
    await vi.advanceTimersByTimeAsync(100);
    calls[1]?.resolve(r05);
    await vi.runAllTimersAsync();
    expect(responses).toEqual([r05]);
  });
});

describe("requests", () => {
  it("sends the scenario document plus the candidate ratio", async () => {
    const { client, calls } = manualClient();
    const { hooks } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));

    void session.fire();
    expect(calls[0]?.request).toEqual({
      v: 1,
      companies: {
        a: { price: 4, shares: 20, risk_per_share: 4 },
        b: { price: 2, shares: 10, risk_per_share: 3 },
      },
      outcome: { mu_m: 120, rho_m: 94 },
      r_candidate: 0.5,
    });
  });

  it("switches the outcome form with the mode", () => {
    const { client, calls } = manualClient();
    const { hooks } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));
    session.inputs.mode = "synergy";
    session.inputs.s = 20;
    session.inputs.v = 16;

    void session.fire();
    expect(calls[0]?.request.outcome).toEqual({ s: 20, v: 16 });
  });
});

describe("pins", () => {
  it("captures response fields and restores inputs", async () => {
    const { client, calls } = manualClient();
    const { hooks } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));

    expect(session.pin()).toBeNull(); // nothing to pin before a response

    void session.fire();
    calls[0]?.resolve(r05);
    await vi.runAllTimersAsync();

    const snapshot = session.pin();
    expect(snapshot?.caseLabel).toBe(r05.report.case);
    expect(snapshot?.interval).toEqual(r05.report.interval);
    expect(snapshot?.verdicts).toEqual(r05.candidate?.verdicts);
    expect(snapshot?.allAccept).toBe(true);
    expect(session.pinned.length).toBe(1);

    session.update({ r: 2.5 });
    session.restore(snapshot!);
    expect(session.inputs.r).toBe(0.5);
    await vi.advanceTimersByTimeAsync(100);
    expect(calls.length).toBe(2); // restore schedules a refresh

    session.unpin(0);
    expect(session.pinned).toEqual([]);
  });

  it("keeps pinned inputs isolated from later edits", async () => {
    const { client, calls } = manualClient();
    const { hooks } = recordingHooks();
    const session = new Session(client, hooks, directInputs(0.5));
    void session.fire();
    calls[0]?.resolve(r05);
    await vi.runAllTimersAsync();

    const snapshot = session.pin();
    session.update({ mu_m: 150 });
    expect(snapshot?.inputs.mu_m).toBe(120);
  });
});
