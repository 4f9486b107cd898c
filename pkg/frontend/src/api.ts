/** Thin fetch wrapper for the analysis service. */

import type { AnalyzeRequest, ApiErrorBody, ApiResponse } from "./types.js";

export interface AnalyzeClient {
  analyze(request: AnalyzeRequest, signal: AbortSignal): Promise<ApiResponse>;
}

/** Non-2xx answer carrying the service's {code, path, message} body. */
export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.code} at ${body.path || "request"}: ${body.message}`);
    this.name = "ServiceError";
  }
}

/** Service base URL: ?api= override, else port 8787 on the page's host. */
export function apiBaseFromLocation(loc: {
  search: string;
  protocol: string;
  hostname: string;
}): string {
  const override = new URLSearchParams(loc.search).get("api");
  if (override) return override.replace(/\/+$/, "");
  const host = loc.hostname || "127.0.0.1";
  const proto = loc.protocol === "https:" ? "https:" : "http:";
  return `${proto}//${host}:8787/api/v1`;
}

export class HttpClient implements AnalyzeClient {
  constructor(readonly baseUrl: string) {}

  async analyze(request: AnalyzeRequest, signal: AbortSignal): Promise<ApiResponse> {
    const resp = await fetch(`${this.baseUrl}/analyze`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
      signal,
    });
    const payload: unknown = await resp.json();
    if (!resp.ok) {
      throw new ServiceError(resp.status, payload as ApiErrorBody);
    }
    return payload as ApiResponse;
  }
}
