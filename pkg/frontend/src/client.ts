/**
 * Thin client over the quiverforge HTTP API.
 *
 * All quiver math happens server-side; this module only moves JSON.
 */

import type {
  AnalysisReport,
  BudgetDoc,
  CertifyResult,
  ClassName,
  Envelope,
  QuiverDoc,
  SessionSnapshot,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async call<T>(method: "GET" | "POST", path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    let envelope: Envelope<T>;
    try {
      envelope = (await response.json()) as Envelope<T>;
    } catch {
      throw new ApiError(`bad response from ${path}`, response.status);
    }
    if (!response.ok || !envelope.ok || envelope.result === undefined) {
      throw new ApiError(envelope.error ?? `request to ${path} failed`, response.status);
    }
    return envelope.result;
  }

  health(): Promise<{ status: string }> {
    return this.call("GET", "/api/health");
  }

  createSession(quiver: QuiverDoc): Promise<SessionSnapshot> {
    return this.call("POST", "/api/session", { quiver });
  }

  mutateSession(id: string, vertex: number): Promise<SessionSnapshot> {
    return this.call("POST", `/api/session/${id}/mutate`, { vertex });
  }

  undoSession(id: string): Promise<SessionSnapshot> {
    return this.call("POST", `/api/session/${id}/undo`, {});
  }

  analyze(quiver: QuiverDoc): Promise<AnalysisReport> {
    return this.call("POST", "/api/analyze", { quiver });
  }

  /** Stateless preview, used when inspecting mutation steps in a certificate. */
  mutatePreview(quiver: QuiverDoc, sequence: number[]): Promise<QuiverDoc> {
    return this.call("POST", "/api/mutate", { quiver, sequence });
  }

  certify(quiver: QuiverDoc, className: ClassName, budget?: BudgetDoc): Promise<CertifyResult> {
    const body: Record<string, unknown> = { quiver, class: className };
    if (budget) {
      body.budget = budget;
    }
    return this.call("POST", "/api/certify", body);
  }
}
