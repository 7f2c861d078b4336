/**
 * Scripted stand-in for the HTTP API, used by the unit tests.
 *
 * It never computes quiver math: every transition is a canned pair of
 * documents taken from recorded server responses for the 3-vertex path.
 */

import type { FetchLike } from "../src/client.js";
import type { AnalysisReport, QuiverDoc } from "../src/types.js";

export const PATH3: QuiverDoc = { n: 3, arrows: [[1, 2, 1], [2, 3, 1]] };
export const PATH3_AT_2: QuiverDoc = { n: 3, arrows: [[1, 3, 1], [2, 1, 1], [3, 2, 1]] };
export const PATH3_AT_1: QuiverDoc = { n: 3, arrows: [[2, 1, 1], [2, 3, 1]] };

export const HASHES = { base: "h-base", at2: "h-mu2", at1: "h-mu1" } as const;

interface Transition {
  doc: QuiverDoc;
  hash: string;
}

const TRANSITIONS: Record<string, Record<number, Transition>> = {
  [HASHES.base]: {
    1: { doc: PATH3_AT_1, hash: HASHES.at1 },
    2: { doc: PATH3_AT_2, hash: HASHES.at2 },
  },
  [HASHES.at1]: { 1: { doc: PATH3, hash: HASHES.base } },
  [HASHES.at2]: { 2: { doc: PATH3, hash: HASHES.base } },
};

const ANALYSES: Record<string, AnalysisReport> = {
  [HASHES.base]: {
    acyclic: true,
    sources: [1],
    sinks: [3],
    cycle_vertices: [],
    covering_pairs: [[1, 2], [2, 3]],
  },
  [HASHES.at2]: {
    acyclic: false,
    sources: [],
    sinks: [],
    cycle_vertices: [1, 2, 3],
    covering_pairs: [],
  },
  [HASHES.at1]: {
    acyclic: true,
    sources: [2],
    sinks: [1, 3],
    cycle_vertices: [],
    covering_pairs: [[2, 1], [2, 3]],
  },
};

interface SessionState {
  steps: number[];
}

export class FakeBackend {
  sessions = new Map<string, SessionState>();
  requestLog: string[] = [];
  failNext: string | null = null;
  gate: Promise<void> | null = null;
  private counter = 0;

  get fetchLike(): FetchLike {
    return (input, init) => this.handle(input, init);
  }

  private snapshotOf(id: string): Record<string, unknown> {
    const session = this.sessions.get(id);
    if (!session) {
      throw new Error("missing session");
    }
    let hash: string = HASHES.base;
    let doc = PATH3;
    const history: [number, string][] = [];
    for (const step of session.steps) {
      const next = TRANSITIONS[hash]?.[step];
      if (!next) {
        throw new Error(`fake backend has no transition from ${hash} at ${step}`);
      }
      hash = next.hash;
      doc = next.doc;
      history.push([step, hash]);
    }
    return { id, quiver: doc, hash, history };
  }

  private async handle(input: string, init?: RequestInit): Promise<Response> {
    const url = new URL(input, "http://fake");
    const path = url.pathname;
    this.requestLog.push(path);
    if (this.gate) {
      await this.gate;
    }
    if (this.failNext === path) {
      this.failNext = null;
      return json(500, { ok: false, error: "injected failure" });
    }
    const body = init?.body ? JSON.parse(String(init.body)) : {};

    if (path === "/api/health") {
      return json(200, { ok: true, result: { status: "ok" } });
    }
    if (path === "/api/session") {
      const id = `s${(this.counter += 1)}`;
      this.sessions.set(id, { steps: [] });
      return json(200, { ok: true, result: this.snapshotOf(id) });
    }
    const mutateMatch = path.match(/^\/api\/session\/([^/]+)\/mutate$/);
    if (mutateMatch) {
      const id = mutateMatch[1]!;
      const session = this.sessions.get(id);
      if (!session) {
        return json(404, { ok: false, error: "unknown session" });
      }
      session.steps.push(body.vertex as number);
      return json(200, { ok: true, result: this.snapshotOf(id) });
    }
    const undoMatch = path.match(/^\/api\/session\/([^/]+)\/undo$/);
    if (undoMatch) {
      const id = undoMatch[1]!;
      const session = this.sessions.get(id);
      if (!session) {
        return json(404, { ok: false, error: "unknown session" });
      }
      if (!session.steps.length) {
        return json(422, { ok: false, error: "nothing to undo" });
      }
      session.steps.pop();
      return json(200, { ok: true, result: this.snapshotOf(id) });
    }
    if (path === "/api/analyze") {
      const quiver = body.quiver as QuiverDoc;
      for (const [hash, doc] of Object.entries({
        [HASHES.base]: PATH3,
        [HASHES.at2]: PATH3_AT_2,
        [HASHES.at1]: PATH3_AT_1,
      })) {
        if (JSON.stringify(doc) === JSON.stringify(quiver)) {
          return json(200, { ok: true, result: ANALYSES[hash] });
        }
      }
      return json(422, { ok: false, error: "fake backend cannot analyze this quiver" });
    }
    if (path === "/api/certify") {
      return json(200, {
        ok: true,
        result: {
          class: body.class,
          verdict: "certified",
          certificate: { kind: "base_acyclic", ordering: [1, 2, 3] },
        },
      });
    }
    if (path === "/api/mutate") {
      return json(200, { ok: true, result: PATH3_AT_2 });
    }
    return json(404, { ok: false, error: `fake backend has no route ${path}` });
  }
}

function json(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}
