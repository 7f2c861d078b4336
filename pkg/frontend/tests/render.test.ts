import { describe, expect, it } from "vitest";

import { seedLayout } from "../src/layout.js";
import { renderScene, renderVerdictPanel } from "../src/render.js";
import type { ViewState } from "../src/state.js";
import type { CertifyResult, QuiverDoc, SessionSnapshot } from "../src/types.js";

const REMARK: QuiverDoc = {
  n: 6,
  arrows: [
    [1, 2, 2],
    [2, 3, 1],
    [2, 4, 1],
    [3, 1, 1],
    [3, 4, 1],
    [4, 1, 1],
    [4, 5, 1],
    [5, 3, 1],
    [6, 5, 1],
  ],
};

function stateWith(snapshot: SessionSnapshot | null, extra: Partial<ViewState> = {}): ViewState {
  return {
    session: snapshot,
    analysis: null,
    snapshots: snapshot ? [snapshot] : [],
    cursor: snapshot ? 0 : -1,
    selection: null,
    verdicts: {},
    busy: false,
    lastError: null,
    ...extra,
  };
}

describe("renderScene", () => {
  it("renders a placeholder without a session", () => {
    const container = document.createElement("div");
    renderScene(container, stateWith(null), new Map());
    expect(container.querySelector(".placeholder")).toBeTruthy();
    expect(container.dataset.hash).toBe("");
  });

  it("stamps the server hash and draws every arrow and vertex", () => {
    const snapshot: SessionSnapshot = { id: "s", quiver: REMARK, hash: "remark-hash", history: [] };
    const state = stateWith(snapshot, {
      analysis: {
        acyclic: false,
        sources: [6],
        sinks: [],
        cycle_vertices: [1, 2, 3, 4, 5],
        covering_pairs: [[6, 5]],
      },
    });
    const container = document.createElement("div");
    renderScene(container, state, seedLayout(REMARK, 640, 480));
    expect(container.dataset.hash).toBe("remark-hash");
    expect(container.querySelectorAll("g.vertex").length).toBe(6);
    expect(container.querySelectorAll("line.arrow").length).toBe(9);
    // the covering pair is highlighted, multiplicity 2 gets a numeric label
    const covering = container.querySelector("line.covering") as SVGLineElement;
    expect(covering.dataset.arrow).toBe("6->5");
    const labels = [...container.querySelectorAll("text.mult-label")].map((t) => t.textContent);
    expect(labels).toEqual(["2"]);
    const badged = container.querySelector('g[data-vertex="6"]') as SVGGElement;
    expect(badged.dataset.badges).toBe("source");
  });

  it("marks arrowless vertices as source+sink", () => {
    const doc: QuiverDoc = { n: 2, arrows: [] };
    const snapshot: SessionSnapshot = { id: "s", quiver: doc, hash: "h", history: [] };
    const state = stateWith(snapshot, {
      analysis: {
        acyclic: true,
        sources: [1, 2],
        sinks: [1, 2],
        cycle_vertices: [],
        covering_pairs: [],
      },
    });
    const container = document.createElement("div");
    renderScene(container, state, seedLayout(doc, 640, 480));
    for (const v of [1, 2]) {
      const group = container.querySelector(`g[data-vertex="${v}"]`) as SVGGElement;
      expect(group.dataset.badges).toBe("source+sink");
    }
  });

  it("dispatches vertex clicks to the callback", () => {
    const doc: QuiverDoc = { n: 2, arrows: [[1, 2, 1]] };
    const snapshot: SessionSnapshot = { id: "s", quiver: doc, hash: "h", history: [] };
    const clicks: number[] = [];
    const container = document.createElement("div");
    renderScene(container, stateWith(snapshot), seedLayout(doc, 640, 480), {
      onVertexClick: (v) => clicks.push(v),
    });
    const vertex = container.querySelector('g[data-vertex="2"]')!;
    vertex.dispatchEvent(new Event("click"));
    expect(clicks).toEqual([2]);
  });

  it("shows a toast when the state carries an error", () => {
    const snapshot: SessionSnapshot = {
      id: "s",
      quiver: { n: 1, arrows: [] },
      hash: "h",
      history: [],
    };
    const container = document.createElement("div");
    renderScene(container, stateWith(snapshot, { lastError: "boom" }), seedLayout({ n: 1, arrows: [] }, 640, 480));
    expect(container.querySelector(".toast.error")?.textContent).toBe("boom");
  });
});

describe("renderVerdictPanel", () => {
  it("renders unknown verdicts with their reason", () => {
    const container = document.createElement("div");
    const result: CertifyResult = { class: "banff", verdict: "unknown", reason: "entry_cap" };
    renderVerdictPanel(container, result);
    expect(container.querySelector(".verdict.unknown")).toBeTruthy();
    expect(container.querySelector(".reason")?.textContent).toContain("entry_cap");
  });

  it("renders certified verdicts as a collapsible tree with previews", () => {
    const container = document.createElement("div");
    const previews: number[][] = [];
    const result: CertifyResult = {
      class: "banff",
      verdict: "certified",
      certificate: {
        kind: "mutation_step",
        sequence: [1],
        child: { kind: "base_acyclic", ordering: [2, 1, 3] },
      },
    };
    renderVerdictPanel(container, result, { onMutationPreview: (seq) => previews.push(seq) });
    const nodes = container.querySelectorAll("details.cert-node");
    expect(nodes.length).toBe(2);
    const button = container.querySelector("button.preview")!;
    button.dispatchEvent(new Event("click"));
    expect(previews).toEqual([[1]]);
  });

  it("renders a hint when no verdict has been requested", () => {
    const container = document.createElement("div");
    renderVerdictPanel(container, undefined);
    expect(container.querySelector(".placeholder")).toBeTruthy();
  });
});
