/**
 * SVG scene for the explorer: vertices with source/sink badges, arrows
 * with multiplicity labels (a "2" label rather than parallel edges),
 * covering-pair arrows highlighted, and a collapsible certificate tree.
 */

import type { Layout } from "./layout.js";
import type { ViewState } from "./state.js";
import type { CertificateDoc, CertifyResult } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface SceneCallbacks {
  onVertexClick?: (vertex: number) => void;
  onMutationPreview?: (sequence: number[]) => void;
}

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function renderScene(
  container: HTMLElement,
  state: ViewState,
  layout: Layout,
  callbacks: SceneCallbacks = {},
): void {
  container.replaceChildren();
  const snapshot = state.cursor >= 0 ? state.snapshots[state.cursor] : null;
  if (!snapshot) {
    const placeholder = document.createElement("p");
    placeholder.className = "placeholder";
    placeholder.textContent = "Load a quiver to begin exploring.";
    container.appendChild(placeholder);
    container.dataset.hash = "";
    return;
  }

  const quiver = snapshot.quiver;
  container.dataset.hash = snapshot.hash;
  const svg = svgElement("svg", {
    viewBox: "0 0 640 480",
    width: "640",
    height: "480",
    role: "img",
  });
  svg.appendChild(defsArrowhead());

  const covering = new Set(
    (state.analysis?.covering_pairs ?? []).map(([i, j]) => `${i}->${j}`),
  );
  const sources = new Set(state.analysis?.sources ?? []);
  const sinks = new Set(state.analysis?.sinks ?? []);

  for (const [src, dst, mult] of quiver.arrows) {
    const from = layout.get(src);
    const to = layout.get(dst);
    if (!from || !to) {
      continue;
    }
    const isCovering = covering.has(`${src}->${dst}`);
    const line = svgElement("line", {
      x1: String(from.x),
      y1: String(from.y),
      x2: String(to.x),
      y2: String(to.y),
      class: isCovering ? "arrow covering" : "arrow",
      stroke: isCovering ? "#d97706" : "#475569",
      "stroke-width": isCovering ? "3" : "1.5",
      "marker-end": "url(#arrowhead)",
    });
    line.dataset.arrow = `${src}->${dst}`;
    svg.appendChild(line);
    if (mult >= 2) {
      const label = svgElement("text", {
        x: String((from.x + to.x) / 2),
        y: String((from.y + to.y) / 2 - 6),
        class: "mult-label",
        "text-anchor": "middle",
      });
      label.textContent = String(mult);
      svg.appendChild(label);
    }
  }

  for (let v = 1; v <= quiver.n; v += 1) {
    const pos = layout.get(v);
    if (!pos) {
      continue;
    }
    const group = svgElement("g", { class: "vertex", transform: `translate(${pos.x},${pos.y})` });
    group.dataset.vertex = String(v);
    if (v === state.selection) {
      group.classList.add("selected");
    }
    const circle = svgElement("circle", {
      r: "16",
      fill: "#f8fafc",
      stroke: "#0f172a",
      "stroke-width": "1.5",
    });
    group.appendChild(circle);
    const label = svgElement("text", { "text-anchor": "middle", dy: "5", class: "vertex-label" });
    label.textContent = String(v);
    group.appendChild(label);

    const badges: string[] = [];
    if (sources.has(v)) {
      badges.push("source");
    }
    if (sinks.has(v)) {
      badges.push("sink");
    }
    if (badges.length) {
      const badge = svgElement("text", {
        y: "-22",
        "text-anchor": "middle",
        class: "badge",
      });
      badge.textContent = badges.join("+");
      group.appendChild(badge);
      group.dataset.badges = badges.join("+");
    }
    group.addEventListener("click", () => callbacks.onVertexClick?.(v));
    svg.appendChild(group);
  }

  container.appendChild(svg);

  if (state.lastError) {
    const toast = document.createElement("div");
    toast.className = "toast error";
    toast.textContent = state.lastError;
    container.appendChild(toast);
  }
}

function defsArrowhead(): SVGDefsElement {
  const defs = svgElement("defs", {});
  const marker = svgElement("marker", {
    id: "arrowhead",
    viewBox: "0 0 10 10",
    refX: "24",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgElement("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#475569" }));
  defs.appendChild(marker);
  return defs;
}

const VERDICT_LABELS: Record<CertifyResult["verdict"], string> = {
  certified: "Certified",
  refuted_exhaustive: "Refuted (exhaustive)",
  unknown: "Unknown",
};

export function renderVerdictPanel(
  container: HTMLElement,
  result: CertifyResult | undefined,
  callbacks: SceneCallbacks = {},
): void {
  container.replaceChildren();
  if (!result) {
    const hint = document.createElement("p");
    hint.className = "placeholder";
    hint.textContent = "Run a membership check to see its verdict.";
    container.appendChild(hint);
    return;
  }
  const headline = document.createElement("p");
  headline.className = `verdict ${result.verdict}`;
  headline.textContent = `${result.class}: ${VERDICT_LABELS[result.verdict]}`;
  container.appendChild(headline);
  if (result.verdict === "unknown") {
    const reason = document.createElement("p");
    reason.className = "reason";
    reason.textContent = `search stopped: ${result.reason}`;
    container.appendChild(reason);
  }
  if (result.verdict === "certified") {
    container.appendChild(renderCertificateTree(result.certificate, callbacks, []));
  }
}

function describeNode(cert: CertificateDoc): string {
  switch (cert.kind) {
    case "base_no_arrows":
      return `arrowless quiver on ${cert.n} vertices`;
    case "base_acyclic":
      return `acyclic: ${cert.ordering.join(" < ")}`;
    case "base_trivial":
      return "one-vertex quiver";
    case "mutation_step":
      return `mutate at [${cert.sequence.join(", ")}]`;
    case "cover_split":
      return `covering pair (${cert.pair[0]}, ${cert.pair[1]})`;
    case "source_sink_split":
      return `${cert.mode} split at arrow (${cert.arrow[0]}, ${cert.arrow[1]})`;
    case "triangular_step":
      return `triangular apex ${cert.apex} (${cert.direction})`;
  }
}

function childEntries(cert: CertificateDoc): [string, CertificateDoc][] {
  switch (cert.kind) {
    case "mutation_step":
      return [["after mutation", cert.child]];
    case "triangular_step":
      return [["rest", cert.child]];
    case "cover_split":
    case "source_sink_split": {
      const out: [string, CertificateDoc][] = [
        ["delete tail", cert.child_i],
        ["delete head", cert.child_j],
      ];
      if (cert.child_ij) {
        out.push(["delete both", cert.child_ij]);
      }
      return out;
    }
    default:
      return [];
  }
}

function renderCertificateTree(
  cert: CertificateDoc,
  callbacks: SceneCallbacks,
  prefix: number[],
): HTMLElement {
  const children = childEntries(cert);
  const details = document.createElement("details");
  details.open = true;
  details.className = `cert-node ${cert.kind}`;
  const summary = document.createElement("summary");
  summary.textContent = describeNode(cert);
  details.appendChild(summary);

  if (cert.kind === "mutation_step" && callbacks.onMutationPreview) {
    const sequence = [...prefix, ...cert.sequence];
    const preview = document.createElement("button");
    preview.type = "button";
    preview.className = "preview";
    preview.textContent = "preview mutated quiver";
    preview.addEventListener("click", () => callbacks.onMutationPreview?.(sequence));
    details.appendChild(preview);
  }

  const nextPrefix = cert.kind === "mutation_step" ? [...prefix, ...cert.sequence] : prefix;
  for (const [label, child] of children) {
    const wrapper = document.createElement("div");
    wrapper.className = "cert-child";
    const caption = document.createElement("span");
    caption.className = "cert-child-label";
    caption.textContent = label;
    wrapper.appendChild(caption);
    // label maps change coordinates below splits, so previews only follow
    // mutation chains above the first split
    const passPrefix = cert.kind === "mutation_step" ? nextPrefix : [];
    wrapper.appendChild(renderCertificateTree(child, callbacks, passPrefix));
    details.appendChild(wrapper);
  }
  return details;
}
