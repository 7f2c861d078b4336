/**
 * Force-directed vertex placement.  Cosmetic only: positions are kept
 * client-side, may be pinned by dragging, and are never serialized into
 * quiver JSON.
 */

import type { QuiverDoc } from "./types.js";

export interface VertexPosition {
  x: number;
  y: number;
  pinned: boolean;
}

export type Layout = Map<number, VertexPosition>;

export interface LayoutOptions {
  width: number;
  height: number;
  iterations: number;
}

const TWO_PI = 2 * Math.PI;

/** Deterministic circular seed so layouts are reproducible. */
export function seedLayout(quiver: QuiverDoc, width: number, height: number): Layout {
  const layout: Layout = new Map();
  const radius = Math.min(width, height) / 2.5;
  for (let v = 1; v <= quiver.n; v += 1) {
    const angle = (TWO_PI * (v - 1)) / Math.max(quiver.n, 1);
    layout.set(v, {
      x: width / 2 + radius * Math.cos(angle),
      y: height / 2 + radius * Math.sin(angle),
      pinned: false,
    });
  }
  return layout;
}

/**
 * Relax unpinned vertices: spring attraction along arrows, pairwise
 * repulsion, and a weak pull to the center.
 */
export function relaxLayout(
  quiver: QuiverDoc,
  layout: Layout,
  options: LayoutOptions = { width: 640, height: 480, iterations: 60 },
): Layout {
  const { width, height, iterations } = options;
  const positions = new Map(layout);
  const vertices = [...positions.keys()];
  const springLength = Math.min(width, height) / Math.max(2, Math.sqrt(quiver.n || 1) * 1.5);

  for (let step = 0; step < iterations; step += 1) {
    const force = new Map<number, { fx: number; fy: number }>(
      vertices.map((v) => [v, { fx: 0, fy: 0 }]),
    );
    for (let a = 0; a < vertices.length; a += 1) {
      for (let b = a + 1; b < vertices.length; b += 1) {
        const va = vertices[a]!;
        const vb = vertices[b]!;
        const pa = positions.get(va)!;
        const pb = positions.get(vb)!;
        const dx = pa.x - pb.x;
        const dy = pa.y - pb.y;
        const dist = Math.max(Math.hypot(dx, dy), 1);
        const push = (springLength * springLength) / dist / dist;
        force.get(va)!.fx += dx * push;
        force.get(va)!.fy += dy * push;
        force.get(vb)!.fx -= dx * push;
        force.get(vb)!.fy -= dy * push;
      }
    }
    for (const [src, dst] of quiver.arrows) {
      const ps = positions.get(src);
      const pd = positions.get(dst);
      if (!ps || !pd) {
        continue;
      }
      const dx = pd.x - ps.x;
      const dy = pd.y - ps.y;
      const dist = Math.max(Math.hypot(dx, dy), 1);
      const pull = (dist - springLength) / dist / 20;
      force.get(src)!.fx += dx * pull;
      force.get(src)!.fy += dy * pull;
      force.get(dst)!.fx -= dx * pull;
      force.get(dst)!.fy -= dy * pull;
    }
    const damping = 0.85 ** step;
    for (const v of vertices) {
      const pos = positions.get(v)!;
      if (pos.pinned) {
        continue;
      }
      const f = force.get(v)!;
      const cx = (width / 2 - pos.x) / 200;
      const cy = (height / 2 - pos.y) / 200;
      const x = Math.min(Math.max(pos.x + (f.fx + cx) * damping * 8, 20), width - 20);
      const y = Math.min(Math.max(pos.y + (f.fy + cy) * damping * 8, 20), height - 20);
      positions.set(v, { ...pos, x, y });
    }
  }
  return positions;
}

export function pinVertex(layout: Layout, vertex: number, x: number, y: number): Layout {
  const next = new Map(layout);
  next.set(vertex, { x, y, pinned: true });
  return next;
}
