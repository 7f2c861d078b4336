/**
 * Explorer application: wires the store, layout, and renderers to a page.
 */

import { ApiClient } from "./client.js";
import { Layout, relaxLayout, seedLayout } from "./layout.js";
import { renderScene, renderVerdictPanel } from "./render.js";
import { ExplorerStore } from "./state.js";
import type { BudgetDoc, ClassName, QuiverDoc } from "./types.js";

export interface AppElements {
  canvas: HTMLElement;
  verdictPanel: HTMLElement;
  status?: HTMLElement;
}

export class ExplorerApp {
  readonly store: ExplorerStore;
  private layout: Layout = new Map();
  private layoutFor = "";
  private activeClass: ClassName = "banff";

  constructor(
    private readonly elements: AppElements,
    client: ApiClient,
  ) {
    this.store = new ExplorerStore(client);
    this.store.subscribe((state) => {
      const snapshot = state.cursor >= 0 ? state.snapshots[state.cursor] : null;
      if (snapshot && snapshot.hash !== this.layoutFor) {
        this.layout = this.layoutForQuiver(snapshot.quiver);
        this.layoutFor = snapshot.hash;
      }
      renderScene(this.elements.canvas, state, this.layout, {
        onVertexClick: (v) => void this.store.clickVertex(v),
      });
      renderVerdictPanel(this.elements.verdictPanel, state.verdicts[this.activeClass]);
      if (this.elements.status) {
        this.elements.status.textContent = state.busy
          ? "working..."
          : (state.lastError ?? "ready");
      }
    });
  }

  private layoutForQuiver(quiver: QuiverDoc): Layout {
    // keep pinned positions across re-layouts of the same vertex set
    const seeded = seedLayout(quiver, 640, 480);
    for (const [v, pos] of this.layout) {
      if (pos.pinned && seeded.has(v)) {
        seeded.set(v, pos);
      }
    }
    return relaxLayout(quiver, seeded);
  }

  load(quiver: QuiverDoc): Promise<void> {
    return this.store.loadQuiver(quiver);
  }

  undo(): Promise<void> {
    return this.store.undo();
  }

  redo(): Promise<void> {
    return this.store.redo();
  }

  verify(className: ClassName, budget?: BudgetDoc): Promise<void> {
    this.activeClass = className;
    return this.store.verify(className, budget);
  }
}

export function mountExplorer(root: HTMLElement, baseUrl: string): ExplorerApp {
  root.innerHTML = `
    <div class="explorer">
      <div class="canvas" data-role="canvas"></div>
      <aside class="sidebar">
        <div data-role="status" class="status">ready</div>
        <div data-role="verdicts" class="verdicts"></div>
      </aside>
    </div>
  `;
  const canvas = root.querySelector<HTMLElement>('[data-role="canvas"]')!;
  const verdictPanel = root.querySelector<HTMLElement>('[data-role="verdicts"]')!;
  const status = root.querySelector<HTMLElement>('[data-role="status"]')!;
  return new ExplorerApp({ canvas, verdictPanel, status }, new ApiClient(baseUrl));
}
