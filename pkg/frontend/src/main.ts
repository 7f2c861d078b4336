/**
 * Browser entry point: mounts the explorer against a running backend.
 */

import { ExplorerApp, mountExplorer } from "./app.js";
import type { ClassName, QuiverDoc } from "./types.js";

const DEFAULT_QUIVER: QuiverDoc = {
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

function wireControls(app: ExplorerApp): void {
  document.querySelector<HTMLButtonElement>("#undo")?.addEventListener("click", () => {
    void app.undo();
  });
  document.querySelector<HTMLButtonElement>("#redo")?.addEventListener("click", () => {
    void app.redo();
  });
  document.querySelector<HTMLButtonElement>("#verify")?.addEventListener("click", () => {
    const select = document.querySelector<HTMLSelectElement>("#class-select");
    const className = (select?.value ?? "banff") as ClassName;
    void app.verify(className);
  });
  document.querySelector<HTMLButtonElement>("#load")?.addEventListener("click", () => {
    const textarea = document.querySelector<HTMLTextAreaElement>("#quiver-json");
    if (!textarea) {
      return;
    }
    try {
      void app.load(JSON.parse(textarea.value) as QuiverDoc);
    } catch {
      // leave the current state untouched on unparseable input
    }
  });
}

const root = document.querySelector<HTMLElement>("#explorer-root");
if (root) {
  const baseUrl = root.dataset.api ?? "http://127.0.0.1:8000";
  const app = mountExplorer(root, baseUrl);
  wireControls(app);
  void app.load(DEFAULT_QUIVER);
}
