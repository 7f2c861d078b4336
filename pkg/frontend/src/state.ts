/**
 * Explorer view state: a cursor over server-confirmed snapshots.
 *
 * The quiver mirror is always the last server response; the client never
 * mutates locally.  Undo asks the server to pop its history and checks
 * the returned hash against the previous snapshot; redo replays the
 * recorded vertex through the server.  One request is in flight at a
 * time and responses arriving out of order are discarded by serial.
 */

import { ApiClient } from "./client.js";
import type {
  AnalysisReport,
  BudgetDoc,
  CertifyResult,
  ClassName,
  QuiverDoc,
  SessionSnapshot,
} from "./types.js";

export interface ViewState {
  session: SessionSnapshot | null;
  analysis: AnalysisReport | null;
  snapshots: SessionSnapshot[];
  cursor: number;
  selection: number | null;
  verdicts: Partial<Record<ClassName, CertifyResult>>;
  busy: boolean;
  lastError: string | null;
}

export type Listener = (state: ViewState) => void;

export class ExplorerStore {
  private state: ViewState = {
    session: null,
    analysis: null,
    snapshots: [],
    cursor: -1,
    selection: null,
    verdicts: {},
    busy: false,
    lastError: null,
  };
  private listeners: Listener[] = [];
  private serial = 0;

  constructor(private readonly client: ApiClient) {}

  get current(): ViewState {
    return this.state;
  }

  get currentSnapshot(): SessionSnapshot | null {
    return this.state.cursor >= 0 ? (this.state.snapshots[this.state.cursor] ?? null) : null;
  }

  get canUndo(): boolean {
    return this.state.cursor > 0 && !this.state.busy;
  }

  get canRedo(): boolean {
    return this.state.cursor >= 0 && this.state.cursor < this.state.snapshots.length - 1 && !this.state.busy;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    listener(this.state);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Run one exclusive server call; stale completions are dropped. */
  private async exclusive<T>(work: () => Promise<T>): Promise<T | null> {
    if (this.state.busy) {
      return null;
    }
    const ticket = ++this.serial;
    this.emit({ busy: true, lastError: null });
    try {
      const out = await work();
      if (ticket !== this.serial) {
        return null;
      }
      return out;
    } catch (err) {
      if (ticket === this.serial) {
        this.emit({ busy: false, lastError: err instanceof Error ? err.message : String(err) });
      }
      return null;
    }
  }

  async loadQuiver(quiver: QuiverDoc): Promise<void> {
    await this.exclusive(async () => {
      const session = await this.client.createSession(quiver);
      const analysis = await this.client.analyze(session.quiver);
      this.emit({
        session,
        analysis,
        snapshots: [session],
        cursor: 0,
        selection: null,
        verdicts: {},
        busy: false,
      });
    });
  }

  /** Mutation at a vertex: the mirror becomes exactly the server response. */
  async clickVertex(vertex: number): Promise<void> {
    const snapshot = this.currentSnapshot;
    if (!snapshot) {
      return;
    }
    await this.exclusive(async () => {
      const next = await this.client.mutateSession(snapshot.id, vertex);
      const analysis = await this.client.analyze(next.quiver);
      const kept = this.state.snapshots.slice(0, this.state.cursor + 1);
      this.emit({
        session: next,
        analysis,
        snapshots: [...kept, next],
        cursor: kept.length,
        selection: vertex,
        verdicts: {},
        busy: false,
      });
    });
  }

  async undo(): Promise<void> {
    const { cursor, snapshots } = this.state;
    if (cursor <= 0) {
      return;
    }
    await this.exclusive(async () => {
      const snapshot = snapshots[cursor]!;
      const previous = snapshots[cursor - 1]!;
      const confirmed = await this.client.undoSession(snapshot.id);
      if (confirmed.hash !== previous.hash) {
        throw new Error("server history diverged from local snapshots");
      }
      const analysis = await this.client.analyze(confirmed.quiver);
      this.emit({ session: confirmed, analysis, cursor: cursor - 1, verdicts: {}, busy: false });
    });
  }

  /** Redo replays the recorded step; the server must reproduce the snapshot. */
  async redo(): Promise<void> {
    const { cursor, snapshots } = this.state;
    const target = snapshots[cursor + 1];
    if (!target) {
      return;
    }
    await this.exclusive(async () => {
      const redoStep = target.history[target.history.length - 1];
      if (!redoStep) {
        throw new Error("snapshot carries no step to replay");
      }
      const confirmed = await this.client.mutateSession(target.id, redoStep[0]);
      if (confirmed.hash !== target.hash) {
        throw new Error("server redo diverged from the stored snapshot");
      }
      const analysis = await this.client.analyze(confirmed.quiver);
      this.emit({ session: confirmed, analysis, cursor: cursor + 1, verdicts: {}, busy: false });
    });
  }

  async verify(className: ClassName, budget?: BudgetDoc): Promise<void> {
    const snapshot = this.currentSnapshot;
    if (!snapshot) {
      return;
    }
    await this.exclusive(async () => {
      const verdict = await this.client.certify(snapshot.quiver, className, budget);
      this.emit({ verdicts: { ...this.state.verdicts, [className]: verdict }, busy: false });
    });
  }
}
