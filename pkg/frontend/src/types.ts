/**
 * Wire types mirroring the backend JSON schemas.
 */

export interface QuiverDoc {
  n: number;
  arrows: [number, number, number][];
}

export interface SessionSnapshot {
  id: string;
  quiver: QuiverDoc;
  hash: string;
  history: [number, string][];
}

export interface AnalysisReport {
  acyclic: boolean;
  sources: number[];
  sinks: number[];
  cycle_vertices: number[];
  covering_pairs: [number, number][];
}

export interface BudgetDoc {
  max_iso_classes?: number;
  max_depth?: number;
  max_abs_entry?: number;
  max_millis?: number;
}

export type ClassName = "banff" | "bprime" | "louise" | "lprime" | "pprime";

export type CertificateDoc =
  | { kind: "base_no_arrows"; n: number }
  | { kind: "base_acyclic"; ordering: number[] }
  | { kind: "base_trivial" }
  | { kind: "mutation_step"; sequence: number[]; child: CertificateDoc }
  | {
      kind: "cover_split";
      pair: [number, number];
      map_i: [number, number][];
      child_i: CertificateDoc;
      map_j: [number, number][];
      child_j: CertificateDoc;
      map_ij?: [number, number][];
      child_ij?: CertificateDoc;
    }
  | {
      kind: "source_sink_split";
      arrow: [number, number];
      mode: "source" | "sink";
      map_i: [number, number][];
      child_i: CertificateDoc;
      map_j: [number, number][];
      child_j: CertificateDoc;
      map_ij?: [number, number][];
      child_ij?: CertificateDoc;
    }
  | {
      kind: "triangular_step";
      apex: number;
      direction: "x_to_y" | "y_to_x" | "no_cross";
      map: [number, number][];
      child: CertificateDoc;
    };

export type CertifyResult =
  | { class: ClassName; verdict: "certified"; certificate: CertificateDoc }
  | { class: ClassName; verdict: "refuted_exhaustive" }
  | { class: ClassName; verdict: "unknown"; reason: string };

export interface Envelope<T> {
  ok: boolean;
  result?: T;
  error?: string;
}
