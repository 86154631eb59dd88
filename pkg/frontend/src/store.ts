// Session state: the graph, the latest server report, the ply history
// ring buffer, and the single-source-of-truth accounting. Every ply value
// the UI can display enters through applyReport, which tags it with a
// provenance marker the tests intercept.

import type { GraphJson, PlyReportJson, SessionPayload } from "./types.js";

export const HISTORY_LIMIT = 200;

export interface HistoryEntry {
  ply: number;
  atMs: number;
}

export type ConnectionState = "idle" | "connected" | "reconnecting";

export class SessionStore {
  sessionId: string | null = null;
  graph: GraphJson | null = null;
  report: PlyReportJson | null = null;
  history: HistoryEntry[] = [];
  selected: number | null = null;
  showDisks = true;
  showWitness = true;
  emptyPlyOverlay: [number, number][] | null = null;
  connection: ConnectionState = "idle";
  refining = false;
  /** every ply that reached the store came from a server report */
  provenance: string[] = [];
  private listeners: (() => void)[] = [];
  private seq = 0;
  private lastAppliedSeq = 0;

  onChange(fn: () => void): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  nextSeq(): number {
    return ++this.seq;
  }

  loadSession(payload: SessionPayload): void {
    this.sessionId = payload.session;
    this.graph = payload.graph;
    this.applyReport(payload.report, "server:load");
  }

  /** Replace the displayed report; origin records which server response
   *  produced it. Stale responses (older drag sequence) are ignored by
   *  applyTagged. */
  applyReport(report: PlyReportJson, origin: string): void {
    this.report = report;
    this.provenance.push(origin);
    this.history.push({ ply: report.ply, atMs: Date.now() });
    if (this.history.length > HISTORY_LIMIT) {
      this.history.splice(0, this.history.length - HISTORY_LIMIT);
    }
    this.emit();
  }

  /** Apply a report tagged with the request sequence that produced it;
   *  out-of-order arrivals are dropped. Returns whether it was applied. */
  applyTagged(report: PlyReportJson, seq: number, origin: string): boolean {
    if (seq < this.lastAppliedSeq) return false;
    this.lastAppliedSeq = seq;
    this.applyReport(report, origin);
    return true;
  }

  updatePayload(payload: SessionPayload, seq: number, origin: string): boolean {
    if (seq < this.lastAppliedSeq) return false;
    this.lastAppliedSeq = seq;
    this.graph = payload.graph;
    this.applyReport(payload.report, origin);
    return true;
  }

  moveVertexLocal(id: number, x: number, y: number): void {
    // optimistic position update for smooth dragging; ply untouched
    if (!this.graph) return;
    const v = this.graph.vertices.find((v) => v.id === id);
    if (v) {
      v.x = x;
      v.y = y;
      this.emit();
    }
  }

  displayedPly(): number | null {
    return this.report ? this.report.ply : null;
  }
}
