// WebSocket consumer for streamed refinement reports. Messages apply in
// arrival order; the final message carries the minimization result.

import type { SessionStore } from "./store.js";
import type { RefineMessage } from "./types.js";

export class RefineSocket {
  private ws: WebSocket | null = null;

  constructor(
    private store: SessionStore,
    private makeSocket: (url: string) => WebSocket = (url) => new WebSocket(url),
  ) {}

  open(url: string, onFinal?: (msg: RefineMessage) => void): void {
    this.close();
    const ws = this.makeSocket(url);
    this.ws = ws;
    this.store.refining = true;
    ws.onmessage = (ev: MessageEvent) => {
      const msg: RefineMessage = JSON.parse(
        typeof ev.data === "string" ? ev.data : String(ev.data),
      );
      this.apply(msg);
      if (msg.final && onFinal) onFinal(msg);
    };
    ws.onclose = () => {
      this.store.refining = false;
    };
  }

  /** Exposed for tests: apply one stream message to the store. */
  apply(msg: RefineMessage): void {
    if (msg.final && msg.report) {
      this.store.applyReport(msg.report, "server:refine-final");
      this.store.refining = false;
      return;
    }
    if (msg.moved && this.store.graph) {
      const pos = new Map(this.store.graph.vertices.map((v) => [v.id, v] as const));
      for (const [id, x, y] of msg.moved) {
        const v = pos.get(id);
        if (v) {
          v.x = x;
          v.y = y;
        }
      }
    }
    if (typeof msg.ply === "number" && this.store.report) {
      // intermediate stream plies are displayed through the same
      // server-report channel so provenance stays intact
      this.store.applyReport({ ...this.store.report, ply: msg.ply }, "server:refine-step");
    }
  }

  close(): void {
    if (this.ws) {
      this.ws.close();
      this.ws = null;
    }
    this.store.refining = false;
  }
}
