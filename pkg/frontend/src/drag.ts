// Vertex dragging: position updates are throttled to at most
// MAX_UPDATES_PER_SECOND while the pointer moves; releasing the pointer
// always sends one final unthrottled update so the server state matches
// the screen exactly.

import type { Api } from "./api.js";
import type { SessionStore } from "./store.js";
import type { Viewport } from "./view.js";
import { screenToModel } from "./view.js";

export const MAX_UPDATES_PER_SECOND = 30;
const MIN_INTERVAL_MS = 1000 / MAX_UPDATES_PER_SECOND;

export class DragController {
  private active: number | null = null;
  private lastSent = -Infinity;
  private pendingX = 0;
  private pendingY = 0;
  private inflight: Promise<void> = Promise.resolve();
  sent: { x: number; y: number; final: boolean }[] = [];

  constructor(
    private api: Api,
    private store: SessionStore,
    private now: () => number = () => performance.now(),
  ) {}

  get activeVertex(): number | null {
    return this.active;
  }

  start(vertexId: number): void {
    if (this.store.connection === "reconnecting") return; // drag disabled offline
    this.active = vertexId;
    this.lastSent = -Infinity;
  }

  /** Pointer moved to screen position (sx, sy) under the viewport. */
  move(viewport: Viewport, sx: number, sy: number): void {
    if (this.active === null) return;
    const [mx, my] = screenToModel(viewport, sx, sy);
    this.pendingX = mx;
    this.pendingY = my;
    this.store.moveVertexLocal(this.active, mx, my);
    const t = this.now();
    if (t - this.lastSent >= MIN_INTERVAL_MS) {
      this.lastSent = t;
      this.send(false);
    }
  }

  /** Pointer released: always flush the final position. */
  drop(): void {
    if (this.active === null) return;
    this.send(true);
    this.active = null;
  }

  private send(final: boolean): void {
    const sid = this.store.sessionId;
    const vid = this.active;
    if (sid === null || vid === null) return;
    const x = this.pendingX;
    const y = this.pendingY;
    const seq = this.store.nextSeq();
    this.sent.push({ x, y, final });
    this.inflight = this.inflight.then(() =>
      this.api
        .moveVertex(sid, vid, x, y)
        .then((payload) => {
          if (final) {
            // the drop response is authoritative for positions too
            this.store.updatePayload(payload, seq, "server:drop");
          } else {
            this.store.applyTagged(payload.report, seq, "server:drag");
          }
        })
        .catch(() => {
          this.store.connection = "reconnecting";
        }),
    );
  }

  /** Resolves once every issued update has been answered. */
  settled(): Promise<void> {
    return this.inflight;
  }
}
