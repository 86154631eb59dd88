// Control panel wiring: layout buttons, refine start/cancel, undo,
// empty-ply overlay toggle, GML export download. API failures surface as
// toasts and leave the store untouched.

import type { Api } from "./api.js";
import { RefineSocket } from "./socket.js";
import type { SessionStore } from "./store.js";

export class Panel {
  constructor(
    private api: Api,
    private store: SessionStore,
    private socket: RefineSocket,
    private toast: (message: string) => void = () => {},
  ) {}

  private sid(): string {
    const sid = this.store.sessionId;
    if (!sid) throw new Error("no session");
    return sid;
  }

  async applyLayout(algorithm: string, seed = 0): Promise<void> {
    try {
      const payload = await this.api.layout(this.sid(), algorithm, seed);
      this.store.updatePayload(payload, this.store.nextSeq(), `server:layout-${algorithm}`);
    } catch (e) {
      this.toast(String(e));
    }
  }

  async startRefine(overrides: Record<string, unknown> = {}): Promise<void> {
    try {
      await this.api.startRefine(this.sid(), overrides);
      this.socket.open(this.api.wsUrl(this.sid()));
    } catch (e) {
      this.toast(String(e));
    }
  }

  async cancelRefine(): Promise<void> {
    try {
      const payload = await this.api.cancelRefine(this.sid());
      this.socket.close();
      this.store.updatePayload(payload, this.store.nextSeq(), "server:refine-cancel");
    } catch (e) {
      this.toast(String(e));
    }
  }

  async undo(): Promise<void> {
    try {
      const payload = await this.api.undo(this.sid());
      this.store.updatePayload(payload, this.store.nextSeq(), "server:undo");
    } catch (e) {
      this.toast(String(e));
    }
  }

  async toggleEmptyPly(): Promise<void> {
    try {
      if (this.store.emptyPlyOverlay) {
        this.store.emptyPlyOverlay = null;
        return;
      }
      const verdict = await this.api.emptyPly(this.sid());
      this.store.emptyPlyOverlay = verdict.violations;
    } catch (e) {
      this.toast(String(e));
    }
  }

  async exportDownload(save: (name: string, text: string) => void): Promise<void> {
    try {
      const gml = await this.api.exportGml(this.sid());
      save("drawing.gml", gml);
    } catch (e) {
      this.toast(String(e));
    }
  }
}
