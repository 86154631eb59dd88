// Thin HTTP client for the exploration service.

import type { EmptyPlyVerdict, SessionPayload } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

export class Api {
  constructor(public baseUrl: string) {}

  private async check(res: Response): Promise<any> {
    const body = await res.json().catch(() => ({}));
    if (!res.ok) throw new ApiError(res.status, body.error ?? res.statusText);
    return body;
  }

  async load(fileBytes: BufferSource | string): Promise<SessionPayload> {
    const res = await fetch(`${this.baseUrl}/session`, {
      method: "POST",
      body: fileBytes as BodyInit,
    });
    return this.check(res);
  }

  async info(sid: string): Promise<SessionPayload> {
    return this.check(await fetch(`${this.baseUrl}/session/${sid}`));
  }

  async moveVertex(sid: string, vid: number, x: number, y: number): Promise<SessionPayload> {
    const res = await fetch(`${this.baseUrl}/session/${sid}/vertex/${vid}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ x, y }),
    });
    return this.check(res);
  }

  async layout(sid: string, algorithm: string, seed = 0): Promise<SessionPayload> {
    const res = await fetch(`${this.baseUrl}/session/${sid}/layout`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ algorithm, seed }),
    });
    return this.check(res);
  }

  async startRefine(sid: string, overrides: Record<string, unknown> = {}): Promise<void> {
    const res = await fetch(`${this.baseUrl}/session/${sid}/refine`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(overrides),
    });
    await this.check(res);
  }

  async cancelRefine(sid: string): Promise<SessionPayload> {
    const res = await fetch(`${this.baseUrl}/session/${sid}/refine`, { method: "DELETE" });
    return this.check(res);
  }

  async undo(sid: string): Promise<SessionPayload> {
    const res = await fetch(`${this.baseUrl}/session/${sid}/undo`, { method: "POST" });
    return this.check(res);
  }

  async exportGml(sid: string): Promise<string> {
    const res = await fetch(`${this.baseUrl}/session/${sid}/export`);
    if (!res.ok) throw new ApiError(res.status, "export failed");
    return res.text();
  }

  async emptyPly(sid: string): Promise<EmptyPlyVerdict> {
    return this.check(await fetch(`${this.baseUrl}/session/${sid}/emptyply`));
  }

  wsUrl(sid: string): string {
    return `${this.baseUrl.replace(/^http/, "ws")}/session/${sid}/ws`;
  }
}
