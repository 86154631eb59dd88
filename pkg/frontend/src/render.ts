// Canvas renderer: vertices, straight edges, translucent ply disks from
// the server's disk list, witness markers, and the live ply number. All
// geometry comes from the store; nothing is recomputed here.

import type { SessionStore } from "./store.js";
import type { Viewport } from "./view.js";
import { modelToScreen } from "./view.js";

export const DISK_ALPHA = 0.2;
const VERTEX_RADIUS = 4;

export function render(
  ctx: CanvasRenderingContext2D,
  store: SessionStore,
  viewport: Viewport,
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);
  const graph = store.graph;
  const report = store.report;

  if (!graph || !report) {
    drawPlyLabel(ctx, null, width);
    return;
  }
  const pos = new Map(graph.vertices.map((v) => [v.id, v] as const));

  if (store.showDisks) {
    ctx.fillStyle = `rgba(70, 130, 180, ${DISK_ALPHA})`;
    for (const d of report.disks) {
      if (d.r <= 0) continue;
      const [sx, sy] = modelToScreen(viewport, d.x, d.y);
      ctx.beginPath();
      ctx.arc(sx, sy, d.r * viewport.scale, 0, 2 * Math.PI);
      ctx.fill();
    }
  }

  ctx.strokeStyle = "#444";
  ctx.lineWidth = 1;
  for (const [u, v] of graph.edges) {
    const a = pos.get(u);
    const b = pos.get(v);
    if (!a || !b) continue;
    const [ax, ay] = modelToScreen(viewport, a.x, a.y);
    const [bx, by] = modelToScreen(viewport, b.x, b.y);
    ctx.beginPath();
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
    ctx.stroke();
  }

  const violating = new Set<number>();
  if (store.emptyPlyOverlay) {
    for (const [a, b] of store.emptyPlyOverlay) {
      violating.add(a);
      violating.add(b);
    }
  }
  for (const v of graph.vertices) {
    const [sx, sy] = modelToScreen(viewport, v.x, v.y);
    ctx.beginPath();
    ctx.arc(sx, sy, VERTEX_RADIUS, 0, 2 * Math.PI);
    ctx.fillStyle =
      v.id === store.selected ? "#d62728" : violating.has(v.id) ? "#ff7f0e" : "#1f77b4";
    ctx.fill();
  }

  if (store.showWitness) {
    ctx.strokeStyle = "#d62728";
    ctx.lineWidth = 2;
    for (const reg of report.regions) {
      const [sx, sy] = modelToScreen(viewport, reg.point.x, reg.point.y);
      ctx.beginPath();
      ctx.arc(sx, sy, 7, 0, 2 * Math.PI);
      ctx.stroke();
      ctx.beginPath();
      ctx.moveTo(sx - 4, sy);
      ctx.lineTo(sx + 4, sy);
      ctx.moveTo(sx, sy - 4);
      ctx.lineTo(sx, sy + 4);
      ctx.stroke();
    }
  }

  drawPlyLabel(ctx, report.ply, width, report.low_confidence);
}

function drawPlyLabel(
  ctx: CanvasRenderingContext2D,
  ply: number | null,
  width: number,
  lowConfidence = false,
): void {
  ctx.fillStyle = lowConfidence ? "#b8860b" : "#000";
  ctx.font = "bold 20px sans-serif";
  const text = ply === null ? "ply 0" : `ply ${ply}${lowConfidence ? " (low confidence)" : ""}`;
  ctx.fillText(text, width - ctx.measureText(text).width - 12, 28);
}

/** Sparkline of the ply history ring buffer. */
export function renderSparkline(
  ctx: CanvasRenderingContext2D,
  history: { ply: number }[],
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);
  if (!history.length) return;
  const max = Math.max(...history.map((h) => h.ply), 1);
  ctx.strokeStyle = "#1f77b4";
  ctx.beginPath();
  history.forEach((h, i) => {
    const x = (i / Math.max(history.length - 1, 1)) * (width - 4) + 2;
    const y = height - 2 - (h.ply / max) * (height - 6);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  ctx.stroke();
}
