// Application bootstrap: canvas, pointer handling, control panel, and the
// connection to a running plyscope service (default 127.0.0.1:7878,
// overridable with ?server=http://host:port).

import { Api } from "./api.js";
import { DragController } from "./drag.js";
import { Panel } from "./panel.js";
import { render, renderSparkline } from "./render.js";
import { RefineSocket } from "./socket.js";
import { SessionStore } from "./store.js";
import { fitViewport, identityViewport, pan, screenToModel, zoomAround, type Viewport } from "./view.js";

const params = new URLSearchParams(window.location.search);
const server = params.get("server") ?? "http://127.0.0.1:7878";

const api = new Api(server);
const store = new SessionStore();
const socket = new RefineSocket(store);
const drag = new DragController(api, store);

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const spark = document.getElementById("spark") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const sparkCtx = spark.getContext("2d")!;
const toastEl = document.getElementById("toast")!;
const statusEl = document.getElementById("status")!;

let viewport: Viewport = identityViewport();
let panning: { x: number; y: number } | null = null;

function toast(message: string): void {
  toastEl.textContent = message;
  toastEl.classList.add("visible");
  setTimeout(() => toastEl.classList.remove("visible"), 4000);
}

const panel = new Panel(api, store, socket, toast);

function redraw(): void {
  render(ctx, store, viewport, canvas.width, canvas.height);
  renderSparkline(sparkCtx, store.history, spark.width, spark.height);
  const ply = store.displayedPly();
  statusEl.textContent =
    store.connection === "reconnecting"
      ? "disconnected - reload to reconnect"
      : ply === null
        ? "load a GML or GraphML file"
        : `ply ${ply}`;
}

store.onChange(redraw);

function fitToGraph(): void {
  if (!store.report || !store.report.disks.length) return;
  const xs0 = Math.min(...store.report.disks.map((d) => d.x - d.r));
  const xs1 = Math.max(...store.report.disks.map((d) => d.x + d.r));
  const ys0 = Math.min(...store.report.disks.map((d) => d.y - d.r));
  const ys1 = Math.max(...store.report.disks.map((d) => d.y + d.r));
  viewport = fitViewport(canvas.width, canvas.height, xs0, ys0, xs1, ys1);
  redraw();
}

function pickVertex(sx: number, sy: number): number | null {
  if (!store.graph) return null;
  const [mx, my] = screenToModel(viewport, sx, sy);
  const grabRadius = 8 / viewport.scale;
  let best: number | null = null;
  let bestDist = grabRadius;
  for (const v of store.graph.vertices) {
    const d = Math.hypot(v.x - mx, v.y - my);
    if (d < bestDist) {
      best = v.id;
      bestDist = d;
    }
  }
  return best;
}

canvas.addEventListener("pointerdown", (ev) => {
  const hit = pickVertex(ev.offsetX, ev.offsetY);
  if (hit !== null) {
    store.selected = hit;
    drag.start(hit);
  } else {
    panning = { x: ev.offsetX, y: ev.offsetY };
  }
  canvas.setPointerCapture(ev.pointerId);
});

canvas.addEventListener("pointermove", (ev) => {
  if (drag.activeVertex !== null) {
    drag.move(viewport, ev.offsetX, ev.offsetY);
  } else if (panning) {
    viewport = pan(viewport, ev.offsetX - panning.x, ev.offsetY - panning.y);
    panning = { x: ev.offsetX, y: ev.offsetY };
    redraw();
  }
});

canvas.addEventListener("pointerup", () => {
  drag.drop();
  panning = null;
});

canvas.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  viewport = zoomAround(viewport, ev.deltaY < 0 ? 1.15 : 1 / 1.15, ev.offsetX, ev.offsetY);
  redraw();
});

document.getElementById("file")!.addEventListener("change", async (ev) => {
  const input = ev.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) return;
  try {
    const payload = await api.load(await file.arrayBuffer());
    store.loadSession(payload);
    store.connection = "connected";
    fitToGraph();
  } catch (e) {
    toast(String(e));
  }
});

for (const algo of ["random", "circular", "organic"]) {
  document.getElementById(`layout-${algo}`)!.addEventListener("click", async () => {
    await panel.applyLayout(algo);
    fitToGraph();
  });
}
document.getElementById("refine")!.addEventListener("click", () => panel.startRefine());
document.getElementById("cancel")!.addEventListener("click", () => panel.cancelRefine());
document.getElementById("undo")!.addEventListener("click", () => panel.undo());
document.getElementById("emptyply")!.addEventListener("click", () => panel.toggleEmptyPly().then(redraw));
document.getElementById("disks")!.addEventListener("click", () => {
  store.showDisks = !store.showDisks;
  redraw();
});
document.getElementById("witness")!.addEventListener("click", () => {
  store.showWitness = !store.showWitness;
  redraw();
});
document.getElementById("export")!.addEventListener("click", () =>
  panel.exportDownload((name, text) => {
    const blob = new Blob([text], { type: "text/plain" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = name;
    a.click();
    URL.revokeObjectURL(a.href);
  }),
);

redraw();
