"""Local HTTP/WebSocket service for the interactive explorer.

One session per loaded graph: move vertices, swap layouts, run the
refinement embedder in streamed slices, undo, export. Every response
carries the ply report of exactly the drawing state it describes; the
viewer never computes geometry itself, so reports also include the disk
list.
"""

from __future__ import annotations

import math
import queue
import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response, WebSocket, WebSocketDisconnect
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .formats import ParseError, load_auto, write_gml
from .layout import (
    LayoutConfig,
    RefineConfig,
    layout_circular,
    layout_organic,
    layout_random,
    refine_ply,
)
from .model import Drawing, Graph, StructuralError, derive_disks, drawing_to_json
from .oracle import empty_ply
from .sweep import PlyReport, compute_ply

UNDO_DEPTH = 64

_LAYOUT_FNS = {
    "random": layout_random,
    "circular": layout_circular,
    "organic": layout_organic,
}


def report_json(graph: Graph, drawing: Drawing, report: PlyReport) -> dict:
    out = report.to_json()
    out["disks"] = [
        {"id": d.owner, "x": d.cx, "y": d.cy, "r": d.r} for d in derive_disks(graph, drawing)
    ]
    return out


@dataclass
class Session:
    sid: str
    graph: Graph
    drawing: Drawing
    report: PlyReport
    original_ids: tuple
    undo: list[tuple[Drawing, PlyReport]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    refine_thread: threading.Thread | None = None
    refine_cancel: threading.Event = field(default_factory=threading.Event)
    stream: "queue.Queue[dict]" = field(default_factory=queue.Queue)

    def push_undo(self) -> None:
        self.undo.append((self.drawing, self.report))
        if len(self.undo) > UNDO_DEPTH:
            self.undo.pop(0)

    def refining(self) -> bool:
        return self.refine_thread is not None and self.refine_thread.is_alive()


def create_app() -> FastAPI:
    app = FastAPI(title="plyscope service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}

    def get_session(sid: str) -> Session | None:
        return sessions.get(sid)

    def session_payload(s: Session) -> dict:
        return {
            "session": s.sid,
            "graph": drawing_to_json(s.graph, s.drawing),
            "report": report_json(s.graph, s.drawing, s.report),
        }

    @app.post("/session")
    async def load(request: Request):
        body = await request.body()
        try:
            loaded = load_auto(body)
        except (ParseError, StructuralError) as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        drawing = loaded.drawing
        if drawing is None:
            drawing = layout_organic(loaded.graph, LayoutConfig())
        report = compute_ply(loaded.graph, drawing)
        sid = uuid.uuid4().hex[:12]
        sessions[sid] = Session(sid, loaded.graph, drawing, report, loaded.original_ids)
        return session_payload(sessions[sid])

    @app.get("/session/{sid}")
    def info(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with s.lock:
            return session_payload(s)

    @app.post("/session/{sid}/vertex/{vid}")
    async def move_vertex(sid: str, vid: int, request: Request):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        if not 0 <= vid < s.graph.n:
            return JSONResponse({"error": f"unknown vertex {vid}"}, status_code=404)
        obj = await request.json()
        try:
            x, y = float(obj["x"]), float(obj["y"])
        except (KeyError, TypeError, ValueError):
            return JSONResponse({"error": "body must carry numeric x,y"}, status_code=422)
        if not (math.isfinite(x) and math.isfinite(y)):
            return JSONResponse({"error": "coordinates must be finite"}, status_code=422)
        with s.lock:
            s.push_undo()
            s.drawing = s.drawing.moved(vid, x, y)
            s.report = compute_ply(s.graph, s.drawing)
            return session_payload(s)

    @app.post("/session/{sid}/layout")
    async def relayout(sid: str, request: Request):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        obj = await request.json()
        algorithm = obj.get("algorithm", "organic")
        if algorithm not in _LAYOUT_FNS:
            return JSONResponse({"error": f"unknown algorithm {algorithm!r}"}, status_code=422)
        seed = int(obj.get("seed", 0))
        with s.lock:
            s.push_undo()
            s.drawing = _LAYOUT_FNS[algorithm](s.graph, LayoutConfig(seed=seed))
            s.report = compute_ply(s.graph, s.drawing)
            return session_payload(s)

    @app.post("/session/{sid}/refine")
    async def refine(sid: str, request: Request):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        if s.refining():
            return JSONResponse({"error": "refinement already running"}, status_code=409)
        body = await request.body()
        overrides = {}
        if body:
            import json as _json

            overrides = _json.loads(body)
        try:
            config = RefineConfig(**overrides)
        except (TypeError, ValueError) as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        s.refine_cancel.clear()

        def on_eval(iteration: int, ply: int, drawing: Drawing) -> bool:
            moved = [
                [v, drawing.positions[v][0], drawing.positions[v][1]]
                for v in range(s.graph.n)
            ]
            s.stream.put({"iteration": iteration, "ply": ply, "moved": moved})
            return not s.refine_cancel.is_set()

        def worker():
            result = refine_ply(s.graph, s.drawing, config, on_eval=on_eval)
            with s.lock:
                s.push_undo()
                s.drawing = result.drawing
                s.report = compute_ply(s.graph, s.drawing)
            s.stream.put(
                {
                    "final": True,
                    "best_ply": result.ply,
                    "fallback": result.fallback,
                    "trajectory": [list(t) for t in result.trajectory],
                    "report": report_json(s.graph, s.drawing, s.report),
                }
            )

        s.refine_thread = threading.Thread(target=worker, daemon=True)
        s.refine_thread.start()
        return {"started": True, "eval_period": config.eval_period}

    @app.delete("/session/{sid}/refine")
    def cancel_refine(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        s.refine_cancel.set()
        if s.refine_thread is not None:
            s.refine_thread.join(timeout=30.0)
        with s.lock:
            return session_payload(s)

    @app.post("/session/{sid}/undo")
    def undo(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with s.lock:
            if s.undo:
                s.drawing, s.report = s.undo.pop()
            return session_payload(s)

    @app.get("/session/{sid}/export")
    def export(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with s.lock:
            data = write_gml(s.graph, s.drawing, s.original_ids)
        return Response(content=data, media_type="text/plain")

    @app.get("/session/{sid}/emptyply")
    def emptyply(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with s.lock:
            verdict = empty_ply(s.graph, s.drawing)
        return {"empty": verdict.empty, "violations": [list(p) for p in verdict.violations]}

    @app.websocket("/session/{sid}/ws")
    async def stream(ws: WebSocket, sid: str):
        s = get_session(sid)
        if s is None:
            await ws.close(code=4404)
            return
        await ws.accept()
        import asyncio

        try:
            while True:
                try:
                    msg = s.stream.get_nowait()
                except queue.Empty:
                    await asyncio.sleep(0.02)
                    continue
                await ws.send_json(msg)
                if msg.get("final"):
                    continue
        except (WebSocketDisconnect, RuntimeError):
            return

    return app
