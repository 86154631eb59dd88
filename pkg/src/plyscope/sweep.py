"""Plane-sweep ply computation.

Disks are swept left to right as top/bottom halfcircle arcs kept in a
vertical status structure (a doubly linked list ordered by y at the
current sweep x). Each arc caches the ply of the open region immediately
below it; the cached values obey the prefix-sum law

    ply(arc) == #top arcs at-or-above  -  #bottom arcs at-or-above

which every mutation maintains locally. Events are processed in ascending
x with ties ranked end < intersection < start. Circle-pair intersections
are computed lazily, the first time two disks' arcs become vertically
adjacent. Events that are inconsistent with the current status (a
floating-point artifact) are deferred past the nearest consistent event
and retried; events that can never resolve are dropped and counted.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from heapq import heapify, heappop, heappush

from .model import EPS, Drawing, Graph, PlyDisk, derive_disks

TOP = 1
BOTTOM = -1

_KIND_END = 0
_KIND_CROSS = 1
_KIND_START = 2
_KIND_NAME = {_KIND_END: "end", _KIND_CROSS: "cross", _KIND_START: "start"}


class SweepInvariantError(RuntimeError):
    """Raised by debug mode when a status recount contradicts cached plies."""


@dataclass(frozen=True)
class WitnessRegion:
    """A maximal sweep interval during which one region of the plane
    carried the global maximum ply, with a representative interior point."""

    x0: float
    x1: float
    point: tuple[float, float]


@dataclass(frozen=True)
class Crossing:
    """One boundary intersection of two disks, classified to the arc pair
    that swaps there. upper/lower are (vertex id, side) with side +1 for
    the top halfcircle and -1 for the bottom one; upper is the arc above
    just before the crossing."""

    x: float
    y: float
    upper: tuple[int, int]
    lower: tuple[int, int]
    degenerate: bool


@dataclass(frozen=True)
class PlyReport:
    ply: int
    regions: tuple[WitnessRegion, ...]
    events: int
    starts: int
    ends: int
    intersections: int
    postponed: int
    dropped: int
    elapsed_ms: float
    low_confidence: bool
    degenerate_floor: bool

    def to_json(self) -> dict:
        return {
            "ply": self.ply,
            "regions": [
                {"x0": r.x0, "x1": r.x1, "point": {"x": r.point[0], "y": r.point[1]}}
                for r in self.regions
            ],
            "counters": {
                "events": self.events,
                "starts": self.starts,
                "ends": self.ends,
                "intersections": self.intersections,
                "postponed": self.postponed,
                "dropped": self.dropped,
            },
            "elapsed_ms": self.elapsed_ms,
            "low_confidence": self.low_confidence,
            "degenerate_floor": self.degenerate_floor,
        }


class _Arc:
    __slots__ = ("aid", "disk", "side", "ply", "prev", "nxt", "alive", "cx", "cy", "r")

    def __init__(self, aid, disk, side, cx, cy, r):
        self.aid = aid
        self.disk = disk
        self.side = side
        self.ply = 0
        self.prev = None
        self.nxt = None
        self.alive = True
        self.cx = cx
        self.cy = cy
        self.r = r


def _halfy(cx: float, cy: float, r: float, side: int, x: float) -> float:
    v = r * r - (x - cx) * (x - cx)
    return cy + side * math.sqrt(v if v > 0.0 else 0.0)


def _pair_crossings(c1x, c1y, r1, c2x, c2y, r2, min_x):
    """Boundary crossings of two circles with x strictly beyond min_x, each
    classified to the (upper, lower) halfcircle pair that meets there.
    Returns tuples (x, y, up_owner, up_side, lo_owner, lo_side, degenerate)
    where owner is 0 for the first circle and 1 for the second."""
    dx = c2x - c1x
    dy = c2y - c1y
    d = math.hypot(dx, dy)
    if d <= EPS:
        return []  # concentric: nesting handled by start/end order
    if d >= r1 + r2 - EPS:
        return []  # disjoint or tangent: open disks do not overlap
    if d <= abs(r1 - r2) + EPS:
        return []  # containment: no boundary crossing
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    h = math.sqrt(h2 if h2 > 0.0 else 0.0)
    ux, uy = dx / d, dy / d
    bx, by = c1x + a * ux, c1y + a * uy

    out = []
    for s in (1.0, -1.0):
        px = bx - s * h * uy
        py = by + s * h * ux
        if px <= min_x:
            continue
        degenerate = False
        d1 = py - c1y
        if d1 > EPS:
            s1 = TOP
        elif d1 < -EPS:
            s1 = BOTTOM
        else:
            s1, degenerate = TOP, True
        d2 = py - c2y
        if d2 > EPS:
            s2 = TOP
        elif d2 < -EPS:
            s2 = BOTTOM
        else:
            s2, degenerate = TOP, True
        # circle slope at p: dy/dx = -(px-cx)/(py-cy); the arc with the
        # smaller slope lies above just before the crossing
        if abs(d1) <= EPS:
            m1 = math.inf if px < c1x else -math.inf
        else:
            m1 = -(px - c1x) / d1
        if abs(d2) <= EPS:
            m2 = math.inf if px < c2x else -math.inf
        else:
            m2 = -(px - c2x) / d2
        if m1 < m2:
            out.append((px, py, 0, s1, 1, s2, degenerate))
        elif m2 < m1:
            out.append((px, py, 1, s2, 0, s1, degenerate))
        else:
            out.append((px, py, 0, s1, 1, s2, True))
    return out


def circle_pair_intersections(d1: PlyDisk, d2: PlyDisk, x_now: float) -> list[Crossing]:
    """Boundary intersections of two ply disks with x > x_now + eps."""
    if d1.r <= 0.0 or d2.r <= 0.0:
        return []
    raw = _pair_crossings(d1.cx, d1.cy, d1.r, d2.cx, d2.cy, d2.r, x_now + EPS)
    owners = (d1.owner, d2.owner)
    return [
        Crossing(px, py, (owners[uo], us), (owners[lo], ls), deg)
        for (px, py, uo, us, lo, ls, deg) in raw
    ]


class _Track:
    """An open max-ply region being followed across consecutive events."""

    __slots__ = ("x_start", "frags", "u_aid", "l_aid", "u_geom", "l_geom")

    def __init__(self, x_start, upper, lower):
        self.x_start = x_start
        self.frags = []
        self.set_gap(x_start, upper, lower)

    def set_gap(self, x, upper, lower):
        self.u_aid = upper.aid
        self.l_aid = lower.aid
        self.u_geom = (upper.cx, upper.cy, upper.r, upper.side)
        self.l_geom = (lower.cx, lower.cy, lower.r, lower.side)
        self.frags.append((x, self.u_geom, self.l_geom))

    def interval_at(self, x):
        ux, uy, ur, us = self.u_geom
        lx, ly, lr, ls = self.l_geom
        return _halfy(lx, ly, lr, ls, x), _halfy(ux, uy, ur, us, x)


def _close_track(track: _Track, x_end: float) -> tuple:
    return (track.x_start, x_end, track.frags)


def _region_rep(x0: float, x1: float, frags: list) -> tuple[float, float]:
    mid = (x0 + x1) / 2.0
    idx = 0
    for k, frag in enumerate(frags):
        if frag[0] <= mid:
            idx = k
        else:
            break
    fx0 = frags[idx][0]
    fx1 = frags[idx + 1][0] if idx + 1 < len(frags) else x1
    rep_x = min(max(mid, fx0), fx1)
    ux, uy, ur, us = frags[idx][1]
    lx, ly, lr, ls = frags[idx][2]
    y_hi = _halfy(ux, uy, ur, us, rep_x)
    y_lo = _halfy(lx, ly, lr, ls, rep_x)
    return (rep_x, (y_hi + y_lo) / 2.0)


def compute_ply(
    graph: Graph,
    drawing: Drawing,
    *,
    debug_recount: bool = False,
    trace=None,
) -> PlyReport:
    """Ply number of a straight-line drawing with witness regions.

    Pure function of its inputs: repeated runs produce identical reports.
    With debug_recount the cached ply of every arc is recomputed from
    scratch after every event (O(n) per event) and any disagreement raises
    SweepInvariantError.
    """
    disks = derive_disks(graph, drawing)
    t0 = time.perf_counter()

    live = [d for d in disks if d.r > 0.0]
    starts = ends = intersections = postponed = dropped = 0

    head = _Arc(-1, -1, 0, 0.0, 0.0, 0.0)
    tail = _Arc(-2, -2, 0, 0.0, 0.0, 0.0)
    head.nxt = tail
    tail.prev = head

    arcs: list[_Arc | None] = [None] * (2 * graph.n)
    pair_seen: set[int] = set()
    pairs_registered = 0

    counts: dict[int, int] = {}
    cur_max = 0

    global_max = 0
    open_tracks: list[_Track] = []
    closed: list[tuple] = []  # (x0, x1, frags)
    fallback_gap = None  # (x, u_geom, l_geom) captured when global max rises

    q: list[tuple] = []
    for d in live:
        q.append((d.cx - d.r, _KIND_START, d.owner, -1, d.cy, False))
        q.append((d.cx + d.r, _KIND_END, d.owner, -1, d.cy, False))
    heapify(q)

    sqrt = math.sqrt

    # per-event witness bookkeeping: the scan over the whole status is only
    # repeated when this event could have changed the set of max-ply gaps
    ev_tmax = -1
    ev_hit = False
    track_aids: set[int] = set()

    def bucket_add(v: int) -> None:
        nonlocal cur_max
        counts[v] = counts.get(v, 0) + 1
        if v > cur_max:
            cur_max = v

    def bucket_sub(v: int) -> None:
        nonlocal cur_max
        c = counts[v] - 1
        if c:
            counts[v] = c
        else:
            del counts[v]
            if v == cur_max:
                while cur_max > 0 and cur_max not in counts:
                    cur_max -= 1

    def schedule_pair(key: int, da: int, db: int, x_now: float) -> None:
        """Register a disk pair and enqueue its crossings, the first time
        arcs of the two disks sit next to each other in the status.

        min_x lies slightly LEFT of the adjacency event: a crossing that
        lands numerically at a disk's start point (near-vertical arcs make
        this reachable) must still be enqueued, or the status order loses a
        transposition and later events storm the postponement path."""
        nonlocal pairs_registered
        pair_seen.add(key)
        pairs_registered += 1
        d1 = disks[da]
        d2 = disks[db]
        for px, py, uo, us, lo, ls, deg in _pair_crossings(
            d1.cx, d1.cy, d1.r, d2.cx, d2.cy, d2.r, x_now - EPS
        ):
            u_disk = da if uo == 0 else db
            l_disk = da if lo == 0 else db
            u_aid = 2 * u_disk + (0 if us == TOP else 1)
            l_aid = 2 * l_disk + (0 if ls == TOP else 1)
            heappush(q, (px, _KIND_CROSS, u_aid, l_aid, py, deg))

    def schedule(a: _Arc, b: _Arc, x_now: float) -> None:
        da, db = a.disk, b.disk
        if da == db:
            return
        key = (da << 21) | db if da < db else (db << 21) | da
        if key not in pair_seen:
            schedule_pair(key, da, db, x_now)

    def end_bracket(top: _Arc, bot: _Arc):
        """Arcs strictly between top and bot, or None when bot is not
        reachable below top (inconsistent order)."""
        between = []
        cur = top.nxt
        while cur is not bot:
            if cur is tail:
                return None
            between.append(cur)
            cur = cur.nxt
        return between

    def consistent(ev) -> bool:
        kind = ev[1]
        if kind == _KIND_START:
            return True
        if kind == _KIND_CROSS:
            up = arcs[ev[2]]
            lo = arcs[ev[3]]
            if up is None or lo is None or not (up.alive and lo.alive):
                return False
            return up.nxt is lo
        top = arcs[2 * ev[2]]
        bot = arcs[2 * ev[2] + 1]
        if top is None or bot is None or not (top.alive and bot.alive):
            return False
        return end_bracket(top, bot) is not None

    def exec_start(ev) -> None:
        nonlocal starts, dropped, ev_tmax, ev_hit
        x, d = ev[0], ev[2]
        existing = arcs[2 * d]
        if existing is not None and existing.alive:
            dropped += 1  # duplicate start: recovered by ignoring
            return
        dsk = disks[d]
        cy = dsk.cy
        cur = head.nxt
        while cur is not tail:
            dx = x - cur.cx
            v = cur.r * cur.r - dx * dx
            ay = cur.cy + cur.side * sqrt(v if v > 0.0 else 0.0)
            if ay > cy + EPS:
                cur = cur.nxt
                continue
            if ay < cy - EPS:
                break
            if cur.side == TOP:  # y-tie: a top arc at cy is about to rise above
                cur = cur.nxt
                continue
            break
        above = cur.prev
        if above is not head and cur is not tail and above.disk == cur.disk:
            # the pair would nest between one disk's two arcs; with tangent
            # or disjoint disks that is a float-noise artifact of spans
            # overlapping by a few ulps, so place the pair outside instead
            other = disks[above.disk]
            dd = math.hypot(dsk.cx - other.cx, dsk.cy - other.cy)
            inside = dd < other.r - dsk.r + EPS
            crossing = abs(other.r - dsk.r) + EPS < dd < other.r + dsk.r - EPS
            if not (inside or crossing):
                cur = above if cy >= other.cy else cur.nxt
        above = cur.prev
        t = _Arc(2 * d, d, TOP, dsk.cx, dsk.cy, dsk.r)
        b = _Arc(2 * d + 1, d, BOTTOM, dsk.cx, dsk.cy, dsk.r)
        arcs[t.aid] = t
        arcs[b.aid] = b
        base = above.ply if above is not head else 0
        t.ply = base + 1
        b.ply = base
        above.nxt = t
        t.prev = above
        t.nxt = b
        b.prev = t
        b.nxt = cur
        cur.prev = b
        bucket_add(t.ply)
        bucket_add(b.ply)
        if t.ply > ev_tmax:
            ev_tmax = t.ply
        if above is not head and above.aid in track_aids:
            ev_hit = True
        if above is not head:
            schedule(above, t, x)
        if cur is not tail:
            schedule(b, cur, x)
        starts += 1

    def exec_end(ev, between) -> None:
        nonlocal ends, ev_tmax, ev_hit
        x, d = ev[0], ev[2]
        top = arcs[2 * d]
        bot = arcs[2 * d + 1]
        if top.ply > ev_tmax:
            ev_tmax = top.ply
        if bot.ply > ev_tmax:
            ev_tmax = bot.ply
        if top.aid in track_aids or bot.aid in track_aids:
            ev_hit = True
        for m in between:
            bucket_sub(m.ply)
            if m.ply > ev_tmax:
                ev_tmax = m.ply
            m.ply -= 1
            bucket_add(m.ply)
        above = top.prev
        below = bot.nxt
        if between:
            first, last = between[0], between[-1]
            above.nxt = first
            first.prev = above
            last.nxt = below
            below.prev = last
        else:
            above.nxt = below
            below.prev = above
        bucket_sub(top.ply)
        bucket_sub(bot.ply)
        top.alive = bot.alive = False
        if above is not head and above.aid in track_aids:
            ev_hit = True
        upper_new = between[0] if between else below
        if above is not head and upper_new is not tail:
            schedule(above, upper_new, x)
        if between and below is not tail:
            schedule(between[-1], below, x)
        ends += 1

    def force_end(ev) -> None:
        """Terminal cleanup for an end event whose arcs drifted out of
        order: remove each arc where it stands and repair plies below it.
        Keeps the status leak-free so the sweep can always finish."""
        nonlocal ends, ev_tmax, ev_hit
        ev_tmax = 1 << 30  # conservative: always rescan after forced removal
        ev_hit = True
        x, d = ev[0], ev[2]
        for arc in (arcs[2 * d], arcs[2 * d + 1]):
            if not arc.alive:
                continue
            cur = arc.nxt
            while cur is not tail:
                bucket_sub(cur.ply)
                cur.ply -= arc.side
                bucket_add(cur.ply)
                cur = cur.nxt
            above, below = arc.prev, arc.nxt
            above.nxt = below
            below.prev = above
            bucket_sub(arc.ply)
            arc.alive = False
            if above is not head and below is not tail:
                schedule(above, below, x)
        ends += 1

    def exec_cross(ev) -> None:
        nonlocal intersections, ev_tmax, ev_hit
        x = ev[0]
        up = arcs[ev[2]]
        lo = arcs[ev[3]]
        a = up.prev
        b = lo.nxt
        base = a.ply if a is not head else 0
        old_lo_ply = lo.ply
        new_lo_ply = base + lo.side
        t = up.ply
        if old_lo_ply > t:
            t = old_lo_ply
        if new_lo_ply > t:
            t = new_lo_ply
        if t > ev_tmax:
            ev_tmax = t
        if (
            up.aid in track_aids
            or lo.aid in track_aids
            or (a is not head and a.aid in track_aids)
        ):
            ev_hit = True
        bucket_sub(up.ply)
        bucket_add(new_lo_ply)
        lo.ply = new_lo_ply
        up.ply = old_lo_ply
        a.nxt = lo
        lo.prev = a
        lo.nxt = up
        up.prev = lo
        up.nxt = b
        b.prev = up
        if a is not head:
            schedule(a, lo, x)
        if b is not tail:
            schedule(up, b, x)
        intersections += 1

    def recount() -> None:
        acc = 0
        seen = 0
        mx = 0
        cur = head.nxt
        while cur is not tail:
            acc += cur.side
            if cur.ply != acc:
                raise SweepInvariantError(
                    f"prefix-sum violation at arc {cur.aid}: cached {cur.ply}, recount {acc}"
                )
            if acc > mx:
                mx = acc
            seen += 1
            cur = cur.nxt
        if seen and mx != cur_max:
            raise SweepInvariantError(f"max tracking drift: cached {cur_max}, recount {mx}")
        if not seen and cur_max != 0:
            raise SweepInvariantError("max tracking drift on empty status")

    def witness_after(x_e: float) -> None:
        nonlocal global_max, open_tracks, fallback_gap, track_aids
        m = cur_max
        if m < 1 or m < global_max:
            if open_tracks:
                for t in open_tracks:
                    closed.append(_close_track(t, x_e))
                open_tracks = []
                track_aids = set()
            return
        if m > global_max:
            global_max = m
            open_tracks = []
            track_aids = set()
            closed.clear()
            fallback_gap = None

        gaps = []
        cur = head.nxt
        while cur is not tail:
            if cur.ply == m and cur.nxt is not tail:
                gaps.append(cur)
            cur = cur.nxt
        if not gaps:
            for t in open_tracks:
                closed.append(_close_track(t, x_e))
            open_tracks = []
            track_aids = set()
            return
        if fallback_gap is None:
            g = gaps[0]
            fallback_gap = (
                x_e,
                (g.cx, g.cy, g.r, g.side),
                (g.nxt.cx, g.nxt.cy, g.nxt.r, g.nxt.side),
            )

        by_key = {(t.u_aid, t.l_aid): t for t in open_tracks}
        kept: list[_Track] = []
        taken: set[int] = set()
        pending = []
        for g in gaps:
            t = by_key.get((g.aid, g.nxt.aid))
            if t is not None and id(t) not in taken:
                taken.add(id(t))
                kept.append(t)
            else:
                pending.append(g)
        remaining = [t for t in open_tracks if id(t) not in taken]
        for g in pending:
            lo_arc = g.nxt
            y_lo = _halfy(lo_arc.cx, lo_arc.cy, lo_arc.r, lo_arc.side, x_e)
            y_hi = _halfy(g.cx, g.cy, g.r, g.side, x_e)
            match = None
            for t in remaining:
                tlo, thi = t.interval_at(x_e)
                if min(y_hi, thi) - max(y_lo, tlo) > EPS:
                    match = t
                    break
            if match is not None:
                remaining.remove(match)
                match.set_gap(x_e, g, lo_arc)
                kept.append(match)
                continue
            reopened = None
            for ridx in range(len(closed) - 1, -1, -1):
                rx0, rx1, rfrags = closed[ridx]
                if rx1 < x_e - EPS:
                    break
                ux, uy, ur, us = rfrags[-1][1]
                lx, ly, lr, ls = rfrags[-1][2]
                rlo = _halfy(lx, ly, lr, ls, x_e)
                rhi = _halfy(ux, uy, ur, us, x_e)
                if min(y_hi, rhi) - max(y_lo, rlo) > EPS:
                    reopened = closed.pop(ridx)
                    break
            if reopened is not None:
                t = _Track.__new__(_Track)
                t.x_start = reopened[0]
                t.frags = reopened[2]
                t.u_aid = t.l_aid = -99  # force a fresh frag below
                t.u_geom = t.frags[-1][1]
                t.l_geom = t.frags[-1][2]
                t.set_gap(x_e, g, lo_arc)
                kept.append(t)
            else:
                kept.append(_Track(x_e, g, lo_arc))
        for t in remaining:
            closed.append(_close_track(t, x_e))
        open_tracks = kept
        track_aids = set()
        for t in kept:
            track_aids.add(t.u_aid)
            track_aids.add(t.l_aid)

    def after_event(x_e: float) -> None:
        """Witness bookkeeping after an executed event, rescanning only
        when the set of max-ply gaps could actually have changed."""
        m = cur_max
        if m != global_max:
            witness_after(x_e)
        elif m >= 1 and (not open_tracks or ev_tmax >= m or ev_hit):
            witness_after(x_e)

    def execute(ev) -> None:
        kind = ev[1]
        if kind == _KIND_START:
            exec_start(ev)
        elif kind == _KIND_END:
            exec_end(ev, end_bracket(arcs[2 * ev[2]], arcs[2 * ev[2] + 1]))
        else:
            exec_cross(ev)

    def defer(ev) -> bool:
        """Postponement protocol: execute the nearest consistent event and
        leave ev to be retried; drop ev when nothing consistent remains.
        Returns True when ev stays pending (was deferred)."""
        nonlocal postponed, dropped, ev_tmax, ev_hit, last_x
        buf = []
        found = None
        while q:
            f = heappop(q)
            if consistent(f):
                found = f
                break
            buf.append(f)
        for item in buf:
            heappush(q, item)
        if found is None:
            if ev[1] == _KIND_END:
                force_end(ev)  # the drop fallback must still clean up
                after_event(ev[0])
                if debug_recount:
                    recount()
                if trace is not None:
                    trace.write(_trace_line(ev, cur_max))
            dropped += 1
            return False
        postponed += 1
        ev_tmax = -1
        ev_hit = False
        execute(found)
        after_event(found[0])
        if debug_recount:
            recount()
        if trace is not None:
            trace.write(_trace_line(found, cur_max))
        if found[0] > last_x:
            last_x = found[0]
        return True

    stuck = None
    last_x = 0.0
    slow = debug_recount or trace is not None
    hpop = heappop
    while q or stuck is not None:
        if stuck is not None:
            ev = stuck
            stuck = None
        else:
            ev = hpop(q)
        kind = ev[1]
        if kind == _KIND_CROSS:
            up = arcs[ev[2]]
            lo = arcs[ev[3]]
            if up is None or lo is None or not up.alive or not lo.alive:
                dropped += 1  # expired: a participating disk already ended
                continue
            if up.nxt is not lo:
                ev_tmax = -1
                ev_hit = False
                if defer(ev):
                    stuck = ev
                continue
            # hot path: the swap inlined, identical to exec_cross
            x = ev[0]
            a = up.prev
            b = lo.nxt
            base = a.ply if a is not head else 0
            old_lo_ply = lo.ply
            new_lo_ply = base + lo.side
            up_ply = up.ply
            tmax = up_ply if up_ply > old_lo_ply else old_lo_ply
            if new_lo_ply > tmax:
                tmax = new_lo_ply
            c = counts[up_ply] - 1
            if c:
                counts[up_ply] = c
            else:
                del counts[up_ply]
                if up_ply == cur_max:
                    while cur_max > 0 and cur_max not in counts:
                        cur_max -= 1
            counts[new_lo_ply] = counts.get(new_lo_ply, 0) + 1
            if new_lo_ply > cur_max:
                cur_max = new_lo_ply
            lo.ply = new_lo_ply
            up.ply = old_lo_ply
            a.nxt = lo
            lo.prev = a
            lo.nxt = up
            up.prev = lo
            up.nxt = b
            b.prev = up
            intersections += 1
            if a is not head:
                da, db = a.disk, lo.disk
                if da != db:
                    key = (da << 21) | db if da < db else (db << 21) | da
                    if key not in pair_seen:
                        schedule_pair(key, da, db, x)
            if b is not tail:
                da, db = up.disk, b.disk
                if da != db:
                    key = (da << 21) | db if da < db else (db << 21) | da
                    if key not in pair_seen:
                        schedule_pair(key, da, db, x)
            if cur_max != global_max:
                witness_after(x)
            elif cur_max >= 1 and (
                not open_tracks
                or tmax >= cur_max
                or up.aid in track_aids
                or lo.aid in track_aids
                or (a is not head and a.aid in track_aids)
            ):
                witness_after(x)
            if slow:
                if debug_recount:
                    recount()
                if trace is not None:
                    trace.write(_trace_line(ev, cur_max))
            if x > last_x:
                last_x = x
            continue
        ev_tmax = -1
        ev_hit = False
        if kind == _KIND_END:
            top = arcs[2 * ev[2]]
            bot = arcs[2 * ev[2] + 1]
            if top is None or bot is None or not (top.alive and bot.alive):
                dropped += 1
                continue
            between = end_bracket(top, bot)
            if between is None:
                if defer(ev):
                    stuck = ev
                continue
            exec_end(ev, between)
        else:
            exec_start(ev)

        after_event(ev[0])
        if debug_recount:
            recount()
        if trace is not None:
            trace.write(_trace_line(ev, cur_max))
        if ev[0] > last_x:
            last_x = ev[0]

    for t in open_tracks:
        closed.append(_close_track(t, last_x))

    degenerate_floor = False
    sweep_ply = global_max
    regions: list[WitnessRegion] = []
    if graph.n == 0:
        ply = 0
    elif sweep_ply >= 1:
        ply = sweep_ply
        for x0, x1, frags in closed:
            regions.append(WitnessRegion(x0, x1, _region_rep(x0, x1, frags)))
        if not regions and fallback_gap is not None:
            fx, ug, lg = fallback_gap
            regions.append(WitnessRegion(fx, fx, _region_rep(fx, fx, [(fx, ug, lg)])))
        regions.sort(key=lambda r: (r.x0, r.x1))
    else:
        # every disk degenerate: the radius-0 convention floors ply at 1
        ply = 1
        degenerate_floor = True
        for v in range(graph.n):
            px, py = drawing.positions[v]
            regions.append(WitnessRegion(px, px, (px, py)))
        regions.sort(key=lambda r: (r.x0, r.x1))

    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return PlyReport(
        ply=ply,
        regions=tuple(regions),
        events=starts + ends + intersections,
        starts=starts,
        ends=ends,
        intersections=intersections,
        postponed=postponed,
        dropped=dropped,
        elapsed_ms=elapsed_ms,
        low_confidence=dropped > 0,
        degenerate_floor=degenerate_floor,
    )


def _trace_line(ev, cur_max) -> str:
    if ev[1] == _KIND_CROSS:
        ids = f"{ev[2]}x{ev[3]}"
    else:
        ids = str(ev[2])
    return f"{ev[0]:.17g} {_KIND_NAME[ev[1]]} {ids} max={cur_max}\n"
