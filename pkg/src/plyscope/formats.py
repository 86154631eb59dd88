"""Graph file I/O: GML (structure + drawing), GraphML (structure, drawing
when coordinate keys are present), and the JSON export used by the viewer.

GML carries coordinates in the usual `graphics [ x .. y .. ]` block. Node
ids from files are remapped to dense 0..n-1 in file order; the original
ids are retained so exported files keep their identity. Coordinates are
written with repr-level precision, so write/read round-trips are
bit-exact.
"""

from __future__ import annotations

import warnings
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .model import Drawing, Graph


class ParseError(ValueError):
    """Malformed graph file; message carries the offending location."""


@dataclass(frozen=True)
class LoadedGraph:
    graph: Graph
    drawing: Drawing | None
    original_ids: tuple[int | str, ...]


# ---------------------------------------------------------------- GML ----

_BARE_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.+-")


def _tokenize_gml(text: str):
    """Yield (token, line) with tokens: '[', ']', quoted strings (kept
    quoted), and bare words/numbers."""
    line = 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
        elif c.isspace():
            i += 1
        elif c == "#":  # comment to end of line
            while i < n and text[i] != "\n":
                i += 1
        elif c in "[]":
            yield c, line
            i += 1
        elif c == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    line += 1
                j += 1
            if j >= n:
                raise ParseError(f"line {line}: unterminated string")
            yield text[i : j + 1], line
            i = j + 1
        elif c in _BARE_CHARS:
            j = i
            while j < n and text[j] in _BARE_CHARS:
                j += 1
            yield text[i:j], line
            i = j
        else:
            raise ParseError(f"line {line}: unexpected character {c!r}")


def _parse_gml_value(tokens, pos):
    tok, line = tokens[pos]
    if tok == "[":
        items = []
        pos += 1
        while True:
            if pos >= len(tokens):
                raise ParseError(f"line {line}: unclosed '['")
            tok, tline = tokens[pos]
            if tok == "]":
                return ("list", items), pos + 1
            if tok in "[]":
                raise ParseError(f"line {tline}: malformed nesting")
            key = tok
            value, pos = _parse_gml_value(tokens, pos + 1)
            items.append((key, value))
    if tok == "]":
        raise ParseError(f"line {line}: unexpected ']'")
    if tok.startswith('"'):
        return ("str", tok[1:-1]), pos + 1
    return ("scalar", tok), pos + 1


def _items(listval, key):
    return [v for k, v in listval[1] if k == key]


def _scalar(listval, key, default=None):
    for k, v in listval[1]:
        if k == key:
            if v[0] == "str":
                return v[1]
            if v[0] == "scalar":
                return v[1]
    return default


def read_gml(data: bytes | str) -> tuple[Graph, Drawing, tuple[int | str, ...]]:
    """Parse GML with a drawing. Every node needs graphics x/y; duplicate
    edges collapse to one with a warning; self-loops are rejected."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    tokens = list(_tokenize_gml(text))
    if not tokens:
        raise ParseError("line 1: empty input")
    # find top-level 'graph [...]'
    pos = 0
    graph_val = None
    while pos < len(tokens):
        tok, line = tokens[pos]
        if tok in "[]":
            raise ParseError(f"line {line}: malformed nesting")
        key = tok
        value, pos = _parse_gml_value(tokens, pos + 1)
        if key == "graph":
            graph_val = value
            break
    if graph_val is None or graph_val[0] != "list":
        raise ParseError("line 1: no 'graph [ ... ]' block found")

    ids: list[int | str] = []
    index: dict[int | str, int] = {}
    coords: list[tuple[float, float]] = []
    labels: list[str | None] = []
    for node in _items(graph_val, "node"):
        if node[0] != "list":
            raise ParseError("node entry is not a block")
        raw_id = _scalar(node, "id")
        if raw_id is None:
            raise ParseError("node without id")
        try:
            nid: int | str = int(raw_id)
        except ValueError:
            nid = raw_id
        if nid in index:
            raise ParseError(f"duplicate node id {nid}")
        gfx = None
        for k, v in node[1]:
            if k == "graphics" and v[0] == "list":
                gfx = v
        if gfx is None:
            raise ParseError(f"node {nid}: no graphics block with coordinates")
        xs = _scalar(gfx, "x")
        ys = _scalar(gfx, "y")
        if xs is None or ys is None:
            raise ParseError(f"node {nid}: graphics block lacks x/y")
        try:
            x, y = float(xs), float(ys)
        except ValueError:
            raise ParseError(f"node {nid}: non-numeric coordinates") from None
        index[nid] = len(ids)
        ids.append(nid)
        coords.append((x, y))
        labels.append(_scalar(node, "label"))

    edges: list[tuple[int, int]] = []
    seen = set()
    for edge in _items(graph_val, "edge"):
        s = _scalar(edge, "source")
        t = _scalar(edge, "target")
        if s is None or t is None:
            raise ParseError("edge without source/target")
        try:
            sid: int | str = int(s)
        except ValueError:
            sid = s
        try:
            tid: int | str = int(t)
        except ValueError:
            tid = t
        if sid not in index or tid not in index:
            raise ParseError(f"edge ({s},{t}) references unknown node")
        u, v = index[sid], index[tid]
        if u == v:
            raise ParseError(f"self-loop at node {s}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"duplicate edge ({s},{t}) collapsed", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)

    use_labels = tuple(labels) if any(l is not None for l in labels) else ()
    graph = Graph(len(ids), tuple(sorted(edges)), use_labels)
    return graph, Drawing(tuple(coords)), tuple(ids)


def write_gml(
    graph: Graph,
    drawing: Drawing,
    original_ids: tuple[int | str, ...] | None = None,
) -> bytes:
    """GML text that read_gml round-trips bit-exactly (repr floats)."""
    if len(drawing) != graph.n:
        raise ValueError("drawing does not cover the graph")
    ids = original_ids if original_ids is not None else tuple(range(graph.n))
    out = ["graph [", "  directed 0"]
    for v in range(graph.n):
        x, y = drawing.positions[v]
        out.append("  node [")
        oid = ids[v]
        out.append(f"    id {oid}" if isinstance(oid, int) else f'    id "{oid}"')
        if graph.labels and graph.labels[v] is not None:
            out.append(f'    label "{graph.labels[v]}"')
        out.append("    graphics [")
        out.append(f"      x {x!r}")
        out.append(f"      y {y!r}")
        out.append("    ]")
        out.append("  ]")
    for u, v in graph.edges:
        out.append("  edge [")
        su, sv = ids[u], ids[v]
        out.append(f"    source {su}" if isinstance(su, int) else f'    source "{su}"')
        out.append(f"    target {sv}" if isinstance(sv, int) else f'    target "{sv}"')
        out.append("  ]")
    out.append("]")
    return ("\n".join(out) + "\n").encode("utf-8")


# ------------------------------------------------------------ GraphML ----


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def read_graphml(data: bytes | str) -> tuple[Graph, Drawing | None, tuple[int | str, ...]]:
    """GraphML structure; a Drawing only when x/y keys cover every node."""
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        raise ParseError(f"malformed XML: {exc}") from None
    if _local(root.tag) != "graphml":
        raise ParseError("not a graphml document")

    keymap: dict[str, str] = {}  # key id -> attr.name
    for key in root:
        if _local(key.tag) == "key" and key.get("for", "node") == "node":
            keymap[key.get("id", "")] = key.get("attr.name", key.get("id", ""))

    graph_el = None
    for child in root:
        if _local(child.tag) == "graph":
            graph_el = child
            break
    if graph_el is None:
        raise ParseError("no <graph> element")

    ids: list[int | str] = []
    index: dict[str, int] = {}
    xs: dict[int, float] = {}
    ys: dict[int, float] = {}
    edges = []
    for el in graph_el:
        tag = _local(el.tag)
        if tag == "node":
            raw = el.get("id")
            if raw is None:
                raise ParseError("node without id")
            if raw in index:
                raise ParseError(f"duplicate node id {raw}")
            idx = len(ids)
            index[raw] = idx
            try:
                ids.append(int(raw))
            except ValueError:
                ids.append(raw)
            for dat in el:
                if _local(dat.tag) != "data":
                    continue
                name = keymap.get(dat.get("key", ""), dat.get("key", ""))
                if name in ("x", "y"):
                    try:
                        val = float(dat.text or "")
                    except ValueError:
                        raise ParseError(f"node {raw}: non-numeric {name}") from None
                    (xs if name == "x" else ys)[idx] = val
        elif tag == "edge":
            s, t = el.get("source"), el.get("target")
            if s is None or t is None or s not in index or t not in index:
                raise ParseError(f"edge ({s},{t}) references unknown node")
            u, v = index[s], index[t]
            if u == v:
                raise ParseError(f"self-loop at node {s}")
            edges.append((min(u, v), max(u, v)))

    graph = Graph(len(ids), tuple(sorted(set(edges))))
    covered = [v for v in range(graph.n) if v in xs and v in ys]
    drawing = None
    if graph.n and len(covered) == graph.n:
        drawing = Drawing(tuple((xs[v], ys[v]) for v in range(graph.n)))
    elif covered:
        missing = [str(ids[v]) for v in range(graph.n) if v not in xs or v not in ys]
        raise ParseError(
            "coordinates present on some nodes only; missing: " + ", ".join(missing)
        )
    return graph, drawing, tuple(ids)


def load_auto(data: bytes) -> LoadedGraph:
    """Dispatch on content: XML means GraphML, anything else is GML."""
    head = data.lstrip()[:1]
    if head == b"<":
        graph, drawing, ids = read_graphml(data)
        return LoadedGraph(graph, drawing, ids)
    graph, drawing, ids = read_gml(data)
    return LoadedGraph(graph, drawing, ids)
