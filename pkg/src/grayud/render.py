"""SVG drawings plus the JSON and CSV data formats."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .embedding import NO_COLOR, ConstructionParams, Embedding
from .graph import HOLLOW, SOLID, Graph

EMBEDDING_COLORS = ("b", "g", "r", NO_COLOR)
CSV_HEADER = ("h", "theta", "status", "min_separation", "accidental_pairs")


class EmbeddingParseError(ValueError):
    """Malformed embedding document; ``location`` points at the offending part."""

    def __init__(self, message, location):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass(frozen=True)
class RenderStyle:
    size: float = 800.0
    margin: float = 40.0
    vertex_radius: float = 5.0
    stroke_width: float = 1.5
    colors: dict = field(default_factory=lambda: {
        "b": "#1f49c7", "g": "#1d8f3a", "r": "#d0262b", NO_COLOR: "#000000",
    })
    connector_color: str = "#000000"
    circles: bool = False
    circle_color: str = "#8c8c8c"

    def color(self, tag):
        try:
            return self.colors[tag]
        except KeyError:
            raise ValueError(f"style has no colour for tag {tag!r}") from None


def _fmt(x):
    return f"{x:.4f}"


def to_svg(e: Embedding, style: RenderStyle = RenderStyle()) -> str:
    """Deterministic SVG 1.1 drawing; y grows upward in data, downward on canvas."""
    for tag in set(e.colors):
        style.color(tag)
    coords = e.coords
    pad = 1.0 if style.circles else 0.0
    if e.n:
        lo = coords.min(axis=0) - pad
        hi = coords.max(axis=0) + pad
    else:
        lo, hi = np.zeros(2), np.ones(2)
    span = max(float(np.max(hi - lo)), 1e-12)
    scale = (style.size - 2 * style.margin) / span
    center = (lo + hi) / 2

    def xy(p):
        x = style.size / 2 + (p[0] - center[0]) * scale
        y = style.size / 2 - (p[1] - center[1]) * scale
        return _fmt(x), _fmt(y)

    roles = e.graph.roles or (SOLID,) * e.n
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(style.size)}" '
        f'height="{_fmt(style.size)}" viewBox="0 0 {_fmt(style.size)} {_fmt(style.size)}">',
        f'<rect x="0" y="0" width="{_fmt(style.size)}" height="{_fmt(style.size)}" fill="#ffffff"/>',
    ]
    if style.circles:
        out.append('<g id="unit-circles" fill="none">')
        for v in range(e.n):
            if roles[v] == HOLLOW:
                cx, cy = xy(coords[v])
                out.append(f'<circle class="unit-circle" cx="{cx}" cy="{cy}" r="{_fmt(scale)}" '
                           f'stroke="{style.circle_color}" stroke-width="{_fmt(style.stroke_width / 2)}"/>')
        out.append("</g>")
    out.append(f'<g id="edges" stroke-width="{_fmt(style.stroke_width)}">')
    for a, b in e.graph.sorted_edges():
        ca, cb = e.colors[a], e.colors[b]
        stroke = style.color(ca) if ca == cb else style.connector_color
        (x1, y1), (x2, y2) = xy(coords[a]), xy(coords[b])
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}"/>')
    out.append("</g>")
    out.append(f'<g id="vertices" stroke-width="{_fmt(style.stroke_width)}">')
    for v in range(e.n):
        cx, cy = xy(coords[v])
        col = style.color(e.colors[v])
        fill = col if roles[v] == SOLID else "#ffffff"
        out.append(f'<circle class="vertex {roles[v]}" id="v{v}" cx="{cx}" cy="{cy}" '
                   f'r="{_fmt(style.vertex_radius)}" fill="{fill}" stroke="{col}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _num(x):
    return format(float(x), ".17g")


def embedding_to_json(e: Embedding) -> str:
    """Canonical JSON text: sorted keys, edges sorted, coordinates to 17 digits."""
    if e.params is None:
        params = "null"
    else:
        params = '{"h": %s, "theta": %s}' % (_num(e.params.h), _num(e.params.theta))
    roles = e.graph.roles
    verts = []
    for v in range(e.n):
        role = json.dumps(roles[v] if roles else None)
        verts.append('    {"color": %s, "id": %d, "role": %s, "x": %s, "y": %s}' % (
            json.dumps(e.colors[v]), v, role, _num(e.coords[v, 0]), _num(e.coords[v, 1])))
    edges = ", ".join(f"[{a}, {b}]" for a, b in e.graph.sorted_edges())
    body = ",\n".join(verts)
    vblock = "[\n" + body + "\n  ]" if verts else "[]"
    return '{\n  "edges": [%s],\n  "params": %s,\n  "vertices": %s\n}\n' % (edges, params, vblock)


def _require(cond, message, location):
    if not cond:
        raise EmbeddingParseError(message, location)


def _is_number(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def embedding_from_json(text: str) -> Embedding:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EmbeddingParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    _require(isinstance(doc, dict), "document must be an object", "$")
    for key in ("vertices", "edges"):
        _require(key in doc, f"missing key {key!r}", "$")

    params = doc.get("params")
    if params is not None:
        _require(isinstance(params, dict) and _is_number(params.get("h")) and _is_number(params.get("theta")),
                 "params must hold numeric h and theta", "params")
        params = ConstructionParams(float(params["h"]), float(params["theta"]))

    verts = doc["vertices"]
    _require(isinstance(verts, list), "must be a list", "vertices")
    n = len(verts)
    coords = np.zeros((n, 2))
    colors = [NO_COLOR] * n
    roles = [None] * n
    seen = set()
    for k, v in enumerate(verts):
        loc = f"vertices[{k}]"
        _require(isinstance(v, dict), "must be an object", loc)
        vid = v.get("id")
        _require(isinstance(vid, int) and not isinstance(vid, bool) and 0 <= vid < n,
                 "id must be an integer in 0..n-1", f"{loc}.id")
        _require(vid not in seen, f"duplicate id {vid}", f"{loc}.id")
        seen.add(vid)
        for axis, key in enumerate("xy"):
            _require(_is_number(v.get(key)), "coordinate must be a finite number", f"{loc}.{key}")
            coords[vid, axis] = v[key]
        color = v.get("color", NO_COLOR)
        _require(color in EMBEDDING_COLORS, f"unknown colour {color!r}", f"{loc}.color")
        colors[vid] = color
        role = v.get("role")
        _require(role in (SOLID, HOLLOW, None), f"unknown role {role!r}", f"{loc}.role")
        roles[vid] = role
    if any(r is None for r in roles):
        _require(all(r is None for r in roles), "roles must be given for all vertices or none", "vertices")
        roles = None

    edges = doc["edges"]
    _require(isinstance(edges, list), "must be a list", "edges")
    pairs = []
    for k, pair in enumerate(edges):
        _require(isinstance(pair, list) and len(pair) == 2
                 and all(isinstance(x, int) and not isinstance(x, bool) for x in pair),
                 "edge must be a pair of integer ids", f"edges[{k}]")
        pairs.append(tuple(pair))
    _require(len(set(tuple(sorted(p)) for p in pairs)) == len(pairs), "duplicate edge", "edges")
    try:
        graph = Graph(n, frozenset(pairs), tuple(roles) if roles else None)
    except ValueError as exc:
        raise EmbeddingParseError(str(exc), "edges") from None
    return Embedding(coords, graph, tuple(colors), params)


def sweep_to_csv(fmap) -> str:
    """CSV text, one row per grid point in h-major order; empty map gives the header only."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    points = fmap.points if fmap is not None else ()
    for p in points:
        sep = "nan" if math.isnan(p.min_separation) else _num(p.min_separation)
        writer.writerow((repr(p.h), repr(p.theta), p.status, sep, p.accidental_pairs))
    return buf.getvalue()
