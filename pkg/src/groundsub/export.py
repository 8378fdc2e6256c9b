"""Byte-deterministic graph serializers: DOT, GraphML and JSON.

All three formats list vertices and edges in lexicographic order, so
re-rendering the same graph always produces identical bytes.  Layout is the
renderer's job; the DOT output only hints that the order grows bottom-up.
"""

from __future__ import annotations

import json
from xml.sax.saxutils import escape

from .digraph import EdgeTag, LabeledDigraph

FORMATS = ("dot", "graphml", "json")

_DOT_COLORS = {EdgeTag.COVARIANT: "green", EdgeTag.CONTRAVARIANT: "red"}


def to_json(g: LabeledDigraph) -> str:
    payload = {
        "vertices": list(g.sorted_vertices),
        "edges": [
            {"from": e.src, "to": e.dst, "tag": e.tag.value} for e in g.sorted_edges
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: LabeledDigraph, name: str = "subtyping") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for v in g.sorted_vertices:
        lines.append(f"  {_dot_quote(v)};")
    for e in g.sorted_edges:
        color = _DOT_COLORS.get(e.tag)
        attrs = f" [color={color}]" if color else ""
        lines.append(f"  {_dot_quote(e.src)} -> {_dot_quote(e.dst)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(g: LabeledDigraph) -> str:
    ids = {v: f"n{i}" for i, v in enumerate(g.sorted_vertices)}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
        '  <key id="tag" for="edge" attr.name="tag" attr.type="string"/>',
        '  <graph id="G" edgedefault="directed">',
    ]
    for v in g.sorted_vertices:
        lines.append(f'    <node id="{ids[v]}"><data key="label">{escape(v)}</data></node>')
    for e in g.sorted_edges:
        lines.append(
            f'    <edge source="{ids[e.src]}" target="{ids[e.dst]}">'
            f'<data key="tag">{e.tag.value}</data></edge>'
        )
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def render(g: LabeledDigraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "graphml":
        return to_graphml(g)
    if fmt == "json":
        return to_json(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
