"""Graph serialization: plain edge lists, DOT, and a JSON envelope.

Edge lists are one ``u v`` pair per line, 0-indexed, u < v.  Isolated
vertices do not appear in an edge list, so imports accept an explicit
vertex count for re-checks that need them preserved.
"""

from __future__ import annotations

import json

from .graph_core import Graph


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    if g.labels is not None:
        for v, label in enumerate(g.labels):
            lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_envelope(g: Graph) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "labels": None if g.labels is None else list(g.labels),
        "edges": [[u, v] for u, v in g.edges()],
    }


def from_json_envelope(payload: dict) -> Graph:
    return Graph.from_edges(payload["vertex_count"], payload["edges"],
                            labels=payload.get("labels"))


def dump_json(g: Graph) -> str:
    return json.dumps(to_json_envelope(g), indent=2) + "\n"


def read_edge_list(text: str, vertex_count=None) -> Graph:
    """Rebuild a graph from edge-list text; vertex count defaults to
    1 + the largest mentioned vertex."""
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        u, v = (int(x) for x in line.split())
        edges.append((u, v))
        top = max(top, u, v)
    if vertex_count is None:
        vertex_count = top + 1
    return Graph.from_edges(vertex_count, edges)
