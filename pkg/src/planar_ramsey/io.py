"""JSON encoding of graphs, plane graphs and colorings.

Graph files look like ``{"n": 4, "edges": [[0, 1], ...], "labels": {...},
"faces": [[...], ...], "outer": 0, "rank": {...}}`` where the last three keys
are optional.  Coloring files look like ``{"k": 2, "colors": {"0-1": 0, ...}}``
with the smaller endpoint first in each key.  Unknown keys are ignored.
"""

from __future__ import annotations

import json
from typing import Any, Dict, Union

from .graph import EdgeColoring, Graph, GraphError, PlaneGraph, edge_key

AnyGraph = Union[Graph, PlaneGraph]


def graph_to_json(obj: AnyGraph) -> Dict[str, Any]:
    g = obj.graph if isinstance(obj, PlaneGraph) else obj
    out: Dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edge_list]}
    if g.labels:
        out["labels"] = {str(v): s for v, s in sorted(g.labels.items())}
    if isinstance(obj, PlaneGraph):
        if obj.faces is not None:
            out["faces"] = [list(f) for f in obj.faces]
            out["outer"] = obj.outer
        if obj.rank is not None:
            out["rank"] = {str(v): r for v, r in sorted(obj.rank.items())}
    return out


def graph_from_json(d: Dict[str, Any]) -> AnyGraph:
    """A :class:`PlaneGraph` when faces or ranks are present, else a :class:`Graph`."""
    try:
        n = int(d["n"])
        edges = [(int(u), int(v)) for u, v in d["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    labels = {int(v): str(s) for v, s in d.get("labels", {}).items()}
    g = Graph(n, edges, labels)
    faces = d.get("faces")
    rank = d.get("rank")
    if faces is None and rank is None:
        return g
    rank_map = {int(v): int(r) for v, r in rank.items()} if rank is not None else None
    if faces is not None:
        return PlaneGraph(g, [tuple(int(x) for x in f) for f in faces], int(d.get("outer", 0)), rank_map)
    return PlaneGraph(g, None, None, rank_map)


def coloring_to_json(c: EdgeColoring) -> Dict[str, Any]:
    return {"k": c.k, "colors": {f"{u}-{v}": col for (u, v), col in sorted(c.colors.items())}}


def coloring_from_json(d: Dict[str, Any]) -> EdgeColoring:
    try:
        k = int(d["k"])
        colors = {}
        for key, col in d["colors"].items():
            a, b = key.split("-")
            colors[edge_key(int(a), int(b))] = int(col)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise GraphError(f"malformed coloring JSON: {exc}") from exc
    return EdgeColoring(k, colors)


def dumps(obj: Dict[str, Any]) -> str:
    """Canonical text form: sorted keys on one line plus a trailing newline."""
    return json.dumps(obj, sort_keys=True) + "\n"


def load(path: str) -> Dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: not valid JSON ({exc})") from exc


def load_graph(path: str) -> AnyGraph:
    return graph_from_json(load(path))


def load_coloring(path: str) -> EdgeColoring:
    return coloring_from_json(load(path))
