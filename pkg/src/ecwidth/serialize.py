"""JSON instance files and result reports.

One document per instance, discriminated by ``kind``:

* ``graph``:   ``{"kind": "graph", "n": int, "edges": [[u, w], ...]}``
* ``edp``:     graph fields plus ``"demands": [[a, b], ...]``
* ``lcol``:    graph fields plus ``"lists": [[colors], ...]`` (per vertex)
* ``csp``:     ``{"kind": "csp", "n": vars, "constraints":
  [{"scope": [...], "relation": [[bits], ...]}, ...]}``
* ``srti``:    ``{"kind": "srti", "n": agents, "prefs": [[[tie], ...], ...],
  "pi": int}``
* ``mincca``:  ``{"kind": "mincca", "n": int, "arcs": [[tail, head, color],
  ...], "colors": int, "cost": [[...]], "root": int}``

Vertex labels may be arbitrary strings or integers in ``edges`` /
``demands``; they are mapped to dense ids in first-appearance order when
not already dense integers.
"""

from __future__ import annotations

import json
from typing import Any

from .csp import CSPInstance
from .edp import EDPInstance
from .graph import Graph, GraphError
from .lcol import ListColoringInstance
from .mincca import MinCCAInstance
from .srti import SRTIInstance
from .treedecomp import TreeDecomposition

FORMAT_VERSION = 1

KINDS = ("graph", "edp", "lcol", "csp", "srti", "mincca")


class ParseError(ValueError):
    pass


def _dense_vertex_map(doc: dict) -> dict[Any, int]:
    n = doc.get("n")
    labels: list[Any] = []
    seen = set()

    def visit(x):
        if x not in seen:
            seen.add(x)
            labels.append(x)

    for u, w in doc.get("edges", []):
        visit(u)
        visit(w)
    for pair in doc.get("demands", []):
        for x in pair:
            visit(x)
    if all(isinstance(x, int) for x in labels) and (
            not labels or (min(labels, default=0) >= 0
                           and max(labels, default=-1) < (n or 0))):
        return {}
    return {x: i for i, x in enumerate(sorted(labels, key=str))}


def _graph_from_doc(doc: dict) -> Graph:
    try:
        n = int(doc["n"])
        raw_edges = doc["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph payload: {exc}") from None
    mapping = _dense_vertex_map(doc)
    if mapping:
        if len(mapping) > n:
            raise ParseError("more labels than vertices")
        edges = [(mapping[u], mapping[w]) for u, w in raw_edges]
    else:
        edges = [(int(u), int(w)) for u, w in raw_edges]
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def instance_from_doc(doc: dict):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("instance file needs a 'kind' field")
    kind = doc["kind"]
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    try:
        if kind == "graph":
            return _graph_from_doc(doc)
        if kind == "edp":
            g = _graph_from_doc(doc)
            mapping = _dense_vertex_map(doc)
            demands = [(mapping.get(a, a), mapping.get(b, b))
                       for a, b in doc["demands"]]
            return EDPInstance.make(g, demands)
        if kind == "lcol":
            g = _graph_from_doc(doc)
            return ListColoringInstance.make(g, doc["lists"])
        if kind == "csp":
            cons = [(tuple(c["scope"]), [tuple(t) for t in c["relation"]])
                    for c in doc["constraints"]]
            return CSPInstance.make(int(doc["n"]), cons)
        if kind == "srti":
            prefs = [[frozenset(group) for group in agent]
                     for agent in doc["prefs"]]
            return SRTIInstance.make(prefs, int(doc["pi"]))
        if kind == "mincca":
            return MinCCAInstance.make(
                int(doc["n"]), [tuple(a) for a in doc["arcs"]],
                int(doc["colors"]), doc["cost"], int(doc["root"]))
    except (GraphError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad {kind} payload: {exc}") from None
    raise AssertionError


def instance_to_doc(obj) -> dict:
    if isinstance(obj, Graph):
        return {"kind": "graph", "n": obj.n,
                "edges": [list(e) for e in obj.edges]}
    if isinstance(obj, EDPInstance):
        doc = instance_to_doc(obj.graph)
        doc["kind"] = "edp"
        doc["demands"] = [list(d) for d in obj.demands]
        return doc
    if isinstance(obj, ListColoringInstance):
        doc = instance_to_doc(obj.graph)
        doc["kind"] = "lcol"
        doc["lists"] = [sorted(lst) for lst in obj.lists]
        return doc
    if isinstance(obj, CSPInstance):
        return {"kind": "csp", "n": obj.variable_count,
                "constraints": [{"scope": list(s),
                                 "relation": sorted(list(t) for t in r)}
                                for s, r in obj.constraints]}
    if isinstance(obj, SRTIInstance):
        return {"kind": "srti", "n": obj.agent_count,
                "prefs": [[sorted(g) for g in agent]
                          for agent in obj.preferences],
                "pi": obj.target}
    if isinstance(obj, MinCCAInstance):
        return {"kind": "mincca", "n": obj.vertex_count,
                "arcs": [list(a) for a in obj.arcs],
                "colors": obj.color_count,
                "cost": [list(r) for r in obj.cost],
                "root": obj.root}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def load_instance(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from None
    return instance_from_doc(doc)


def dump_instance(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_doc(obj), fh, indent=1)
        fh.write("\n")


def load_dimacs_graph(path: str) -> Graph:
    """DIMACS edge-list import (``p edge N M`` header, ``e u v`` lines)."""
    n = None
    edges = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if len(parts) < 4:
                    raise ParseError(f"bad problem line: {line}")
                n = int(parts[2])
            elif parts[0] == "e":
                if n is None:
                    raise ParseError("edge before problem line")
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    if n is None:
        raise ParseError("missing DIMACS problem line")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def tree_to_doc(t) -> dict:
    return {"kind": "tree",
            "parent": [-1 if p is None else p for p in t.parent],
            "edges": [[v, p] for v, p in enumerate(t.parent) if p is not None]}


def tree_from_doc(doc: dict, g: Graph):
    from .graph import RootedSpanningTree
    try:
        parent = [None if p == -1 else int(p) for p in doc["parent"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad tree payload: {exc}") from None
    roots = [v for v, p in enumerate(parent) if p is None]
    try:
        return RootedSpanningTree(g, parent, roots)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def decomposition_to_doc(td: TreeDecomposition) -> dict:
    return {"kind": "decomposition",
            "parent": [-1 if p is None else p for p in td.parent],
            "bags": [sorted(b) for b in td.bags]}


def decomposition_from_doc(doc: dict) -> TreeDecomposition:
    try:
        parent = tuple(None if p == -1 else int(p) for p in doc["parent"])
        bags = tuple(frozenset(int(v) for v in bag) for bag in doc["bags"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad decomposition payload: {exc}") from None
    return TreeDecomposition(parent, bags)
