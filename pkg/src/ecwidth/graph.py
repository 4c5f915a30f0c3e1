"""Undirected simple graphs, rooted spanning forests and boundaries.

Vertices are dense 0-based integers.  Edges carry a stable id equal to
their position in the input edge list; all higher layers (fundamental
cycles, boundaries, DP records) refer to edges by that id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs, trees or arguments."""


class DisconnectedGraphError(GraphError):
    """Raised by operations that require a connected input."""


def normalize_edge(u: int, w: int) -> tuple[int, int]:
    return (u, w) if u < w else (w, u)


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ("n", "edges", "_edge_ids", "adj", "_components")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self.n = n
        norm: list[tuple[int, int]] = []
        ids: dict[tuple[int, int], int] = {}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise GraphError(f"edge endpoint out of range: ({u}, {w})")
            if u == w:
                raise GraphError(f"self-loop at vertex {u}")
            e = normalize_edge(u, w)
            if e in ids:
                raise GraphError(f"duplicate edge {e}")
            ids[e] = len(norm)
            norm.append(e)
            adj[u].append(w)
            adj[w].append(u)
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self._edge_ids = ids
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._components: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, w: int) -> int:
        try:
            return self._edge_ids[normalize_edge(u, w)]
        except KeyError:
            raise GraphError(f"no edge ({u}, {w})") from None

    def has_edge(self, u: int, w: int) -> bool:
        return normalize_edge(u, w) in self._edge_ids

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def incident_edge_ids(self, v: int) -> list[int]:
        return [self._edge_ids[normalize_edge(v, w)] for w in self.adj[v]]

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted vertex tuples, cached."""
        if self._components is None:
            seen = [False] * self.n
            comps = []
            for s in range(self.n):
                if seen[s]:
                    continue
                seen[s] = True
                stack = [s]
                comp = [s]
                while stack:
                    x = stack.pop()
                    for y in self.adj[x]:
                        if not seen[y]:
                            seen[y] = True
                            comp.append(y)
                            stack.append(y)
                comps.append(tuple(sorted(comp)))
            self._components = tuple(comps)
        return self._components

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def remove_edge(self, u: int, w: int) -> "Graph":
        """New graph with one edge deleted (edge ids are re-assigned)."""
        e = normalize_edge(u, w)
        if e not in self._edge_ids:
            raise GraphError(f"no edge ({u}, {w})")
        return Graph(self.n, [f for f in self.edges if f != e])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and set(self.edges) == set(other.edges)
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def feedback_edge_number(g: Graph) -> int:
    """m - n + #components: edges outside any maximal spanning forest."""
    return g.m - g.n + len(g.components())


class RootedSpanningTree:
    """Maximal spanning forest of a host graph, one root per component.

    ``parent[v]`` is ``None`` exactly for the roots; every tree edge
    ``{v, parent[v]}`` is an edge of the host graph.
    """

    __slots__ = ("graph", "parent", "roots", "children", "depth", "_postorder")

    def __init__(self, graph: Graph, parent: Sequence[Optional[int]],
                 roots: Iterable[int]):
        n = graph.n
        if len(parent) != n:
            raise GraphError("parent mapping must cover every vertex")
        self.graph = graph
        self.parent: tuple[Optional[int], ...] = tuple(parent)
        self.roots: tuple[int, ...] = tuple(sorted(roots))
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(self.parent):
            if p is None:
                continue
            if not graph.has_edge(v, p):
                raise GraphError(f"tree edge ({v}, {p}) is not a host edge")
            children[p].append(v)
        for r in self.roots:
            if self.parent[r] is not None:
                raise GraphError(f"root {r} has a parent")
        self.children: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(c)) for c in children)
        depth = [-1] * n
        order = []
        for r in self.roots:
            depth[r] = 0
            stack = [r]
            while stack:
                x = stack.pop()
                order.append(x)
                for c in self.children[x]:
                    if depth[c] != -1:
                        raise GraphError("parent mapping contains a cycle")
                    depth[c] = depth[x] + 1
                    stack.append(c)
        if len(order) != n or -1 in depth:
            raise GraphError("parent mapping does not reach every vertex")
        # maximality: exactly one root per host component
        if len(self.roots) != len(graph.components()):
            raise GraphError("forest is not maximal (wrong number of roots)")
        self.depth: tuple[int, ...] = tuple(depth)
        self._postorder: Optional[tuple[int, ...]] = None

    def tree_edge_ids(self) -> frozenset[int]:
        g = self.graph
        return frozenset(
            g.edge_id(v, p) for v, p in enumerate(self.parent) if p is not None)

    def non_tree_edge_ids(self) -> list[int]:
        te = self.tree_edge_ids()
        return [i for i in range(self.graph.m) if i not in te]

    def postorder(self) -> tuple[int, ...]:
        """Children before parents; each component's root last."""
        if self._postorder is None:
            out: list[int] = []
            for r in self.roots:
                stack: list[tuple[int, bool]] = [(r, False)]
                while stack:
                    v, done = stack.pop()
                    if done:
                        out.append(v)
                    else:
                        stack.append((v, True))
                        for c in reversed(self.children[v]):
                            stack.append((c, False))
            self._postorder = tuple(out)
        return self._postorder

    def path(self, u: int, w: int) -> list[int]:
        """Vertices of the unique forest path from u to w (inclusive)."""
        pu, pw = [u], [w]
        a, b = u, w
        while self.depth[a] > self.depth[b]:
            a = self.parent[a]
            pu.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
            pw.append(b)
        while a != b:
            pa, pb = self.parent[a], self.parent[b]
            if pa is None or pb is None:
                raise GraphError(f"vertices {u} and {w} are in different components")
            a, b = pa, pb
            pu.append(a)
            pw.append(b)
        return pu + list(reversed(pw))[1:]

    def __repr__(self):
        return f"RootedSpanningTree(roots={self.roots})"


def maximal_spanning_forest(g: Graph, root_hint: Optional[int] = None) -> RootedSpanningTree:
    """Depth-first spanning forest; deterministic for a fixed input.

    The component containing ``root_hint`` is rooted there; every other
    component is rooted at its smallest vertex.
    """
    if root_hint is not None and not (0 <= root_hint < g.n):
        raise GraphError(f"root hint {root_hint} out of range")
    parent: list[Optional[int]] = [None] * g.n
    seen = [False] * g.n
    roots = []

    def dfs(r: int) -> None:
        seen[r] = True
        stack = [r]
        while stack:
            x = stack.pop()
            for y in reversed(g.adj[x]):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    stack.append(y)

    if root_hint is not None:
        roots.append(root_hint)
        dfs(root_hint)
    for s in range(g.n):
        if not seen[s]:
            roots.append(s)
            dfs(s)
    return RootedSpanningTree(g, parent, roots)


def fundamental_cycle_path(g: Graph, t: RootedSpanningTree, e: tuple[int, int]) -> list[int]:
    """Tree path closing the fundamental cycle of non-tree edge ``e``."""
    u, w = normalize_edge(*e)
    eid = g.edge_id(u, w)
    if eid in t.tree_edge_ids():
        raise GraphError(f"({u}, {w}) is a tree edge")
    return t.path(u, w)


def local_feedback_edges(g: Graph, t: RootedSpanningTree, v: int) -> set[tuple[int, int]]:
    """Non-tree edges whose fundamental-cycle path passes through ``v``."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    out = set()
    for eid in t.non_tree_edge_ids():
        u, w = g.edges[eid]
        if v in t.path(u, w):
            out.add((u, w))
    return out


def tree_loads(g: Graph, t: RootedSpanningTree) -> list[int]:
    """Per-vertex count of fundamental-cycle paths passing through it."""
    loads = [0] * g.n
    for eid in t.non_tree_edge_ids():
        u, w = g.edges[eid]
        for x in t.path(u, w):
            loads[x] += 1
    return loads


def ecw_of_tree(g: Graph, t: RootedSpanningTree) -> int:
    """1 + max vertex load; 1 for forests."""
    if t.graph is not g and t.graph != g:
        raise GraphError("tree does not span the given graph")
    if g.n == 0:
        return 1
    return 1 + max(tree_loads(g, t))


@dataclass(frozen=True)
class BoundaryView:
    """Edges with precisely one endpoint among the descendants of a node."""

    node: int
    boundary_edges: frozenset[int]
    inside_vertices: frozenset[int]
    outside_vertices: frozenset[int]


def descendants(t: RootedSpanningTree, v: int) -> set[int]:
    """Subtree vertex set of v, v included."""
    out = set()
    stack = [v]
    while stack:
        x = stack.pop()
        out.add(x)
        stack.extend(t.children[x])
    return out


def boundary(g: Graph, t: RootedSpanningTree, v: int) -> BoundaryView:
    sub = descendants(t, v)
    eids = []
    inside = set()
    outside = set()
    for i, (a, b) in enumerate(g.edges):
        ina, inb = a in sub, b in sub
        if ina != inb:
            eids.append(i)
            if ina:
                inside.add(a)
                outside.add(b)
            else:
                inside.add(b)
                outside.add(a)
    return BoundaryView(v, frozenset(eids), frozenset(inside), frozenset(outside))
