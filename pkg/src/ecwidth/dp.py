"""Shared machinery for the spanning-tree dynamic programs.

Every solver walks a rooted spanning tree bottom-up and summarizes each
subtree by records over its boundary.  This module supplies the rooted
context (postorder, per-node boundaries, width) and the classification
of children into trivial ones (boundary = the single tree edge to the
parent, foldable before record merging) and heavy ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import (
    BoundaryView,
    DisconnectedGraphError,
    Graph,
    GraphError,
    RootedSpanningTree,
    boundary,
    ecw_of_tree,
    maximal_spanning_forest,
)


@dataclass(frozen=True)
class SolverContext:
    graph: Graph
    tree: RootedSpanningTree
    root: int
    postorder: tuple[int, ...]
    boundaries: dict[int, BoundaryView]
    width: int

    def inside(self, v: int) -> frozenset[int]:
        return self.boundaries[v].inside_vertices

    def boundary_edges(self, v: int) -> frozenset[int]:
        return self.boundaries[v].boundary_edges


@dataclass(frozen=True)
class ChildSplit:
    trivial: tuple[int, ...]
    heavy: tuple[int, ...]


def build_context(g: Graph, t: RootedSpanningTree | None = None,
                  root: int | None = None) -> SolverContext:
    """Rooted solver context over a connected graph.

    Without an explicit tree a minimum-width one is searched for (exact
    at small size, heuristic beyond); an explicit tree is re-rooted at
    ``root`` when given.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("solver requires a connected graph")
    if t is None:
        from .ecw import ecw_exact, ecw_heuristic
        if g.n <= 12 and g.m <= 26:
            t = ecw_exact(g).witness
        else:
            t = ecw_heuristic(g).witness
    if t.graph != g:
        raise GraphError("tree does not span the given graph")
    if root is None:
        root = t.roots[0]
    if t.roots != (root,):
        t = reroot(t, root)
    bnd = {v: boundary(g, t, v) for v in range(g.n)}
    return SolverContext(g, t, root, t.postorder(), bnd, ecw_of_tree(g, t))


def reroot(t: RootedSpanningTree, root: int) -> RootedSpanningTree:
    """Same tree edges, parent pointers flipped towards a new root."""
    n = t.graph.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(t.parent):
        if p is not None:
            adj[v].append(p)
            adj[p].append(v)
    parent: list[int | None] = [None] * n
    seen = [False] * n
    seen[root] = True
    stack = [root]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    roots = [v for v in range(n) if parent[v] is None]
    return RootedSpanningTree(t.graph, parent, roots)


def classify_children(ctx: SolverContext, v: int) -> ChildSplit:
    """Trivial children cross only via their tree edge; rest are heavy."""
    g = ctx.graph
    trivial = []
    heavy = []
    for u in ctx.tree.children[v]:
        tree_eid = g.edge_id(u, v)
        if ctx.boundary_edges(u) == frozenset((tree_eid,)):
            trivial.append(u)
        else:
            heavy.append(u)
    return ChildSplit(tuple(trivial), tuple(sorted(heavy)))


def canonical_record(entries) -> tuple:
    """Order-independent tuple form of a record (sorted, deduplicated)."""
    return tuple(sorted(set(entries)))


def iter_record_products(tables, abort=None):
    """All combinations of one record per table; stops when ``abort()``.

    Yields tuples; ``abort`` is polled between combinations so callers
    can cut off runaway products.
    """
    for combo in itertools.product(*tables):
        if abort is not None and abort():
            return
        yield combo


@dataclass
class DPStats:
    """Per-solve table statistics for the size-regression checks."""

    width: int = 0
    max_table: int = 0
    tables_seen: int = 0

    def record_table(self, size: int) -> None:
        self.tables_seen += 1
        if size > self.max_table:
            self.max_table = size
