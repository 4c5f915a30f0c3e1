"""Tree decompositions derived from spanning trees of bounded width."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, RootedSpanningTree


@dataclass(frozen=True)
class TreeDecomposition:
    """Decomposition tree as a parent mapping plus one bag per node."""

    parent: tuple[Optional[int], ...]
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=1) - 1


def tree_decomposition_from_ecw(g: Graph, t: RootedSpanningTree) -> TreeDecomposition:
    """Bags over the spanning tree itself: each vertex gets itself, its
    parent, and one fixed endpoint of every non-tree edge charged to it.

    The chosen endpoint is the lexicographically smaller one; resulting
    width is at most the tree's edge-cut width.
    """
    bags = [set([v]) for v in range(g.n)]
    for v, p in enumerate(t.parent):
        if p is not None:
            bags[v].add(p)
    for eid in t.non_tree_edge_ids():
        u, w = g.edges[eid]
        chosen = min(u, w)
        for x in t.path(u, w):
            bags[x].add(chosen)
    # stitch per-component roots into one tree
    parent: list[Optional[int]] = list(t.parent)
    first_root = t.roots[0] if t.roots else None
    for r in t.roots[1:]:
        parent[r] = first_root
    return TreeDecomposition(tuple(parent), tuple(frozenset(b) for b in bags))


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> tuple[bool, str]:
    """Check the three decomposition conditions; report the first failure."""
    nodes = len(td.bags)
    if len(td.parent) != nodes:
        return False, "parent mapping and bag list disagree in length"
    # the decomposition graph must be a forest reaching every node
    roots = [i for i in range(nodes) if td.parent[i] is None]
    seen = [False] * nodes
    children: list[list[int]] = [[] for _ in range(nodes)]
    for i, p in enumerate(td.parent):
        if p is not None:
            if not (0 <= p < nodes):
                return False, f"decomposition parent {p} out of range"
            children[p].append(i)
    stack = list(roots)
    for r in roots:
        seen[r] = True
    while stack:
        x = stack.pop()
        for c in children[x]:
            if seen[c]:
                return False, "decomposition tree contains a cycle"
            seen[c] = True
            stack.append(c)
    if not all(seen):
        return False, "decomposition tree is not connected to a root"

    covered = set()
    for b in td.bags:
        covered.update(b)
    for v in range(g.n):
        if v not in covered:
            return False, f"vertex {v} not covered by any bag"
    for u, w in g.edges:
        if not any(u in b and w in b for b in td.bags):
            return False, f"edge ({u}, {w}) not covered by any bag"
    for v in range(g.n):
        occ = [i for i in range(nodes) if v in td.bags[i]]
        if not _is_connected_in_tree(td, occ):
            return False, f"occurrences of vertex {v} are not connected"
    return True, "ok"


def _is_connected_in_tree(td: TreeDecomposition, occ: list[int]) -> bool:
    if len(occ) <= 1:
        return True
    occ_set = set(occ)
    adj: dict[int, list[int]] = {i: [] for i in occ}
    for i in occ:
        p = td.parent[i]
        if p is not None and p in occ_set:
            adj[i].append(p)
            adj[p].append(i)
    seen = {occ[0]}
    stack = [occ[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(occ)
