"""Computing edge-cut width: exact search, enumeration oracle, heuristic."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _kernel
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    RootedSpanningTree,
    ecw_of_tree,
    maximal_spanning_forest,
)

ORACLE_MAX_N = 10
ORACLE_MAX_M = 16


class BudgetError(GraphError):
    """Raised when an input exceeds an oracle's enumeration guard."""


@dataclass(frozen=True)
class EcwResult:
    width: int
    witness: RootedSpanningTree
    exact: bool
    nodes_explored: int


def _tree_from_parent(g: Graph, parent: list[int]) -> RootedSpanningTree:
    par = [None if p == -1 else p for p in parent]
    roots = [v for v, p in enumerate(par) if p is None]
    return RootedSpanningTree(g, par, roots)


def _parent_array(t: RootedSpanningTree) -> list[int]:
    return [-1 if p is None else p for p in t.parent]


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(
            "graph is disconnected; compute per component")


def _triangle_order(g: Graph) -> list[int]:
    """Edge indices, most triangle-covered first; ties by id."""
    adj = [set(a) for a in g.adj]
    tri = []
    for i, (u, w) in enumerate(g.edges):
        tri.append(len(adj[u] & adj[w]))
    return sorted(range(g.m), key=lambda i: (-tri[i], i))


def ecw_heuristic(g: Graph, seed: int = 0, iterations: int = 1000) -> EcwResult:
    """Local search over spanning trees by single edge swaps.

    Starts from the DFS forest; each step pulls one non-tree edge into
    the tree and evicts the best edge of the induced cycle, accepting
    non-worsening width.  Never claims exactness.  Disconnected inputs
    are allowed (swaps stay within components).
    """
    t = maximal_spanning_forest(g, 0 if g.n else None)
    parent = _parent_array(t)
    edges = list(g.edges)
    width = _kernel.width_of_tree(g.n, edges, parent)
    best_parent = list(parent)
    best_width = width
    rng = random.Random(seed)
    steps = 0
    tree_edges = {(min(v, p), max(v, p)) for v, p in enumerate(parent) if p != -1}
    non_tree = [e for e in edges if e not in tree_edges]
    for _ in range(iterations):
        if not non_tree or best_width == 1:
            break
        steps += 1
        u, w = non_tree[rng.randrange(len(non_tree))]
        cur = _tree_from_parent(g, parent)
        cycle = cur.path(u, w)
        cand_best = None
        for i in range(len(cycle) - 1):
            a, b = cycle[i], cycle[i + 1]
            new_tree = set(tree_edges)
            new_tree.discard((min(a, b), max(a, b)))
            new_tree.add((min(u, w), max(u, w)))
            new_parent = _parent_of_edge_set(g.n, new_tree)
            cand_width = _kernel.width_of_tree(g.n, edges, new_parent)
            if cand_best is None or cand_width < cand_best[0]:
                cand_best = (cand_width, new_parent, new_tree, (a, b))
        if cand_best is not None and cand_best[0] <= width:
            width, parent, tree_edges = cand_best[0], cand_best[1], cand_best[2]
            non_tree = [e for e in edges if e not in tree_edges]
            if width < best_width:
                best_width = width
                best_parent = list(parent)
    return EcwResult(best_width, _tree_from_parent(g, best_parent), False, steps)


def _parent_of_edge_set(n: int, tree_edges: set[tuple[int, int]]) -> list[int]:
    adj = [[] for _ in range(n)]
    for a, b in tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [-1] * n
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    stack.append(y)
    return parent


def ecw_enumerate_oracle(g: Graph) -> EcwResult:
    """Minimum width by visiting every spanning tree; the reference oracle."""
    _require_connected(g)
    if g.n > ORACLE_MAX_N or g.m > ORACLE_MAX_M:
        raise BudgetError(
            f"enumeration oracle refuses n={g.n}, m={g.m} "
            f"(guard: n <= {ORACLE_MAX_N}, m <= {ORACLE_MAX_M})")
    width, parent, count = _kernel.enumerate_spanning_trees(g.n, list(g.edges))
    return EcwResult(width, _tree_from_parent(g, parent), True, count)


def ecw_exact(g: Graph, node_budget: int | None = None) -> EcwResult:
    """Minimum-width spanning tree by branch and bound over edge decisions.

    The heuristic seeds the incumbent; decisions are ordered by triangle
    count so cycles close early.  With an exhausted ``node_budget`` the
    best incumbent is returned flagged inexact.
    """
    _require_connected(g)
    if g.n <= 1:
        t = maximal_spanning_forest(g, 0 if g.n else None)
        return EcwResult(1, t, True, 0)
    seed_res = ecw_heuristic(g, seed=0, iterations=60)
    order = _triangle_order(g)
    width, parent, exact, nodes = _kernel.branch_and_bound(
        g.n, list(g.edges), order, seed_res.width,
        _parent_array(seed_res.witness), node_budget or 0)
    result = EcwResult(width, _tree_from_parent(g, parent), exact, nodes)
    assert ecw_of_tree(g, result.witness) == result.width
    return result
