"""List Coloring decided by boundary color records with a wildcard.

A record assigns each boundary-inside vertex either a concrete list
color or the wildcard (encoded ``DELTA``), meaning the vertex keeps more
spare colors than it has remaining neighbors and can always be colored
last.  Conflicts are checked whenever two recorded vertices are
adjacent; trivial children shrink the parent's list instead of entering
the record product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dp import DPStats, build_context, classify_children
from .graph import DisconnectedGraphError, Graph, GraphError, RootedSpanningTree

DELTA = -1
ORACLE_MAX_PRODUCT = 10 ** 7


@dataclass(frozen=True)
class ListColoringInstance:
    graph: Graph
    lists: tuple[frozenset[int], ...]

    @staticmethod
    def make(graph: Graph, lists) -> "ListColoringInstance":
        if len(lists) != graph.n:
            raise GraphError("need one color list per vertex")
        out = []
        for lst in lists:
            fs = frozenset(int(c) for c in lst)
            if any(c < 0 for c in fs):
                raise GraphError("color ids must be non-negative")
            out.append(fs)
        return ListColoringInstance(graph, tuple(out))


def oracle_list_coloring(inst: ListColoringInstance) -> bool:
    """Exhaustive backtracking over the list product."""
    g = inst.graph
    product = 1
    for lst in inst.lists:
        product *= max(1, len(lst))
        if product > ORACLE_MAX_PRODUCT:
            raise GraphError(
                f"list-coloring oracle refuses product > {ORACLE_MAX_PRODUCT}")
    color: dict[int, int] = {}

    def go(v: int) -> bool:
        if v == g.n:
            return True
        for c in sorted(inst.lists[v]):
            if all(color.get(w) != c for w in g.adj[v]):
                color[v] = c
                if go(v + 1):
                    return True
                del color[v]
        return False

    return go(0)


def record_dominates(r1: frozenset, r2: frozenset) -> bool:
    """r1 <= r2: per vertex, equal concrete colors or r2 holds the wildcard."""
    m1, m2 = dict(r1), dict(r2)
    if set(m1) != set(m2):
        raise GraphError("records compare only over the same vertex set")
    for u, c in m1.items():
        if c == DELTA:
            if m2[u] != DELTA:
                return False
        elif m2[u] != DELTA and m2[u] != c:
            return False
    return True


def run_list_coloring(inst: ListColoringInstance,
                      tree: RootedSpanningTree | None = None,
                      root: int | None = None,
                      tables_out: dict | None = None) -> tuple[bool, DPStats]:
    g = inst.graph
    if g.n == 0:
        return True, DPStats(width=1)
    if not g.is_connected():
        raise DisconnectedGraphError(
            "list-coloring solver requires a connected graph")
    ctx = build_context(g, tree, root)
    if tables_out is not None:
        tables_out["context"] = ctx
    stats = DPStats(width=ctx.width)
    lists = [set(lst) for lst in inst.lists]
    live_degree = [g.degree(v) for v in range(g.n)]
    tables: dict[int, set[frozenset]] = {}
    for v in ctx.postorder:
        split = classify_children(ctx, v)
        for u in split.trivial:
            tab = tables[u]
            if len(tab) == 1:
                ((_, c),) = tuple(next(iter(tab)))
                if c != DELTA:
                    lists[v].discard(c)
            live_degree[v] -= 1
            del tables[u]
        if len(lists[v]) > live_degree[v]:
            local: list[frozenset] = [frozenset(((v, DELTA),))]
        else:
            local = [frozenset(((v, c),)) for c in sorted(lists[v])]
        keep = ctx.inside(v)
        table: set[frozenset] = set()
        heavy = list(split.heavy)
        for combo in itertools.product(local, *(tables[u] for u in heavy)):
            assigned: dict[int, int] = {}
            for rec in combo:
                assigned.update(rec)
            if _has_conflict(g, assigned):
                continue
            table.add(frozenset(
                (u, c) for u, c in assigned.items() if u in keep))
        for u in heavy:
            del tables[u]
        tables[v] = table
        if tables_out is not None:
            tables_out[v] = frozenset(table)
        stats.record_table(len(table))
        if not table:
            return False, stats
    return True, stats


def _has_conflict(g: Graph, assigned: dict[int, int]) -> bool:
    for u, c in assigned.items():
        if c == DELTA:
            continue
        for w in g.adj[u]:
            if w > u and assigned.get(w) == c:
                return True
    return False


def solve_list_coloring(inst: ListColoringInstance,
                        tree: RootedSpanningTree | None = None,
                        root: int | None = None) -> bool:
    """YES iff a proper coloring exists picking each color from its list."""
    ok, _ = run_list_coloring(inst, tree, root)
    return ok
