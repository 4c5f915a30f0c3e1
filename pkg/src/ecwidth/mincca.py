"""Minimum changeover cost arborescence via boundary routing records.

The DP runs over a spanning tree of the undirected shadow of the arc
set.  A record fixes, for every boundary-inside vertex, the color of its
first outgoing arc (what an arriving arc pays a changeover against) and
the arc through which its route finally leaves the subtree (or that it
reaches the root inside).  Costs are charged per arc at the merge where
the arc's head joins the processed region.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dp import DPStats, build_context, classify_children
from .graph import Graph, GraphError, RootedSpanningTree, descendants, normalize_edge

ORACLE_MAX_CHOICES = 10 ** 6


@dataclass(frozen=True)
class MinCCAInstance:
    vertex_count: int
    arcs: tuple[tuple[int, int, int], ...]  # (tail, head, color)
    color_count: int
    cost: tuple[tuple[int, ...], ...]
    root: int

    @staticmethod
    def make(vertex_count, arcs, color_count, cost, root) -> "MinCCAInstance":
        if not 0 <= root < vertex_count:
            raise GraphError(f"root {root} out of range")
        seen = set()
        norm = []
        for t, h, c in arcs:
            if not (0 <= t < vertex_count and 0 <= h < vertex_count) or t == h:
                raise GraphError(f"bad arc ({t}, {h})")
            if not 0 <= c < color_count:
                raise GraphError(f"arc color {c} out of range")
            if (t, h) in seen:
                raise GraphError(f"duplicate arc ({t}, {h})")
            seen.add((t, h))
            norm.append((t, h, c))
        cost = tuple(tuple(int(x) for x in row) for row in cost)
        if len(cost) != color_count or any(len(r) != color_count for r in cost):
            raise GraphError("cost matrix must be colors x colors")
        for i in range(color_count):
            if cost[i][i] != 0:
                raise GraphError("changeover cost must be zero on the diagonal")
            for j in range(color_count):
                if cost[i][j] != cost[j][i]:
                    raise GraphError("changeover cost must be symmetric")
                if cost[i][j] < 0:
                    raise GraphError("changeover cost must be non-negative")
        return MinCCAInstance(vertex_count, tuple(norm), color_count, cost, root)

    def out_arcs(self, v: int) -> list[int]:
        return [i for i, (t, _, _) in enumerate(self.arcs) if t == v]

    def shadow(self) -> Graph:
        edges = sorted({normalize_edge(t, h) for t, h, _ in self.arcs})
        return Graph(self.vertex_count, edges)


@dataclass(frozen=True)
class Arborescence:
    arc_ids: frozenset[int]


def _successor_map(inst: MinCCAInstance, arb: Arborescence) -> dict[int, int]:
    out: dict[int, int] = {}
    for i in arb.arc_ids:
        t, _h, _c = inst.arcs[i]
        if t == inst.root:
            raise GraphError("root must not have an outgoing arc")
        if t in out:
            raise GraphError(f"vertex {t} has two outgoing arcs")
        out[t] = i
    for v in range(inst.vertex_count):
        if v != inst.root and v not in out:
            raise GraphError(f"vertex {v} has no outgoing arc")
    # every vertex must reach the root without cycles
    for v in range(inst.vertex_count):
        seen = set()
        x = v
        while x != inst.root:
            if x in seen:
                raise GraphError("arc choice contains a cycle")
            seen.add(x)
            x = inst.arcs[out[x]][1]
    return out


def total_changeover_cost(inst: MinCCAInstance, arb: Arborescence) -> int:
    """Sum of cost(col(e), col(succ(e))); root-incident arcs pay nothing."""
    out = _successor_map(inst, arb)
    total = 0
    for i in arb.arc_ids:
        _t, h, c = inst.arcs[i]
        if h == inst.root:
            continue
        total += inst.cost[c][inst.arcs[out[h]][2]]
    return total


def oracle_mincca(inst: MinCCAInstance):
    """Minimum cost over all out-arc choices; None if no arborescence."""
    n = inst.vertex_count
    choices = []
    size = 1
    for v in range(n):
        if v == inst.root:
            continue
        arcs = inst.out_arcs(v)
        if not arcs:
            return None
        size *= len(arcs)
        if size > ORACLE_MAX_CHOICES:
            raise GraphError(
                f"MinCCA oracle refuses > {ORACLE_MAX_CHOICES} arc choices")
        choices.append(arcs)
    best = None
    for pick in itertools.product(*choices):
        try:
            arb = Arborescence(frozenset(pick))
            cost = total_changeover_cost(inst, arb)
        except GraphError:
            continue
        if best is None or cost < best:
            best = cost
    return best


def run_mincca(inst: MinCCAInstance, tree: RootedSpanningTree | None = None,
               root: int | None = None, tables_out: dict | None = None):
    """Returns (minimum total changeover cost or None, stats)."""
    stats = DPStats()
    n = inst.vertex_count
    if n == 1:
        return 0, stats
    g = inst.shadow()
    if not g.is_connected():
        return None, stats
    if root is None and tree is None:
        root = inst.root
    ctx = build_context(g, tree, root)
    if tables_out is not None:
        tables_out["context"] = ctx
    stats.width = ctx.width
    r = inst.root
    desc = {v: descendants(ctx.tree, v) for v in range(n)}
    arc_color = [c for _, _, c in inst.arcs]
    arc_head = [h for _, h, _ in inst.arcs]
    cost = inst.cost

    def charge(arc_id: int, next_color) -> int:
        if next_color is None:
            return 0
        return cost[arc_color[arc_id]][next_color]

    tables: dict[int, dict[frozenset, int]] = {}
    for v in ctx.postorder:
        split = classify_children(ctx, v)
        heavy = list(split.heavy)
        inside_v = ctx.inside(v)
        yv = desc[v]
        table: dict[frozenset, int] = {}
        trivset = set(split.trivial)
        branches = [None] if v == r else [
            (i, inst.arcs[i][1]) for i in inst.out_arcs(v)]
        for branch in branches:
            if branch is None:
                branch_arc = branch_head = None
                v_entry = (None, None)
            else:
                branch_arc, branch_head = branch
                # routing into a trivial subtree only works when it hosts
                # the root, so v's record then terminates rather than exits
                v_entry = (arc_color[branch_arc],
                           None if branch_head in trivset else branch_arc)
            # fold trivial children
            cost_del = 0
            feasible = True
            for u in split.trivial:
                tab = tables[u]
                best = None
                if branch_head == u:
                    for rec, f in tab.items():
                        ((_, c, exit_arc),) = tuple(rec)
                        if exit_arc is not None:
                            continue
                        val = f + charge(branch_arc, c)
                        if best is None or val < best:
                            best = val
                else:
                    for rec, f in tab.items():
                        ((_, c, exit_arc),) = tuple(rec)
                        if exit_arc is None:
                            continue
                        val = f + charge(exit_arc, v_entry[0])
                        if best is None or val < best:
                            best = val
                if best is None:
                    feasible = False
                    break
                cost_del += best
            if not feasible:
                continue
            for picked in itertools.product(*(tables[u].items() for u in heavy)):
                entries: dict[int, tuple] = {v: v_entry}
                for rec, _f in picked:
                    for x, c, exit_arc in rec:
                        entries[x] = (c, exit_arc)
                base = cost_del + sum(f for _rec, f in picked)
                # junction charges: each arc whose head joins the merged
                # region pays once against the head's first outgoing color
                conn = 0
                ok = True
                junction_arcs = {exit_arc for _c, exit_arc in entries.values()
                                 if exit_arc is not None}
                for arc in junction_arcs:
                    h = arc_head[arc]
                    if h in yv:
                        if h not in entries:
                            ok = False  # arc into a folded trivial subtree
                            break
                        conn += charge(arc, entries[h][0])
                if not ok:
                    continue
                # resolve final destinations, rejecting cyclic combinations
                status: dict[int, tuple] = {}

                def resolve(x):
                    chain = []
                    while True:
                        if x in status:
                            res = status[x]
                            break
                        if x in chain:
                            res = ("cycle",)
                            break
                        chain.append(x)
                        c, exit_arc = entries[x]
                        if exit_arc is None:
                            res = ("root",)
                            break
                        h = arc_head[exit_arc]
                        if h not in yv:
                            res = ("out", exit_arc)
                            break
                        x = h
                    for y in chain:
                        status[y] = res
                    return res

                rec_entries = []
                for x in sorted(entries):
                    res = resolve(x)
                    if res[0] == "cycle":
                        ok = False
                        break
                    if x not in inside_v:
                        continue
                    c = entries[x][0]
                    rec_entries.append(
                        (x, c, None if res[0] == "root" else res[1]))
                if not ok:
                    continue
                rec = frozenset(rec_entries)
                val = base + conn
                cur = table.get(rec)
                if cur is None or val < cur:
                    table[rec] = val
        for u in split.trivial:
            del tables[u]
        for u in heavy:
            del tables[u]
        tables[v] = table
        if tables_out is not None:
            tables_out[v] = dict(table)
        stats.record_table(len(table))
        if not table:
            return None, stats
    final = tables[ctx.root]
    return final.get(frozenset()), stats


def solve_mincca(inst: MinCCAInstance, tree: RootedSpanningTree | None = None,
                 root: int | None = None):
    """Minimum total changeover cost, or None when no arborescence exists."""
    value, _ = run_mincca(inst, tree, root)
    return value
