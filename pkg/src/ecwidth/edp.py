"""Edge Disjoint Paths decided by DP over boundary records (S, D, R).

Each subtree is summarized by records listing, per boundary edge, its
role in a partial routing: carrying a terminal out (S, keyed by demand),
donating a transit segment (D, paired boundary edges), or serving a path
that dips out and back (R, paired boundary edges).  Merging stitches the
children's segments along shared edges and re-expresses the result over
the parent's boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dp import DPStats, SolverContext, build_context, classify_children
from .graph import DisconnectedGraphError, Graph, GraphError, RootedSpanningTree, descendants

ORACLE_MAX_N = 10
ORACLE_MAX_DEMANDS = 4


@dataclass(frozen=True)
class EDPInstance:
    graph: Graph
    demands: tuple[tuple[int, int], ...]

    @staticmethod
    def make(graph: Graph, demands) -> "EDPInstance":
        norm = []
        for a, b in demands:
            if not (0 <= a < graph.n and 0 <= b < graph.n):
                raise GraphError(f"demand endpoint out of range: ({a}, {b})")
            if a == b:
                raise GraphError(f"demand endpoints must differ: ({a}, {b})")
            norm.append((min(a, b), max(a, b)))
        if len(set(norm)) != len(norm):
            raise GraphError("duplicate demand pair")
        return EDPInstance(graph, tuple(sorted(norm)))


def oracle_edp(inst: EDPInstance) -> bool:
    """Backtracking over simple paths in the residual graph."""
    g = inst.graph
    if g.n > ORACLE_MAX_N or len(inst.demands) > ORACLE_MAX_DEMANDS:
        raise GraphError(
            f"EDP oracle refuses n={g.n}, demands={len(inst.demands)} "
            f"(guard: n <= {ORACLE_MAX_N}, demands <= {ORACLE_MAX_DEMANDS})")
    used: set[int] = set()

    def paths_from(s: int, t: int):
        # all simple s-t paths as edge-id lists, skipping used edges
        stack = [(s, [], {s})]
        while stack:
            x, eids, seen = stack.pop()
            if x == t:
                yield eids
                continue
            for y in g.adj[x]:
                if y in seen:
                    continue
                eid = g.edge_id(x, y)
                if eid in used:
                    continue
                stack.append((y, eids + [eid], seen | {y}))

    def place(i: int) -> bool:
        if i == len(inst.demands):
            return True
        s, t = inst.demands[i]
        for eids in paths_from(s, t):
            used.update(eids)
            if place(i + 1):
                return True
            used.difference_update(eids)
        return False

    return place(0)


def _partial_matchings(items: list[int]):
    """All sets of disjoint unordered pairs drawn from ``items``."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    # first unpaired
    for m in _partial_matchings(rest):
        yield m
    # first paired with each later element
    for i, other in enumerate(rest):
        pair = (min(first, other), max(first, other))
        for m in _partial_matchings(rest[:i] + rest[i + 1:]):
            yield [pair] + m


def _local_records(local_edges: list[int], local_demands: list[int]):
    """Leaf-style records of the one-vertex piece: injective S plus D."""
    out = []
    if len(local_demands) > len(local_edges):
        return out
    for assigned in itertools.permutations(local_edges, len(local_demands)):
        s_set = frozenset(zip(local_demands, assigned))
        free = [e for e in local_edges if e not in assigned]
        for pairs in _partial_matchings(free):
            out.append((s_set, frozenset(pairs), frozenset()))
    return out


def _usage_map(record) -> dict[int, tuple]:
    s_set, d_set, r_set = record
    usage: dict[int, tuple] = {}
    for d, e in s_set:
        usage[e] = ("S", d)
    for e1, e2 in d_set:
        usage[e1] = ("D", e2)
        usage[e2] = ("D", e1)
    for e1, e2 in r_set:
        usage[e1] = ("R", e2)
        usage[e2] = ("R", e1)
    return usage


class _Merger:
    """Stitches one record per piece into records over the parent boundary."""

    def __init__(self, piece_edges: list[frozenset[int]], ports: frozenset[int]):
        self.piece_edges = piece_edges
        self.ports = ports
        owners: dict[int, list[int]] = {}
        for p, edges in enumerate(piece_edges):
            for e in edges:
                owners.setdefault(e, []).append(p)
        self.owners = owners
        self.junctions = [e for e, ps in owners.items() if len(ps) == 2]

    def merge(self, records) -> tuple | None:
        usage = [_usage_map(r) for r in records]
        for e in self.junctions:
            p, q = self.owners[e]
            up, uq = usage[p].get(e), usage[q].get(e)
            if (up is None) != (uq is None):
                return None
            if up is None:
                continue
            tp, tq = up[0], uq[0]
            if tp == "S" and tq == "S":
                if up[1] != uq[1]:
                    return None
            elif "R" in (tp, tq) and "D" not in (tp, tq):
                return None
        visited: set[tuple[int, frozenset[int]]] = set()

        def walk(p: int, e: int):
            # the path leaves piece p through edge e
            while True:
                others = [q for q in self.owners[e] if q != p]
                if not others:
                    return ("port", e)
                q = others[0]
                u = usage[q][e]
                if u[0] == "S":
                    return ("S", q, e, u[1])
                if u[0] == "R":
                    return ("R", q, frozenset((e, u[1])))
                key = (q, frozenset((e, u[1])))
                if key in visited:
                    return ("cycle",)
                visited.add(key)
                p, e = q, u[1]

        s_out: set[tuple[int, int]] = set()
        r_out: set[tuple[int, int]] = set()
        tokens: dict[int, list[tuple[int, int]]] = {}
        for p, (s_set, _, _) in enumerate(records):
            for d, e in s_set:
                tokens.setdefault(d, []).append((p, e))
        for d, toks in tokens.items():
            if len(toks) == 1:
                res = walk(*toks[0])
                if res[0] != "port":
                    return None
                s_out.add((d, res[1]))
            else:
                (p1, e1), (p2, e2) = toks
                res = walk(p1, e1)
                if res[0] == "S":
                    if res[3] != d:
                        return None
                    # demand connected inside
                elif res[0] == "port":
                    res2 = walk(p2, e2)
                    if res2[0] != "port":
                        return None
                    a, b = res[1], res2[1]
                    r_out.add((min(a, b), max(a, b)))
                else:
                    return None
        for p, (_, _, r_set) in enumerate(records):
            for e1, e2 in r_set:
                res = walk(p, e1)
                if res[0] == "R":
                    if res[1] != p or res[2] != frozenset((e1, e2)):
                        return None
                elif res[0] == "port":
                    res2 = walk(p, e2)
                    if res2[0] != "port":
                        return None
                    a, b = res[1], res2[1]
                    r_out.add((min(a, b), max(a, b)))
                else:
                    return None
        d_out: set[tuple[int, int]] = set()
        for p, (_, d_set, _) in enumerate(records):
            for pair in d_set:
                key = (p, frozenset(pair))
                if key in visited:
                    continue
                visited.add(key)
                e1, e2 = pair
                res = walk(p, e1)
                res2 = walk(p, e2)
                if res[0] != "port" or res2[0] != "port":
                    return None
                a, b = res[1], res2[1]
                d_out.add((min(a, b), max(a, b)))
        return (frozenset(s_out), frozenset(d_out), frozenset(r_out))


def run_edp(inst: EDPInstance, tree: RootedSpanningTree | None = None,
            root: int | None = None) -> tuple[bool, DPStats]:
    g = inst.graph
    if not g.is_connected():
        raise DisconnectedGraphError("EDP solver requires a connected graph")
    ctx = build_context(g, tree, root)
    stats = DPStats(width=ctx.width)
    demands = [list(d) for d in inst.demands]
    tree_eid = {}
    for v, p in enumerate(ctx.tree.parent):
        if p is not None:
            tree_eid[v] = g.edge_id(v, p)
    tables: dict[int, set] = {}
    for v in ctx.postorder:
        split = classify_children(ctx, v)
        dropped_edges = set()
        for u in split.trivial:
            rec = next(iter(tables[u]))
            s_set = rec[0]
            if s_set:
                ((d, _e),) = tuple(s_set)
                sub = descendants(ctx.tree, u)
                a, b = demands[d]
                if (a in sub) == (b in sub):
                    raise AssertionError("trivial child record out of sync")
                if a in sub:
                    demands[d][0] = v
                else:
                    demands[d][1] = v
            dropped_edges.add(tree_eid[u])
            del tables[u]
        local_edges = sorted(
            e for e in g.incident_edge_ids(v) if e not in dropped_edges)
        local_demands = sorted(
            d for d, (a, b) in enumerate(demands)
            if (a == v) != (b == v))
        local = _local_records(local_edges, local_demands)
        heavy = list(split.heavy)
        merger = _Merger(
            [frozenset(local_edges)] + [ctx.boundary_edges(u) for u in heavy],
            ctx.boundary_edges(v))
        table = set()
        for combo in itertools.product(local, *(tables[u] for u in heavy)):
            rec = merger.merge(combo)
            if rec is not None:
                table.add(rec)
        for u in heavy:
            del tables[u]
        tables[v] = table
        stats.record_table(len(table))
        if not table:
            return False, stats
    final = tables[ctx.root]
    assert final == {(frozenset(), frozenset(), frozenset())}
    return True, stats


def solve_edp(inst: EDPInstance, tree: RootedSpanningTree | None = None,
              root: int | None = None) -> bool:
    """YES iff pairwise edge-disjoint paths connect every demand pair."""
    ok, _ = run_edp(inst, tree, root)
    return ok
