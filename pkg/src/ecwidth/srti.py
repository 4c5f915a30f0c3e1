"""Maximum stable matching with ties and incomplete lists (MaxSRTI).

The DP runs over a spanning tree of the acceptability graph.  Each
subtree is summarized by signatures labelling every boundary edge as
matched, safe (the inside endpoint will never participate in a blocking
pair on it) or unsafe (it might, depending on the outside endpoint);
each signature maps to the largest realizing partial matching.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dp import DPStats, build_context, classify_children
from .graph import Graph, GraphError, RootedSpanningTree, descendants

MATCHED, UNSAFE, SAFE = 0, 1, 2
ORACLE_MAX_EDGES = 16


@dataclass(frozen=True)
class SRTIInstance:
    preferences: tuple[tuple[frozenset[int], ...], ...]
    target: int

    @staticmethod
    def make(preferences, target: int) -> "SRTIInstance":
        prefs = []
        for v, groups in enumerate(preferences):
            seen: set[int] = set()
            norm = []
            for group in groups:
                fs = frozenset(int(u) for u in group)
                if v in fs:
                    raise GraphError(f"agent {v} lists itself")
                if fs & seen:
                    raise GraphError(f"agent {v} repeats an agent across ties")
                if not fs:
                    raise GraphError(f"agent {v} has an empty tie group")
                seen |= fs
                norm.append(fs)
            if any(not 0 <= u < len(preferences) for u in seen):
                raise GraphError(f"agent {v} lists an unknown agent")
            prefs.append(tuple(norm))
        if target < 0:
            raise GraphError("target must be non-negative")
        return SRTIInstance(tuple(prefs), target)

    @property
    def agent_count(self) -> int:
        return len(self.preferences)


def acceptability_graph(inst: SRTIInstance) -> Graph:
    """Edge {u, v} iff each appears in the other's preference list."""
    n = inst.agent_count
    listed = [set().union(*p) if p else set() for p in inst.preferences]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if v in listed[u] and u in listed[v]]
    return Graph(n, edges)


def _ranks(inst: SRTIInstance) -> list[dict[int, int]]:
    out = []
    for groups in inst.preferences:
        r: dict[int, int] = {}
        for i, group in enumerate(groups):
            for u in group:
                r[u] = i
        out.append(r)
    return out


def is_blocking(inst: SRTIInstance, matching, edge: tuple[int, int]) -> bool:
    """True iff both endpoints strongly prefer each other to their partner."""
    g = acceptability_graph(inst)
    v, w = edge
    if not g.has_edge(v, w):
        raise GraphError(f"({v}, {w}) is not an acceptable pair")
    partner: dict[int, int] = {}
    for a, b in matching:
        partner[a] = b
        partner[b] = a
    if partner.get(v) == w:
        raise GraphError(f"({v}, {w}) is already matched")
    rank = _ranks(inst)

    def wants(a: int, b: int) -> bool:
        cur = partner.get(a)
        if cur is None:
            return True
        return rank[a][b] < rank[a][cur]

    return wants(v, w) and wants(w, v)


def oracle_srti(inst: SRTIInstance):
    """Max stable matching size by enumerating all matchings; None if unstable."""
    g = acceptability_graph(inst)
    if g.m > ORACLE_MAX_EDGES:
        raise GraphError(
            f"SRTI oracle refuses {g.m} acceptability edges "
            f"(guard: <= {ORACLE_MAX_EDGES})")
    rank = _ranks(inst)
    best = None
    for mask in range(1 << g.m):
        eids = [i for i in range(g.m) if mask >> i & 1]
        partner: dict[int, int] = {}
        ok = True
        for i in eids:
            a, b = g.edges[i]
            if a in partner or b in partner:
                ok = False
                break
            partner[a] = b
            partner[b] = a
        if not ok:
            continue
        stable = True
        for i in range(g.m):
            if mask >> i & 1:
                continue
            a, b = g.edges[i]
            pa, pb = partner.get(a), partner.get(b)
            a_wants = pa is None or rank[a][b] < rank[a][pa]
            b_wants = pb is None or rank[b][a] < rank[b][pb]
            if a_wants and b_wants:
                stable = False
                break
        if stable and (best is None or len(eids) > best):
            best = len(eids)
    return best


def run_maxsrti(inst: SRTIInstance, tree: RootedSpanningTree | None = None,
                root: int | None = None, tables_out: dict | None = None):
    """Returns (max stable matching size or None, stats)."""
    g = acceptability_graph(inst)
    stats = DPStats()
    rank = _ranks(inst)
    total = 0
    comps = g.components()
    explicit = tree is not None or root is not None
    if explicit and len(comps) != 1:
        raise GraphError("explicit tree requires a connected acceptability graph")
    for comp in comps:
        remap = {x: i for i, x in enumerate(sorted(comp))}
        back = sorted(comp)
        in_comp = set(comp)
        sub = Graph(len(comp), [(remap[a], remap[b]) for a, b in g.edges
                                if a in in_comp])
        sub_rank = [{remap[u]: r for u, r in rank[back[i]].items()
                     if u in in_comp} for i in range(len(comp))]
        out = tables_out if tables_out is not None and len(comps) == 1 else None
        value = _solve_component(sub, sub_rank, stats,
                                 tree if explicit else None,
                                 root if explicit else None, out)
        if value is None:
            return None, stats
        total += value
    return total, stats


def _solve_component(g: Graph, rank, stats: DPStats, tree, root,
                     tables_out=None):
    ctx = build_context(g, tree, root)
    if tables_out is not None:
        tables_out["context"] = ctx
    stats.width = max(stats.width, ctx.width)
    desc = {v: descendants(ctx.tree, v) for v in range(g.n)}
    tables: dict[int, dict[frozenset, int]] = {}
    for v in ctx.postorder:
        split = classify_children(ctx, v)
        heavy = list(split.heavy)
        bnd_v = ctx.boundary_edges(v)
        out_v_edges = sorted(e for e in bnd_v
                             if v in g.edges[e])
        inherit = {}
        for e in bnd_v:
            if v in g.edges[e]:
                continue
            a, b = g.edges[e]
            for i, u in enumerate(heavy):
                if a in desc[u] or b in desc[u]:
                    inherit[e] = i
                    break
        piece_edges = [ctx.boundary_edges(u) for u in heavy]
        cross_pairs = []
        for i in range(len(heavy)):
            for j in range(i + 1, len(heavy)):
                for e in piece_edges[i] & piece_edges[j]:
                    cross_pairs.append((e, i, j))
        v_edges = []  # (edge id, piece index, inside endpoint z)
        for i, u in enumerate(heavy):
            for e in piece_edges[i]:
                a, b = g.edges[e]
                if a == v or b == v:
                    v_edges.append((e, i, b if a == v else a))
        table: dict[frozenset, int] = {}
        yv = desc[v]
        outside_end = {e: (g.edges[e][0] if g.edges[e][0] not in yv
                           else g.edges[e][1]) for e in bnd_v}

        def upd(parts, size):
            # a record whose matched edges share an outside endpoint has no
            # realizing matching; drop it (its inside is caught elsewhere)
            used = set()
            for e, state in parts:
                if state == MATCHED:
                    z = outside_end[e]
                    if z in used:
                        return
                    used.add(z)
            sig = frozenset(parts)
            cur = table.get(sig)
            if cur is None or size > cur:
                table[sig] = size

        def combos():
            for picked in itertools.product(*(tables[u].items() for u in heavy)):
                sigs = [dict(p[0]) for p in picked]
                size = sum(p[1] for p in picked)
                ok = True
                for e, i, j in cross_pairs:
                    si, sj = sigs[i][e], sigs[j][e]
                    if si == MATCHED and sj == MATCHED:
                        size -= 1
                    elif not (SAFE in (si, sj) and MATCHED not in (si, sj)):
                        ok = False
                        break
                if ok:
                    yield sigs, size

        def inherit_sig(sigs):
            return [(e, sigs[i][e]) for e, i in inherit.items()]

        # branch: v stays unmatched
        simple = 0
        feasible = True
        for u in split.trivial:
            val = tables[u].get(frozenset(((g.edge_id(u, v), SAFE),)))
            if val is None:
                feasible = False
                break
            simple += val
        if feasible:
            for sigs, size in combos():
                if any(sigs[i][e] != SAFE for e, i, _z in v_edges):
                    continue
                upd([(e, UNSAFE) for e in out_v_edges] + inherit_sig(sigs),
                    simple + size)

        # branches: v matched to w
        for w in g.adj[v]:
            e_vw = g.edge_id(v, w)
            base = 0
            case = 3
            target_piece = None
            if w in split.trivial:
                case = 1
                val = tables[w].get(frozenset(((e_vw, MATCHED),)))
                if val is None:
                    continue
                base = val
            elif any(w in desc[u] for u in heavy):
                case = 2
                target_piece = next(i for i, u in enumerate(heavy)
                                    if w in desc[u])
            simple = base
            feasible = True
            for u in split.trivial:
                if case == 1 and u == w:
                    continue
                e_u = g.edge_id(u, v)
                safe_val = tables[u].get(frozenset(((e_u, SAFE),)))
                if rank[v][u] < rank[v][w]:
                    val = safe_val
                else:
                    unsafe_val = tables[u].get(frozenset(((e_u, UNSAFE),)))
                    val = max((x for x in (safe_val, unsafe_val)
                               if x is not None), default=None)
                if val is None:
                    feasible = False
                    break
                simple += val
            if not feasible:
                continue
            for sigs, size in combos():
                ok = True
                for e, i, z in v_edges:
                    s = sigs[i][e]
                    if case == 2 and e == e_vw:
                        if s != MATCHED:
                            ok = False
                            break
                        continue
                    if s == MATCHED:
                        ok = False
                        break
                    if rank[v][z] < rank[v][w] and s == UNSAFE:
                        ok = False
                        break
                if not ok:
                    continue
                parts = inherit_sig(sigs)
                for e in out_v_edges:
                    if case == 3 and e == e_vw:
                        parts.append((e, MATCHED))
                    else:
                        a, b = g.edges[e]
                        c = b if a == v else a
                        parts.append(
                            (e, UNSAFE if rank[v][c] < rank[v][w] else SAFE))
                upd(parts, simple + size + (1 if case == 3 else 0))
        for u in split.trivial:
            del tables[u]
        for u in heavy:
            del tables[u]
        tables[v] = table
        if tables_out is not None:
            tables_out[v] = dict(table)
        stats.record_table(len(table))
        if not table:
            return None
    return tables[ctx.root].get(frozenset())


def solve_maxsrti(inst: SRTIInstance, tree: RootedSpanningTree | None = None,
                  root: int | None = None):
    """Max stable matching size, or None when no stable matching exists."""
    value, _ = run_maxsrti(inst, tree, root)
    return value


def decide_maxsrti(inst: SRTIInstance) -> bool:
    """YES iff some stable matching has size at least the target."""
    value = solve_maxsrti(inst)
    return value is not None and value >= inst.target
