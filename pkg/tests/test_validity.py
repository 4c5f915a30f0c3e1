"""Per-node record semantics spot-checked against brute force.

These tests reconstruct, for every tree node of a small instance, the
full set of partial solutions of the subtree and compare their
projections with the DP tables.
"""

import itertools
import random

from ecwidth.csp import CSPInstance, oracle_csp, solve_csp
from ecwidth.fixtures import random_lists, random_mincca, random_srti
from ecwidth.graph import descendants
from ecwidth.lcol import DELTA, record_dominates, run_list_coloring
from ecwidth.mincca import run_mincca
from ecwidth.srti import MATCHED, SAFE, UNSAFE, _ranks, run_maxsrti


def test_lcol_records_are_valid():
    rng = random.Random(0)
    for s in range(12):
        n = rng.randint(2, 6)
        m = rng.randint(n - 1, min(n * (n - 1) // 2, n + 3))
        inst = random_lists(n, m, 3, seed=15_000 + s)
        tables: dict = {}
        run_list_coloring(inst, tables_out=tables)
        ctx = tables.pop("context")
        g = inst.graph
        for v, table in tables.items():
            sub = sorted(descendants(ctx.tree, v))
            keep = ctx.inside(v)
            projections = set()
            for colors in itertools.product(*(sorted(inst.lists[u]) for u in sub)):
                col = dict(zip(sub, colors))
                if any(col[a] == col[b] for a, b in g.edges
                       if a in col and b in col):
                    continue
                projections.add(frozenset(
                    (u, c) for u, c in col.items() if u in keep))
            # every projection is dominated by some record, and every
            # record dominates some realizable projection
            for proj in projections:
                assert any(record_dominates(proj, rec) for rec in table), \
                    (s, v, proj, table)
            for rec in table:
                assert any(record_dominates(proj, rec) for proj in projections), \
                    (s, v, rec)


def _srti_partial_solutions(g, rank, inside):
    """Matchings of the subtree-plus-boundary graph with no evaluable
    blocking edge; yields (matching, partner map)."""
    edges = [e for e in range(g.m)
             if g.edges[e][0] in inside or g.edges[e][1] in inside]
    for mask in range(1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        partner: dict[int, int] = {}
        ok = True
        for e in chosen:
            a, b = g.edges[e]
            if a in partner or b in partner:
                ok = False
                break
            partner[a] = b
            partner[b] = a
        if not ok:
            continue

        def wants(x, y):
            if x in inside:
                cur = partner.get(x)
                return cur is None or rank[x][y] < rank[x][cur]
            cur = partner.get(x)
            if cur is None:
                return False  # outside endpoint not evaluable yet
            return rank[x][y] < rank[x][cur]

        blocked = False
        for e in edges:
            if e in chosen:
                continue
            a, b = g.edges[e]
            if wants(a, b) and wants(b, a):
                blocked = True
                break
        if not blocked:
            yield chosen, partner


def test_srti_record_values_realizable():
    rng = random.Random(1)
    checked = 0
    s = 0
    while checked < 10:
        s += 1
        inst = random_srti(rng.randint(2, 5), seed=16_000 + s)
        from ecwidth.srti import acceptability_graph
        g = acceptability_graph(inst)
        if not g.is_connected() or g.n < 2 or g.m > 8:
            continue
        checked += 1
        tables: dict = {}
        run_maxsrti(inst, tables_out=tables)
        ctx = tables.pop("context")
        rank = _ranks(inst)
        for v, table in tables.items():
            inside = descendants(ctx.tree, v)
            bnd = ctx.boundary_edges(v)
            best: dict = {}
            for chosen, partner in _srti_partial_solutions(g, rank, inside):
                sig = []
                for e in sorted(bnd):
                    a, b = g.edges[e]
                    if a not in inside:
                        a, b = b, a
                    if e in chosen:
                        sig.append((e, MATCHED))
                        continue
                    cur = partner.get(a)
                    if cur is not None and rank[a][cur] <= rank[a][b]:
                        sig.append((e, SAFE))
                        # safe edges can never block, whatever b does later
                        assert not (cur is None or rank[a][b] < rank[a][cur])
                    else:
                        sig.append((e, UNSAFE))
                key = frozenset(sig)
                size = len(chosen)
                if key not in best or size > best[key]:
                    best[key] = size
            assert best == table, (s, v, best, table)


def test_mincca_costs_realizable():
    rng = random.Random(2)
    checked = 0
    s = 0
    while checked < 10:
        s += 1
        inst = random_mincca(rng.randint(2, 5), rng.randint(2, 7), 2,
                             seed=17_000 + s)
        g = inst.shadow()
        if not g.is_connected():
            continue
        checked += 1
        tables: dict = {}
        run_mincca(inst, tables_out=tables)
        if "context" not in tables:
            continue  # infeasible before any table was built
        ctx = tables.pop("context")
        r = inst.root
        for v, table in tables.items():
            inside_set = descendants(ctx.tree, v)
            best: dict = {}
            movers = sorted(u for u in inside_set if u != r)
            for pick in itertools.product(*(inst.out_arcs(u) for u in movers)):
                out = dict(zip(movers, pick))
                # arcs whose head stays inside pay against the head's out-arc
                cost = 0
                for u in movers:
                    _t, h, c = inst.arcs[out[u]]
                    if h in inside_set and h != r:
                        cost += inst.cost[c][inst.arcs[out[h]][2]]
                status: dict = {}

                def resolve(x):
                    seen = []
                    cur = x
                    while True:
                        if cur in status:
                            res = status[cur]
                            break
                        if cur in seen:
                            res = ("cycle",)
                            break
                        seen.append(cur)
                        arc = out[cur]
                        h = inst.arcs[arc][1]
                        if h not in inside_set:
                            res = ("done", arc)
                            break
                        if h == r:
                            res = ("root",)
                            break
                        cur = h
                    for y in seen:
                        status[y] = res
                    return res

                if any(resolve(u)[0] == "cycle" for u in movers):
                    continue
                rec = []
                for x in sorted(ctx.inside(v)):
                    if x == r:
                        rec.append((x, None, None))
                    else:
                        res = resolve(x)
                        rec.append((x, inst.arcs[out[x]][2],
                                    res[1] if res[0] == "done" else None))
                key = frozenset(rec)
                if key not in best or cost < best[key]:
                    best[key] = cost
            assert best == table, (s, v, best, table)


def test_csp_degree_one_projection_soundness():
    rng = random.Random(3)
    for s in range(20):
        nv = rng.randint(2, 5)
        scope = tuple(sorted(rng.sample(range(nv), rng.randint(2, nv))))
        rel = [t for t in itertools.product((0, 1), repeat=len(scope))
               if rng.random() < 0.5]
        other_scope = tuple(x for x in range(nv) if x != scope[0])[:2]
        other = [t for t in itertools.product((0, 1), repeat=len(other_scope))
                 if rng.random() < 0.6]
        inst = CSPInstance.make(nv, [(scope, rel), (other_scope, other)])
        # scope[0] may be degree-1; projecting it out by hand keeps the verdict
        lonely = [x for x in range(nv)
                  if sum(x in sc for sc, _ in inst.constraints) == 1]
        assert oracle_csp(inst) == solve_csp(inst)
        if lonely:
            x = lonely[0]
            cons2 = []
            for sc, r in inst.constraints:
                if x in sc:
                    pos = sc.index(x)
                    sc2 = sc[:pos] + sc[pos + 1:]
                    r2 = {t[:pos] + t[pos + 1:] for t in r}
                    cons2.append((sc2, r2))
                else:
                    cons2.append((sc, r))
            inst2 = CSPInstance.make(nv, cons2)
            assert oracle_csp(inst2) == oracle_csp(inst)
