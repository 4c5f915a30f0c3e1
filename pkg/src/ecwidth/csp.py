"""Boolean CSP decided by assignment records over incidence-graph boundaries.

The incidence graph joins variables to the constraints whose scope they
appear in; the DP runs over a spanning tree of it.  A record assigns a
boolean to every boundary-inside variable and, for every boundary-inside
constraint, to each of its still-outside scope variables (the value the
inside of the subtree was satisfied against).  Junction checks equate
those anticipated values with the actual ones when the variable joins.

Degree-one variables are projected out of their constraint up front;
trivial children fold into the parent by restricting its domain (parent
variable) or filtering and projecting its relation (parent constraint).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dp import DPStats, build_context, classify_children
from .graph import Graph, GraphError, RootedSpanningTree, descendants

ORACLE_MAX_VARS = 24


@dataclass(frozen=True)
class CSPInstance:
    variable_count: int
    constraints: tuple[tuple[tuple[int, ...], frozenset[tuple[int, ...]]], ...]

    @staticmethod
    def make(variable_count: int, constraints) -> "CSPInstance":
        if variable_count < 0:
            raise GraphError("variable count must be non-negative")
        norm = []
        for scope, relation in constraints:
            scope = tuple(int(x) for x in scope)
            if len(set(scope)) != len(scope):
                raise GraphError(f"scope repeats a variable: {scope}")
            if any(not 0 <= x < variable_count for x in scope):
                raise GraphError(f"scope variable out of range: {scope}")
            rel = frozenset(tuple(int(b) for b in t) for t in relation)
            for t in rel:
                if len(t) != len(scope):
                    raise GraphError(
                        f"tuple arity {len(t)} != scope length {len(scope)}")
                if any(b not in (0, 1) for b in t):
                    raise GraphError("relation tuples must be boolean")
            norm.append((scope, rel))
        return CSPInstance(variable_count, tuple(norm))


def incidence_graph(inst: CSPInstance) -> tuple[Graph, dict[int, tuple[str, int]]]:
    """Bipartite variable/constraint graph plus a vertex-kind mapping."""
    nv = inst.variable_count
    side: dict[int, tuple[str, int]] = {}
    for x in range(nv):
        side[x] = ("var", x)
    edges = []
    for j, (scope, _) in enumerate(inst.constraints):
        side[nv + j] = ("con", j)
        for x in scope:
            edges.append((x, nv + j))
    return Graph(nv + len(inst.constraints), edges), side


def oracle_csp(inst: CSPInstance) -> bool:
    """Exhaustive search over all boolean assignments."""
    if inst.variable_count > ORACLE_MAX_VARS:
        raise GraphError(
            f"CSP oracle refuses {inst.variable_count} variables "
            f"(guard: <= {ORACLE_MAX_VARS})")
    cons = [(scope, rel) for scope, rel in inst.constraints]
    by_last: dict[int, list[int]] = {}
    for j, (scope, _) in enumerate(cons):
        last = max(scope) if scope else -1
        by_last.setdefault(last, []).append(j)
    for j in by_last.get(-1, ()):
        # empty-scope constraints hold iff they contain the empty tuple
        if () not in cons[j][1]:
            return False
    assign = [0] * inst.variable_count

    def check(j: int) -> bool:
        scope, rel = cons[j]
        return tuple(assign[x] for x in scope) in rel

    def go(x: int) -> bool:
        if x == inst.variable_count:
            return True
        for b in (0, 1):
            assign[x] = b
            if all(check(j) for j in by_last.get(x, ())) and go(x + 1):
                return True
        return False

    return go(0)


def _preprocess(inst: CSPInstance):
    """Project out degree-<=1 variables; returns None when unsatisfiable."""
    scopes = [list(s) for s, _ in inst.constraints]
    rels = [set(r) for _, r in inst.constraints]
    alive_con = [True] * len(scopes)
    occ: dict[int, set[int]] = {x: set() for x in range(inst.variable_count)}
    for j, s in enumerate(scopes):
        for x in s:
            occ[x].add(j)
    queue = [x for x, js in occ.items() if len(js) <= 1]
    while queue:
        x = queue.pop()
        js = occ.get(x)
        if js is None:
            continue
        del occ[x]
        if not js:
            continue
        (j,) = tuple(js)
        if not alive_con[j]:
            continue
        pos = scopes[j].index(x)
        scopes[j].pop(pos)
        rels[j] = {t[:pos] + t[pos + 1:] for t in rels[j]}
        if not rels[j]:
            return None
        if not scopes[j]:
            alive_con[j] = False
            continue
    live = [(tuple(scopes[j]), frozenset(rels[j]))
            for j in range(len(scopes)) if alive_con[j]]
    for _, rel in live:
        if not rel:
            return None
    return live


def run_csp(inst: CSPInstance, tree: RootedSpanningTree | None = None,
            root: int | None = None) -> tuple[bool, DPStats]:
    stats = DPStats()
    if tree is not None or root is not None:
        # explicit decomposition: run on the raw (connected) incidence graph
        g, _side = incidence_graph(inst)
        nv = inst.variable_count
        is_var = [x < nv for x in range(g.n)]
        scopes = {nv + j: list(s) for j, (s, _) in enumerate(inst.constraints)}
        rels = {nv + j: set(r) for j, (_, r) in enumerate(inst.constraints)}
        ok = _solve_component(g, is_var, scopes, rels, stats, tree, root)
        return ok, stats
    live = _preprocess(inst)
    if live is None:
        return False, stats
    if not live:
        return True, stats
    # dense incidence graph over the surviving variables and constraints
    vars_used = sorted({x for scope, _ in live for x in scope})
    var_node = {x: i for i, x in enumerate(vars_used)}
    nv = len(vars_used)
    scopes = {}
    rels = {}
    edges = []
    for j, (scope, rel) in enumerate(live):
        node = nv + j
        scopes[node] = [var_node[x] for x in scope]
        rels[node] = set(rel)
        for x in scope:
            edges.append((var_node[x], node))
    g = Graph(nv + len(live), edges)
    for comp in g.components():
        sub_nodes = sorted(comp)
        remap = {x: i for i, x in enumerate(sub_nodes)}
        in_comp = set(comp)
        sub_edges = [(remap[a], remap[b]) for a, b in g.edges if a in in_comp]
        sub = Graph(len(sub_nodes), sub_edges)
        sub_scopes = {}
        sub_rels = {}
        is_var = []
        for x in sub_nodes:
            if x < nv:
                is_var.append(True)
            else:
                is_var.append(False)
                sub_scopes[remap[x]] = [remap[y] for y in scopes[x]]
                sub_rels[remap[x]] = set(rels[x])
        ok = _solve_component(sub, is_var, sub_scopes, sub_rels, stats,
                              None, None)
        if not ok:
            return False, stats
    return True, stats


def _solve_component(g: Graph, is_var, scopes, rels, stats: DPStats,
                     tree, root) -> bool:
    ctx = build_context(g, tree, root)
    stats.width = max(stats.width, ctx.width)
    desc = {v: descendants(ctx.tree, v) for v in range(g.n)}
    dom: dict[int, set[int]] = {v: {0, 1} for v in range(g.n) if is_var[v]}
    tables: dict[int, set[frozenset]] = {}
    for v in ctx.postorder:
        split = classify_children(ctx, v)
        for u in split.trivial:
            tab = tables[u]
            if is_var[u]:
                feasible = {val for rec in tab for key, val in rec if key == u}
                pos = scopes[v].index(u)
                scopes[v].pop(pos)
                rels[v] = {t[:pos] + t[pos + 1:] for t in rels[v]
                           if t[pos] in feasible}
                if not rels[v]:
                    return False
            else:
                feasible = {val for rec in tab for key, val in rec
                            if key == (u, v)}
                dom[v] &= feasible
                if not dom[v]:
                    return False
            del tables[u]
        if is_var[v]:
            local = [frozenset(((v, b),)) for b in sorted(dom[v])]
        else:
            local = list(
                {frozenset(((v, x), t[i]) for i, x in enumerate(scopes[v]))
                 for t in rels[v]})
        inside = ctx.inside(v)
        yv = desc[v]
        table: set[frozenset] = set()
        heavy = list(split.heavy)
        for combo in itertools.product(local, *(tables[u] for u in heavy)):
            data: dict = {}
            for rec in combo:
                data.update(rec)
            ok = True
            out = []
            for key, val in data.items():
                if isinstance(key, tuple):
                    c, x = key
                    if x in yv:
                        if data[x] != val:
                            ok = False
                            break
                    else:
                        out.append((key, val))
                elif key in inside:
                    out.append((key, val))
            if ok:
                table.add(frozenset(out))
        for u in heavy:
            del tables[u]
        tables[v] = table
        stats.record_table(len(table))
        if not table:
            return False
    return True


def solve_csp(inst: CSPInstance, tree: RootedSpanningTree | None = None,
              root: int | None = None) -> bool:
    """YES iff some boolean assignment satisfies every constraint."""
    ok, _ = run_csp(inst, tree, root)
    return ok
