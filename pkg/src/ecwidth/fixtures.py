"""Deterministic construction and random-instance generators.

Every generator is a pure function of its arguments; the same seed
always yields the same object, bit for bit.
"""

from __future__ import annotations

import random

from .csp import CSPInstance
from .edp import EDPInstance
from .graph import Graph, GraphError, RootedSpanningTree, maximal_spanning_forest
from .lcol import ListColoringInstance
from .mincca import MinCCAInstance
from .srti import SRTIInstance

Seed = int


def ladder(rungs: int) -> tuple[Graph, RootedSpanningTree]:
    """2 x rungs grid with its canonical witness tree.

    Vertices 0..rungs-1 form the top rail, rungs..2*rungs-1 the bottom
    rail.  The returned tree is the top rail plus all rungs, rooted at 0;
    the bottom rail supplies the feedback edges.
    """
    if rungs < 2:
        raise GraphError("ladder needs at least 2 rungs")
    k = rungs
    edges = []
    edges += [(i, i + 1) for i in range(k - 1)]            # top rail
    edges += [(k + i, k + i + 1) for i in range(k - 1)]    # bottom rail
    edges += [(i, k + i) for i in range(k)]                # rungs
    g = Graph(2 * k, edges)
    parent: list[int | None] = [None] * (2 * k)
    for i in range(1, k):
        parent[i] = i - 1
    for i in range(k):
        parent[k + i] = i
    return g, RootedSpanningTree(g, parent, [0])


def glued_binary_trees(m: int) -> Graph:
    """Two full binary trees of depth m identified leaf by leaf."""
    if m < 1:
        raise GraphError("glued binary trees need depth >= 1")
    # first tree in heap order: 0 .. 2^(m+1)-2, leaves are the last 2^m
    size = 2 ** (m + 1) - 1
    leaves = 2 ** m
    edges = [(child, (child - 1) // 2) for child in range(1, size)]
    # second tree: internal nodes are fresh, its leaves reuse the first's
    internal2 = size - leaves  # number of internal nodes of the second tree
    offset = size

    def second(i: int) -> int:
        # heap index i of the second tree -> global vertex
        if i >= internal2:
            return size - leaves + (i - internal2)  # identified leaf
        return offset + i

    for child in range(1, size):
        edges.append((second(child), second((child - 1) // 2)))
    return Graph(size + internal2, edges)


def random_graph(n: int, m: int, seed: Seed) -> Graph:
    """Uniform simple graph with exactly m edges."""
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    if m > len(pairs):
        raise GraphError(f"m={m} exceeds the {len(pairs)} possible edges")
    rng = random.Random(seed)
    return Graph(n, sorted(rng.sample(pairs, m)))


def random_connected_graph(n: int, m: int, seed: Seed) -> Graph:
    """Uniform-ish connected graph: random spanning tree plus extra edges."""
    if n >= 2 and m < n - 1:
        raise GraphError(f"connected graph on {n} vertices needs >= {n - 1} edges")
    rng = random.Random(seed)
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        a, b = verts[i], verts[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)
             if (u, w) not in edges]
    extra = m - len(edges)
    if extra > len(pairs):
        raise GraphError(f"m={m} exceeds the possible edge count")
    edges.update(rng.sample(pairs, extra))
    return Graph(n, sorted(edges))


def random_spanning_tree(g: Graph, seed: Seed,
                         root: int | None = None) -> RootedSpanningTree:
    """Uniformly shuffled Kruskal forest of the host graph."""
    rng = random.Random(seed)
    order = list(range(g.m))
    rng.shuffle(order)
    comp = list(range(g.n))

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i in order:
        u, w = g.edges[i]
        ru, rw = find(u), find(w)
        if ru != rw:
            comp[ru] = rw
            adj[u].append(w)
            adj[w].append(u)
    parent: list[int | None] = [None] * g.n
    seen = [False] * g.n
    roots = []
    starts = list(range(g.n))
    if root is not None:
        starts = [root] + [v for v in starts if v != root]
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        roots.append(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    stack.append(y)
    return RootedSpanningTree(g, parent, roots)


def random_edp(n: int, m: int, demands: int, seed: Seed) -> EDPInstance:
    """Random connected graph with distinct random terminal pairs."""
    g = random_connected_graph(n, m, seed)
    rng = random.Random(seed ^ 0x9E3779B9)
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    if demands > len(pairs):
        raise GraphError("more demands than vertex pairs")
    return EDPInstance.make(g, sorted(rng.sample(pairs, demands)))


def random_lists(n: int, m: int, colors: int, seed: Seed) -> ListColoringInstance:
    """Random connected graph with random non-empty color lists."""
    if colors < 1:
        raise GraphError("need at least one color")
    g = random_connected_graph(n, m, seed)
    rng = random.Random(seed ^ 0x51ED270)
    lists = []
    for _ in range(n):
        size = rng.randint(1, colors)
        lists.append(sorted(rng.sample(range(colors), size)))
    return ListColoringInstance.make(g, lists)


def random_csp(variables: int, constraints: int, max_arity: int,
               seed: Seed) -> CSPInstance:
    """Random scopes with uniformly sampled non-empty boolean relations."""
    if variables < 1 or max_arity < 1:
        raise GraphError("need at least one variable and arity 1")
    rng = random.Random(seed ^ 0xC5A110)
    cons = []
    for _ in range(constraints):
        arity = rng.randint(1, min(max_arity, variables))
        scope = tuple(sorted(rng.sample(range(variables), arity)))
        tuples = [t for t in _all_tuples(arity) if rng.random() < 0.55]
        if not tuples:
            tuples = [tuple(rng.randint(0, 1) for _ in range(arity))]
        cons.append((scope, tuples))
    return CSPInstance.make(variables, cons)


def _all_tuples(arity: int) -> list[tuple[int, ...]]:
    out = [()]
    for _ in range(arity):
        out = [t + (b,) for t in out for b in (0, 1)]
    return out


def random_srti(agents: int, seed: Seed, target: int | None = None,
                acceptance: float = 0.7) -> SRTIInstance:
    """Mutualized random preferences split into random tie groups."""
    if agents < 1:
        raise GraphError("need at least one agent")
    rng = random.Random(seed ^ 0x57A71)
    likes: list[set[int]] = [set() for _ in range(agents)]
    for v in range(agents):
        for u in range(agents):
            if u != v and rng.random() < acceptance:
                likes[v].add(u)
    prefs = []
    for v in range(agents):
        mutual = sorted(u for u in likes[v] if v in likes[u])
        rng.shuffle(mutual)
        groups = []
        i = 0
        while i < len(mutual):
            size = 1
            while rng.random() < 0.35:
                size += 1
            groups.append(frozenset(mutual[i:i + size]))
            i += size
        prefs.append([g for g in groups if g])
    if target is None:
        target = rng.randint(0, agents // 2)
    return SRTIInstance.make(prefs, target)


def random_mincca(n: int, arcs: int, colors: int, seed: Seed) -> MinCCAInstance:
    """Random arcs over a connected shadow, random symmetric cost matrix."""
    if n < 1 or colors < 1:
        raise GraphError("need at least one vertex and one color")
    rng = random.Random(seed ^ 0x31CCA)
    base_m = min(max(arcs, n - 1), n * (n - 1) // 2)
    base = random_connected_graph(n, base_m, seed ^ 0x31CCA) if n > 1 else Graph(1, [])
    arc_set = []
    seen = set()
    for u, w in base.edges:
        t, h = (u, w) if rng.random() < 0.5 else (w, u)
        arc_set.append((t, h, rng.randrange(colors)))
        seen.add((t, h))
    # sprinkle extra arcs (possibly antiparallel) up to the requested count
    candidates = [(t, h) for t in range(n) for h in range(n)
                  if t != h and (t, h) not in seen]
    rng.shuffle(candidates)
    for t, h in candidates[:max(0, arcs - len(arc_set))]:
        arc_set.append((t, h, rng.randrange(colors)))
    cost = [[0] * colors for _ in range(colors)]
    for i in range(colors):
        for j in range(i + 1, colors):
            cost[i][j] = cost[j][i] = rng.randint(0, 9)
    return MinCCAInstance.make(n, sorted(arc_set), colors, cost,
                               rng.randrange(n))
