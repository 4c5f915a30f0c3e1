"""Pure-Python spanning-tree search kernels.

Same contract as the compiled module ``ecwidth._kernel._core``:

* ``width_of_tree(n, edges, parent)`` -> 1 + max vertex load
* ``enumerate_spanning_trees(n, edges)`` -> (best_width, best_parent, count)
* ``branch_and_bound(n, edges, order, incumbent_width, incumbent_parent,
  node_budget)`` -> (width, parent, exact, nodes_explored)

Graphs are passed as flat edge lists over vertices ``0..n-1``; trees as
parent arrays with ``-1`` marking the root.  All inputs are connected
unless stated otherwise.
"""

from __future__ import annotations

IMPL = "pure"


def _depths(n, parent):
    depth = [-1] * n
    for v in range(n):
        if depth[v] != -1:
            continue
        chain = [v]
        x = parent[v]
        while x != -1 and depth[x] == -1:
            chain.append(x)
            x = parent[x]
        base = 0 if x == -1 else depth[x] + 1
        for i, y in enumerate(reversed(chain)):
            depth[y] = base + i
    return depth


def tree_path_vertices(parent, depth, u, w):
    """Vertices of the unique tree path between u and w, inclusive."""
    left = [u]
    right = [w]
    while depth[u] > depth[w]:
        u = parent[u]
        left.append(u)
    while depth[w] > depth[u]:
        w = parent[w]
        right.append(w)
    while u != w:
        u = parent[u]
        w = parent[w]
        left.append(u)
        right.append(w)
    right.pop()
    left.extend(reversed(right))
    return left


def loads_of_tree(n, edges, parent):
    depth = _depths(n, parent)
    in_tree = set()
    for v in range(n):
        p = parent[v]
        if p != -1:
            in_tree.add((v, p) if v < p else (p, v))
    loads = [0] * n
    for u, w in edges:
        if (u, w) in in_tree:
            continue
        for x in tree_path_vertices(parent, depth, u, w):
            loads[x] += 1
    return loads


def width_of_tree(n, edges, parent):
    if n == 0:
        return 1
    return 1 + max(loads_of_tree(n, edges, parent))


def _parent_from_adj(n, tree_adj, root=0):
    parent = [-1] * n
    seen = [False] * n
    seen[root] = True
    stack = [root]
    while stack:
        x = stack.pop()
        for y in tree_adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    return parent


class _SearchState:
    """Shared incremental state for enumeration and branch and bound.

    Tree edges are added/removed in stack discipline.  When a non-tree
    decision closes a cycle its path is walked immediately and the loads
    of the path vertices are bumped; pending non-tree edges are resolved
    as soon as an inclusion connects their endpoints.
    """

    def __init__(self, n, edges):
        self.n = n
        self.edges = edges
        self.adj = [[] for _ in range(n)]
        self.loads = [0] * n
        self.comp = list(range(n))  # component label, rebuilt on change

    def find(self, v):
        c = self.comp
        while c[v] != v:
            c[v] = c[c[v]]
            v = c[v]
        return v

    def _rebuild_comp(self):
        # full rebuild from the current forest adjacency
        self.comp = list(range(self.n))
        seen = [False] * self.n
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        self.comp[y] = s
                        stack.append(y)

    def forest_path(self, u, w):
        """Path from u to w in the current forest (assumed connected)."""
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == w:
                break
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        path = [w]
        x = w
        while prev[x] is not None:
            x = prev[x]
            path.append(x)
        return path

    def bump_path(self, u, w, delta):
        best = 0
        for x in self.forest_path(u, w):
            self.loads[x] += delta
            if self.loads[x] > best:
                best = self.loads[x]
        return best


def enumerate_spanning_trees(n, edges):
    """Exact minimum width over every spanning tree of a connected graph.

    Returns ``(best_width, best_parent, tree_count)`` where the count is
    the total number of spanning trees visited (no pruning).
    """
    m = len(edges)
    if n <= 1:
        return 1, [-1] * n, 1
    st = _SearchState(n, edges)
    best = [n * m + 2, None, 0]
    need = n - 1

    def remaining_connects(idx):
        lab = {st.find(v): st.find(v) for v in range(n)}

        def f(r):
            while lab[r] != r:
                r = lab[r]
            return r

        for j in range(idx, m):
            a, b = edges[j]
            ra, rb = f(st.find(a)), f(st.find(b))
            if ra != rb:
                lab[ra] = rb
        roots = {f(st.find(v)) for v in range(n)}
        return len(roots) == 1

    def go(idx, chosen, pending, max_load):
        if chosen == need:
            added = []
            cur = max_load
            for (x, y) in pending:
                # every pending edge is now inside one component
                cur = max(cur, st.bump_path(x, y, 1))
                added.append((x, y))
            for j in range(idx, m):
                a, b = edges[j]
                cur = max(cur, st.bump_path(a, b, 1))
                added.append((a, b))
            width = 1 + cur
            best[2] += 1
            if width < best[0]:
                best[0] = width
                best[1] = _parent_from_adj(n, st.adj)
            for x, y in added:
                st.bump_path(x, y, -1)
            return
        if idx == m or m - idx < need - chosen:
            return
        a, b = edges[idx]
        same = st.find(a) == st.find(b)
        if not same:
            st.adj[a].append(b)
            st.adj[b].append(a)
            old_comp = st.comp
            st.comp = list(old_comp)
            st.comp[st.find(a)] = st.find(b)
            resolved = []
            new_max = max_load
            still = []
            for (x, y) in pending:
                if st.find(x) == st.find(y):
                    new_max = max(new_max, st.bump_path(x, y, 1))
                    resolved.append((x, y))
                else:
                    still.append((x, y))
            go(idx + 1, chosen + 1, still, new_max)
            for x, y in resolved:
                st.bump_path(x, y, -1)
            st.comp = old_comp
            st.adj[a].pop()
            st.adj[b].pop()
            # exclude: only valid if the rest can still connect
            if remaining_connects(idx + 1):
                go(idx + 1, chosen, pending + [(a, b)], max_load)
        else:
            new_max = max(max_load, st.bump_path(a, b, 1))
            go(idx + 1, chosen, pending, new_max)
            st.bump_path(a, b, -1)

    go(0, 0, [], 0)
    return best[0], best[1], best[2]


def branch_and_bound(n, edges, order, incumbent_width, incumbent_parent,
                     node_budget):
    """Exact minimum-width spanning tree by edge-decision branch and bound.

    ``order`` permutes the edge indices (decision order).  The incumbent
    seeds the upper bound; branches reaching ``1 + load >= incumbent``
    are cut.  Returns ``(width, parent, exact, nodes)`` where ``exact``
    is False iff the node budget ran out before the search space was
    exhausted.
    """
    m = len(edges)
    if n <= 1:
        return 1, [-1] * n, True, 0
    oedges = [edges[i] for i in order]
    st = _SearchState(n, oedges)
    best = [incumbent_width, list(incumbent_parent), True, 0]
    need = n - 1
    budget = node_budget if node_budget and node_budget > 0 else 0

    def remaining_connects(idx):
        lab = list(range(n))

        def f(v):
            while lab[v] != v:
                lab[v] = lab[lab[v]]
                v = lab[v]
            return v

        for v in range(n):
            lab[v] = v
        for v in range(n):
            r1, r2 = f(v), f(st.find(v))
            if r1 != r2:
                lab[r1] = r2
        for j in range(idx, m):
            a, b = oedges[j]
            ra, rb = f(a), f(b)
            if ra != rb:
                lab[ra] = rb
        root0 = f(0)
        return all(f(v) == root0 for v in range(n))

    def go(idx, chosen, pending, max_load):
        best[3] += 1
        if budget and best[3] > budget:
            best[2] = False
            return
        if 1 + max_load >= best[0]:
            return
        if chosen == need:
            cur = max_load
            added = []
            for (x, y) in pending:
                cur = max(cur, st.bump_path(x, y, 1))
                added.append((x, y))
            for j in range(idx, m):
                a, b = oedges[j]
                cur = max(cur, st.bump_path(a, b, 1))
                added.append((a, b))
            width = 1 + cur
            if width < best[0]:
                best[0] = width
                best[1] = _parent_from_adj(n, st.adj)
            for x, y in added:
                st.bump_path(x, y, -1)
            return
        if idx == m or m - idx < need - chosen:
            return
        a, b = oedges[idx]
        same = st.find(a) == st.find(b)
        if not same:
            st.adj[a].append(b)
            st.adj[b].append(a)
            old_comp = st.comp
            st.comp = list(old_comp)
            st.comp[st.find(a)] = st.find(b)
            resolved = []
            new_max = max_load
            still = []
            for (x, y) in pending:
                if st.find(x) == st.find(y):
                    new_max = max(new_max, st.bump_path(x, y, 1))
                    resolved.append((x, y))
                else:
                    still.append((x, y))
            go(idx + 1, chosen + 1, still, new_max)
            for x, y in resolved:
                st.bump_path(x, y, -1)
            st.comp = old_comp
            st.adj[a].pop()
            st.adj[b].pop()
            if best[2] and remaining_connects(idx + 1):
                go(idx + 1, chosen, pending + [(a, b)], max_load)
        else:
            new_max = max(max_load, st.bump_path(a, b, 1))
            go(idx + 1, chosen, pending, new_max)
            st.bump_path(a, b, -1)

    go(0, 0, [], 0)
    return best[0], best[1], best[2], best[3]
