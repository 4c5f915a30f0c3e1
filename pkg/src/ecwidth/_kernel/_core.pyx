# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled spanning-tree search kernels; contract mirrors ``_pure``."""

from libc.stdlib cimport malloc, free

IMPL = "cython"

DEF MAXV = 64
DEF MAXE = 256


cdef struct SearchState:
    int n, m, need
    int[MAXE][2] edge         # endpoints
    int[MAXV][MAXV] adj       # forest adjacency lists
    int[MAXV] deg
    int[MAXV] loads
    int[MAXV] comp
    int[MAXE] pending         # edge indices awaiting path resolution
    int n_pending
    # best solution
    long long best_width
    int[MAXV] best_parent
    long long trees
    long long nodes
    long long budget
    int exact


cdef int find(SearchState* st, int v) noexcept:
    while st.comp[v] != v:
        st.comp[v] = st.comp[st.comp[v]]
        v = st.comp[v]
    return v


cdef int forest_path(SearchState* st, int u, int w, int* path) noexcept:
    # BFS in the current forest; returns path length (vertex count)
    cdef int[MAXV] prev
    cdef int[MAXV] queue
    cdef int qh = 0, qt = 0, x, i, y, plen
    for i in range(st.n):
        prev[i] = -2
    prev[u] = -1
    queue[qt] = u
    qt += 1
    while qh < qt:
        x = queue[qh]
        qh += 1
        if x == w:
            break
        for i in range(st.deg[x]):
            y = st.adj[x][i]
            if prev[y] == -2:
                prev[y] = x
                queue[qt] = y
                qt += 1
    plen = 0
    x = w
    while x != -1:
        path[plen] = x
        plen += 1
        x = prev[x]
    return plen


cdef int bump_path(SearchState* st, int u, int w, int delta) noexcept:
    cdef int[MAXV] path
    cdef int plen = forest_path(st, u, w, path)
    cdef int i, best = 0
    for i in range(plen):
        st.loads[path[i]] += delta
        if st.loads[path[i]] > best:
            best = st.loads[path[i]]
    return best


cdef void record_tree(SearchState* st) noexcept:
    # parent array of the current forest, rooted at 0
    cdef int[MAXV] stack
    cdef int[MAXV] seen
    cdef int top = 0, x, i, y
    for i in range(st.n):
        seen[i] = 0
        st.best_parent[i] = -1
    seen[0] = 1
    stack[top] = 0
    top += 1
    while top:
        top -= 1
        x = stack[top]
        for i in range(st.deg[x]):
            y = st.adj[x][i]
            if not seen[y]:
                seen[y] = 1
                st.best_parent[y] = x
                stack[top] = y
                top += 1


cdef bint remaining_connects(SearchState* st, int idx) noexcept:
    cdef int[MAXV] lab
    cdef int i, a, b, ra, rb
    for i in range(st.n):
        lab[i] = find(st, i)
    # flatten labels through a second union pass over undecided edges
    for i in range(idx, st.m):
        a = lab_find(lab, st.edge[i][0])
        b = lab_find(lab, st.edge[i][1])
        if a != b:
            lab[a] = b
    ra = lab_find(lab, 0)
    for i in range(1, st.n):
        if lab_find(lab, i) != ra:
            return False
    return True


cdef int lab_find(int* lab, int v) noexcept:
    while lab[v] != v:
        lab[v] = lab[lab[v]]
        v = lab[v]
    return v


cdef void search(SearchState* st, int idx, int chosen, int max_load,
                 bint count_trees) noexcept:
    cdef int i, j, a, b, ra, rb, new_max, width, n_resolved
    cdef int[MAXE] resolved
    cdef int[MAXE] saved_pending
    cdef int[MAXV] saved_comp
    cdef int n_still, old_pending
    st.nodes += 1
    if st.budget > 0 and st.nodes > st.budget:
        st.exact = 0
        return
    if not count_trees and 1 + max_load >= st.best_width:
        return
    if chosen == st.need:
        width = max_load
        n_resolved = 0
        for i in range(st.n_pending):
            j = st.pending[i]
            new_max = bump_path(st, st.edge[j][0], st.edge[j][1], 1)
            if new_max > width:
                width = new_max
            resolved[n_resolved] = j
            n_resolved += 1
        for i in range(idx, st.m):
            new_max = bump_path(st, st.edge[i][0], st.edge[i][1], 1)
            if new_max > width:
                width = new_max
            resolved[n_resolved] = i
            n_resolved += 1
        width += 1
        st.trees += 1
        if width < st.best_width:
            st.best_width = width
            record_tree(st)
        for i in range(n_resolved):
            j = resolved[i]
            bump_path(st, st.edge[j][0], st.edge[j][1], -1)
        return
    if idx == st.m or st.m - idx < st.need - chosen:
        return
    a = st.edge[idx][0]
    b = st.edge[idx][1]
    ra = find(st, a)
    rb = find(st, b)
    if ra != rb:
        # include: connect the components, resolve pending edges that close
        st.adj[a][st.deg[a]] = b
        st.deg[a] += 1
        st.adj[b][st.deg[b]] = a
        st.deg[b] += 1
        for i in range(st.n):
            saved_comp[i] = st.comp[i]
        st.comp[ra] = rb
        old_pending = st.n_pending
        for i in range(old_pending):
            saved_pending[i] = st.pending[i]
        new_max = max_load
        n_resolved = 0
        n_still = 0
        for i in range(old_pending):
            j = saved_pending[i]
            if find(st, st.edge[j][0]) == find(st, st.edge[j][1]):
                width = bump_path(st, st.edge[j][0], st.edge[j][1], 1)
                if width > new_max:
                    new_max = width
                resolved[n_resolved] = j
                n_resolved += 1
            else:
                st.pending[n_still] = j
                n_still += 1
        st.n_pending = n_still
        search(st, idx + 1, chosen + 1, new_max, count_trees)
        for i in range(old_pending):
            st.pending[i] = saved_pending[i]
        st.n_pending = old_pending
        for i in range(n_resolved):
            bump_path(st, st.edge[resolved[i]][0], st.edge[resolved[i]][1], -1)
        for i in range(st.n):
            st.comp[i] = saved_comp[i]
        st.deg[a] -= 1
        st.deg[b] -= 1
        if st.exact == 0 and st.budget > 0:
            return
        # exclude: keep the edge pending if the rest can still connect
        if remaining_connects(st, idx + 1):
            st.pending[st.n_pending] = idx
            st.n_pending += 1
            search(st, idx + 1, chosen, max_load, count_trees)
            st.n_pending -= 1
    else:
        # endpoints already connected: the edge is forced non-tree
        new_max = bump_path(st, a, b, 1)
        if new_max < max_load:
            new_max = max_load
        search(st, idx + 1, chosen, new_max, count_trees)
        bump_path(st, a, b, -1)


cdef bint init_state(SearchState* st, int n, edges) except False:
    cdef int i
    if n > MAXV or len(edges) > MAXE:
        raise ValueError("kernel limits exceeded (64 vertices / 256 edges)")
    st.n = n
    st.m = len(edges)
    st.need = n - 1
    for i, (a, b) in enumerate(edges):
        st.edge[i][0] = a
        st.edge[i][1] = b
    for i in range(n):
        st.deg[i] = 0
        st.loads[i] = 0
        st.comp[i] = i
    st.n_pending = 0
    st.trees = 0
    st.nodes = 0
    st.exact = 1
    return True


def width_of_tree(int n, edges, parent):
    return 1 + max(loads_of_tree(n, edges, parent)) if n else 1


def loads_of_tree(int n, edges, parent):
    cdef int i, u, w, x, y
    depth = [0] * n
    par = list(parent)
    order = []
    children = [[] for _ in range(n)]
    roots = []
    for i in range(n):
        if par[i] == -1:
            roots.append(i)
        else:
            children[par[i]].append(i)
    stack = list(roots)
    while stack:
        x = stack.pop()
        order.append(x)
        for y in children[x]:
            depth[y] = depth[x] + 1
            stack.append(y)
    in_tree = set()
    for i in range(n):
        if par[i] != -1:
            in_tree.add((i, par[i]) if i < par[i] else (par[i], i))
    loads = [0] * n
    for (u, w) in edges:
        if (u, w) in in_tree:
            continue
        a, b = u, w
        while depth[a] > depth[b]:
            loads[a] += 1
            a = par[a]
        while depth[b] > depth[a]:
            loads[b] += 1
            b = par[b]
        while a != b:
            loads[a] += 1
            loads[b] += 1
            a = par[a]
            b = par[b]
        loads[a] += 1
    return loads


def enumerate_spanning_trees(int n, edges):
    cdef SearchState* st
    if n <= 1:
        return 1, [-1] * n, 1
    st = <SearchState*> malloc(sizeof(SearchState))
    if st == NULL:
        raise MemoryError
    try:
        init_state(st, n, edges)
        st.best_width = <long long> n * st.m + 2
        st.budget = 0
        search(st, 0, 0, 0, True)
        parent = [st.best_parent[i] for i in range(n)]
        return int(st.best_width), parent, int(st.trees)
    finally:
        free(st)


def branch_and_bound(int n, edges, order, long long incumbent_width,
                     incumbent_parent, long long node_budget):
    cdef SearchState* st
    cdef int i
    if n <= 1:
        return 1, [-1] * n, True, 0
    oedges = [edges[i] for i in order]
    st = <SearchState*> malloc(sizeof(SearchState))
    if st == NULL:
        raise MemoryError
    try:
        init_state(st, n, oedges)
        st.best_width = incumbent_width
        for i in range(n):
            st.best_parent[i] = incumbent_parent[i]
        st.budget = node_budget if node_budget > 0 else 0
        search(st, 0, 0, 0, False)
        parent = [st.best_parent[i] for i in range(n)]
        return int(st.best_width), parent, bool(st.exact), int(st.nodes)
    finally:
        free(st)
