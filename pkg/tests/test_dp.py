import pytest

from ecwidth.dp import (
    build_context,
    canonical_record,
    classify_children,
    iter_record_products,
    reroot,
)
from ecwidth.fixtures import ladder, random_connected_graph
from ecwidth.graph import DisconnectedGraphError, Graph, maximal_spanning_forest


def test_build_context_p3():
    g = Graph(3, [(0, 1), (1, 2)])
    ctx = build_context(g, maximal_spanning_forest(g, 0), 0)
    assert ctx.postorder == (2, 1, 0)
    assert not ctx.boundary_edges(0)
    assert ctx.width == 1


def test_build_context_rejects_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        build_context(g)


def test_context_boundaries_bounded_by_width():
    g, t = ladder(4)
    ctx = build_context(g, t, 0)
    assert ctx.width == 3
    for v in range(g.n):
        assert len(ctx.boundary_edges(v)) <= 3


def test_postorder_children_first():
    g = random_connected_graph(9, 12, seed=6)
    ctx = build_context(g)
    pos = {v: i for i, v in enumerate(ctx.postorder)}
    for v in range(g.n):
        for c in ctx.tree.children[v]:
            assert pos[c] < pos[v]
    assert ctx.postorder[-1] == ctx.root


def test_classify_star_all_trivial():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    ctx = build_context(g, maximal_spanning_forest(g, 0), 0)
    split = classify_children(ctx, 0)
    assert set(split.trivial) == {1, 2, 3, 4}
    assert not split.heavy


def test_classify_cycle_child_heavy():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    ctx = build_context(g, maximal_spanning_forest(g, 0), 0)
    split = classify_children(ctx, 0)
    assert split.heavy  # the path child closes the cycle


def test_heavy_children_bounded():
    g, t = ladder(9)
    ctx = build_context(g, t, 0)
    k = ctx.width
    for v in range(g.n):
        split = classify_children(ctx, v)
        assert len(split.heavy) <= max(0, 2 * (k - 1))


def test_reroot_keeps_edges():
    g = random_connected_graph(8, 11, seed=9)
    t = maximal_spanning_forest(g)
    for r in range(g.n):
        t2 = reroot(t, r)
        assert t2.roots == (r,)
        assert t2.tree_edge_ids() == t.tree_edge_ids()


def test_canonical_record():
    assert canonical_record([(2, 1), (1, 0), (2, 1)]) == ((1, 0), (2, 1))


def test_record_products():
    tables = [[1, 2], ["a", "b", "c"]]
    combos = list(iter_record_products(tables))
    assert len(combos) == 6
    seen = []
    combos = list(iter_record_products(
        tables, abort=lambda: len(seen) >= 2 or bool(seen.append(1))))
    assert len(combos) == 2  # abort fires before the third combination
