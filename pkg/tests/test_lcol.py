import random

import pytest

from ecwidth.fixtures import random_lists, random_spanning_tree
from ecwidth.graph import DisconnectedGraphError, Graph, GraphError
from ecwidth.lcol import (
    DELTA,
    ListColoringInstance,
    oracle_list_coloring,
    record_dominates,
    run_list_coloring,
    solve_list_coloring,
)

TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_triangle_two_colors_no():
    inst = ListColoringInstance.make(TRIANGLE, [[1, 2]] * 3)
    assert oracle_list_coloring(inst) is False
    assert solve_list_coloring(inst) is False


def test_triangle_forced_lists_no():
    # lists {1}, {2}, {1,2}: vertex 2 is adjacent to both forced colors
    inst = ListColoringInstance.make(TRIANGLE, [[1], [2], [1, 2]])
    assert oracle_list_coloring(inst) is False
    assert solve_list_coloring(inst) is False


def test_triangle_three_colors_yes():
    inst = ListColoringInstance.make(TRIANGLE, [[0, 1, 2]] * 3)
    assert solve_list_coloring(inst) is True


def test_single_vertex_empty_list_no():
    inst = ListColoringInstance.make(Graph(1, []), [[]])
    assert solve_list_coloring(inst) is False


def test_empty_graph_yes():
    inst = ListColoringInstance.make(Graph(0, []), [])
    assert solve_list_coloring(inst) is True


def test_k4_three_colors_no():
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    inst = ListColoringInstance.make(k4, [[0, 1, 2]] * 4)
    assert oracle_list_coloring(inst) is False
    assert solve_list_coloring(inst) is False


def test_tree_nonempty_lists_yes():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    inst = ListColoringInstance.make(g, [[0], [1], [0], [1], [1]])
    assert oracle_list_coloring(inst) is True
    assert solve_list_coloring(inst) is True


def test_precoloring_extension_as_singletons():
    # precolored endpoints, middle picks around them
    g = Graph(3, [(0, 1), (1, 2)])
    inst = ListColoringInstance.make(g, [[0], [0, 1], [0]])
    assert oracle_list_coloring(inst) is True
    assert solve_list_coloring(inst) is True
    # middle squeezed from both sides
    inst2 = ListColoringInstance.make(g, [[0], [0, 1], [1]])
    assert oracle_list_coloring(inst2) is False
    assert solve_list_coloring(inst2) is False


def test_rejects_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    inst = ListColoringInstance.make(g, [[0]] * 4)
    with pytest.raises(DisconnectedGraphError):
        solve_list_coloring(inst)


def test_record_dominates():
    r_concrete = frozenset({(0, 1)})
    r_delta = frozenset({(0, DELTA)})
    r_other = frozenset({(0, 2)})
    assert record_dominates(r_concrete, r_delta)
    assert not record_dominates(r_concrete, r_other)
    assert record_dominates(r_concrete, r_concrete)
    assert not record_dominates(r_delta, r_concrete)
    with pytest.raises(GraphError):
        record_dominates(r_concrete, frozenset({(1, 1)}))


def test_matches_oracle_random():
    rng = random.Random(1)
    for s in range(80):
        n = rng.randint(1, 8)
        m = rng.randint(max(0, n - 1), min(n * (n - 1) // 2, n + 5))
        inst = random_lists(n, m, rng.randint(1, 4), seed=s)
        assert run_list_coloring(inst)[0] == oracle_list_coloring(inst), s


def test_invariant_under_root_and_tree():
    rng = random.Random(2)
    for s in range(8):
        inst = random_lists(7, 9, 3, seed=500 + s)
        base = oracle_list_coloring(inst)
        for j in range(4):
            root = rng.randrange(7)
            t = random_spanning_tree(inst.graph, seed=j + 10 * s, root=root)
            assert run_list_coloring(inst, tree=t, root=root)[0] == base


def test_delta_vertices_complete_greedily():
    # high-list vertices record the wildcard yet stay completable
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    inst = ListColoringInstance.make(
        g, [[0, 1, 2], [0, 1, 2], [0, 1, 2], [0, 1, 2]])
    assert solve_list_coloring(inst) is True
    assert oracle_list_coloring(inst) is True
