import random

from ecwidth.ecw import ecw_exact
from ecwidth.fixtures import glued_binary_trees, ladder, random_graph
from ecwidth.graph import Graph, ecw_of_tree, maximal_spanning_forest
from ecwidth.treedecomp import (
    TreeDecomposition,
    tree_decomposition_from_ecw,
    validate_tree_decomposition,
)


def test_tree_input_width_one():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    t = maximal_spanning_forest(g)
    td = tree_decomposition_from_ecw(g, t)
    ok, msg = validate_tree_decomposition(g, td)
    assert ok, msg
    assert td.width == 1


def test_c5_width_two():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    t = maximal_spanning_forest(g)
    td = tree_decomposition_from_ecw(g, t)
    ok, _ = validate_tree_decomposition(g, td)
    assert ok
    assert td.width <= 2


def test_ladder9_decomposition():
    g, t = ladder(9)
    td = tree_decomposition_from_ecw(g, t)
    ok, msg = validate_tree_decomposition(g, td)
    assert ok, msg
    assert td.width <= ecw_of_tree(g, t) == 3


def test_gbt2_decomposition():
    g = glued_binary_trees(2)
    t = ecw_exact(g).witness
    td = tree_decomposition_from_ecw(g, t)
    ok, _ = validate_tree_decomposition(g, td)
    assert ok
    assert td.width <= ecw_of_tree(g, t)


def test_random_suite():
    rng = random.Random(0)
    for s in range(100):
        n = rng.randint(1, 9)
        m = rng.randint(0, min(16, n * (n - 1) // 2))
        g = random_graph(n, m, seed=4200 + s)
        t = maximal_spanning_forest(g)
        td = tree_decomposition_from_ecw(g, t)
        ok, msg = validate_tree_decomposition(g, td)
        assert ok, (s, msg)
        assert td.width <= ecw_of_tree(g, t)


def test_validator_catches_uncovered_edge():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    td = TreeDecomposition((None, 0, 1),
                           (frozenset({0, 1}), frozenset({1, 2}), frozenset({2})))
    ok, msg = validate_tree_decomposition(g, td)
    assert not ok and "not covered" in msg


def test_validator_catches_missing_vertex():
    g = Graph(3, [(0, 1)])
    td = TreeDecomposition((None,), (frozenset({0, 1}),))
    ok, msg = validate_tree_decomposition(g, td)
    assert not ok and "vertex 2" in msg


def test_validator_catches_disconnected_occurrence():
    g = Graph(3, [(0, 1), (1, 2)])
    td = TreeDecomposition(
        (None, 0, 1),
        (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 1, 2})))
    # vertex 0 appears in bags 0 and 2 but not 1
    ok, msg = validate_tree_decomposition(g, td)
    assert not ok and "not connected" in msg


def test_single_bag_decomposition():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    td = TreeDecomposition((None,), (frozenset({0, 1, 2, 3}),))
    ok, _ = validate_tree_decomposition(g, td)
    assert ok
    assert td.width == 3
