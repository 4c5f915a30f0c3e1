import pytest

from ecwidth.fixtures import (
    glued_binary_trees,
    ladder,
    random_csp,
    random_edp,
    random_graph,
    random_lists,
    random_mincca,
    random_spanning_tree,
    random_srti,
)
from ecwidth.graph import GraphError, ecw_of_tree, feedback_edge_number


def test_ladder_9_matches_figure():
    g, t = ladder(9)
    assert g.n == 18 and g.m == 25
    assert ecw_of_tree(g, t) == 3


def test_ladder_2_is_c4():
    g, t = ladder(2)
    assert g.n == 4 and g.m == 4
    assert ecw_of_tree(g, t) == 2


def test_ladder_4():
    g, t = ladder(4)
    assert ecw_of_tree(g, t) == 3


def test_ladder_degree_and_fen():
    for k in (2, 5, 9):
        g, _ = ladder(k)
        assert max(g.degree(v) for v in range(g.n)) <= 3
        assert feedback_edge_number(g) == k - 1
    with pytest.raises(GraphError):
        ladder(1)


def test_glued_binary_trees_shape():
    g1 = glued_binary_trees(1)
    assert g1.n == 4 and g1.m == 4  # a 4-cycle
    assert all(g1.degree(v) == 2 for v in range(4))
    for m in (1, 2, 3):
        g = glued_binary_trees(m)
        assert g.n == 2 * (2 ** (m + 1) - 1) - 2 ** m
        assert max(g.degree(v) for v in range(g.n)) <= 3
        assert g.is_connected()
    with pytest.raises(GraphError):
        glued_binary_trees(0)


def test_random_graph_extremes():
    k5 = random_graph(5, 10, seed=1)
    assert k5.m == 10
    empty = random_graph(4, 0, seed=1)
    assert empty.m == 0
    with pytest.raises(GraphError):
        random_graph(4, 7, seed=1)


def test_random_graph_golden_seed42():
    g = random_graph(8, 10, seed=42)
    assert g.edges == ((0, 1), (0, 4), (0, 5), (1, 2), (1, 3), (2, 7),
                       (3, 6), (4, 5), (4, 6), (5, 7))


def test_generators_deterministic():
    assert random_graph(8, 11, seed=3) == random_graph(8, 11, seed=3)
    assert random_edp(6, 7, 2, seed=4) == random_edp(6, 7, 2, seed=4)
    assert random_lists(6, 7, 3, seed=4) == random_lists(6, 7, 3, seed=4)
    assert random_csp(5, 4, 2, seed=4) == random_csp(5, 4, 2, seed=4)
    assert random_srti(5, seed=4) == random_srti(5, seed=4)
    assert random_mincca(5, 7, 2, seed=4) == random_mincca(5, 7, 2, seed=4)


def test_random_spanning_tree_spans():
    g = random_graph(9, 16, seed=8)
    t = random_spanning_tree(g, seed=5)
    assert len(t.tree_edge_ids()) == g.n - len(g.components())
    t2 = random_spanning_tree(g, seed=5)
    assert t.parent == t2.parent


def test_instance_generator_validity():
    inst = random_edp(6, 8, 3, seed=0)
    assert len(inst.demands) == 3
    assert inst.graph.is_connected()
    lists = random_lists(5, 5, 3, seed=0)
    assert all(lst for lst in lists.lists)
    csp = random_csp(5, 4, 3, seed=0)
    assert all(rel for _s, rel in csp.constraints)
    srti = random_srti(5, seed=0)
    assert srti.agent_count == 5
    mincca = random_mincca(5, 8, 2, seed=0)
    assert mincca.shadow().is_connected()


def test_instance_generator_errors():
    with pytest.raises(GraphError):
        random_edp(4, 5, 7, seed=0)
    with pytest.raises(GraphError):
        random_lists(4, 4, 0, seed=0)
    with pytest.raises(GraphError):
        random_csp(0, 1, 1, seed=0)
    with pytest.raises(GraphError):
        random_srti(0, seed=0)
    with pytest.raises(GraphError):
        random_mincca(0, 0, 1, seed=0)


def test_golden_instances():
    edp = random_edp(6, 8, 2, seed=3)
    assert edp.demands == ((2, 4), (4, 5))
    lcol = random_lists(5, 6, 3, seed=9)
    assert [sorted(l) for l in lcol.lists] == [[0], [0, 1, 2], [0], [0, 2], [1, 2]]
    csp = random_csp(4, 3, 2, seed=7)
    assert [s for s, _ in csp.constraints] == [(1, 3), (2,), (0, 2)]
    srti = random_srti(5, seed=11)
    assert srti.preferences[3] == (frozenset({1, 2, 4}),)
    mincca = random_mincca(5, 7, 3, seed=2)
    assert mincca.root == 4 and mincca.color_count == 3
