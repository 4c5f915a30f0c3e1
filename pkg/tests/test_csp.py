import random

import pytest

from ecwidth.csp import (
    CSPInstance,
    incidence_graph,
    oracle_csp,
    run_csp,
    solve_csp,
)
from ecwidth.fixtures import random_csp, random_spanning_tree
from ecwidth.graph import GraphError


def test_instance_validation():
    with pytest.raises(GraphError):
        CSPInstance.make(2, [((0, 0), [(0, 1)])])
    with pytest.raises(GraphError):
        CSPInstance.make(2, [((0, 5), [(0, 1)])])
    with pytest.raises(GraphError):
        CSPInstance.make(2, [((0, 1), [(0,)])])
    with pytest.raises(GraphError):
        CSPInstance.make(2, [((0, 1), [(0, 2)])])


def test_incidence_graph_shapes():
    p3 = CSPInstance.make(2, [((0, 1), [(0, 0)])])
    g, side = incidence_graph(p3)
    assert g.n == 3 and g.m == 2
    assert side[2] == ("con", 0)
    star = CSPInstance.make(1, [((0,), [(0,)]), ((0,), [(1,)])])
    g2, _ = incidence_graph(star)
    assert g2.degree(0) == 2


def test_incidence_graph_golden_seed7():
    inst = random_csp(4, 3, 2, seed=7)
    g, _ = incidence_graph(inst)
    assert g.edges == ((1, 4), (3, 4), (2, 5), (0, 6), (2, 6))


def test_or_constraint_yes():
    inst = CSPInstance.make(2, [((0, 1), [(0, 1), (1, 0), (1, 1)])])
    assert oracle_csp(inst) is True
    assert solve_csp(inst) is True


def test_contradictory_unaries_no():
    inst = CSPInstance.make(1, [((0,), [(0,)]), ((0,), [(1,)])])
    assert oracle_csp(inst) is False
    assert solve_csp(inst) is False


def test_empty_instances():
    assert solve_csp(CSPInstance.make(0, [])) is True
    assert oracle_csp(CSPInstance.make(0, [])) is True
    assert solve_csp(CSPInstance.make(3, [])) is True


def test_empty_relation_no():
    inst = CSPInstance.make(2, [((0, 1), [])])
    assert oracle_csp(inst) is False
    assert solve_csp(inst) is False


def test_correlated_variables_through_forgotten_hub():
    # y=x1, y=x2 and x1!=x2: unsatisfiable only via the correlation
    inst = CSPInstance.make(3, [
        ((0, 1), [(0, 0), (1, 1)]),
        ((0, 2), [(0, 0), (1, 1)]),
        ((1, 2), [(0, 1), (1, 0)]),
    ])
    assert oracle_csp(inst) is False
    assert solve_csp(inst) is False


def test_degree_one_projection_preserves_satisfiability():
    # x appears only in one constraint: projecting it out keeps the verdict
    inst = CSPInstance.make(3, [
        ((0, 1), [(0, 1), (1, 1)]),
        ((1, 2), [(1, 0)]),
    ])
    assert oracle_csp(inst) is True
    assert solve_csp(inst) is True
    inst2 = CSPInstance.make(3, [
        ((0, 1), [(0, 0)]),
        ((1, 2), [(1, 0)]),
    ])
    assert oracle_csp(inst2) == solve_csp(inst2) == False  # noqa: E712


def test_matches_oracle_random():
    rng = random.Random(3)
    for s in range(100):
        inst = random_csp(rng.randint(1, 8), rng.randint(0, 6),
                          rng.randint(1, 3), seed=s)
        assert run_csp(inst)[0] == oracle_csp(inst), s


def test_invariant_under_root_and_tree():
    rng = random.Random(4)
    checked = 0
    s = 0
    while checked < 8:
        s += 1
        inst = random_csp(rng.randint(2, 5), rng.randint(2, 5), 2, seed=1000 + s)
        g, _ = incidence_graph(inst)
        if not g.is_connected():
            continue
        checked += 1
        base = oracle_csp(inst)
        for j in range(4):
            root = rng.randrange(g.n)
            t = random_spanning_tree(g, seed=j + 90 * s, root=root)
            assert run_csp(inst, tree=t, root=root)[0] == base


def test_table_size_bound():
    rng = random.Random(5)
    for s in range(30):
        inst = random_csp(rng.randint(2, 8), rng.randint(1, 6), 3, seed=77 + s)
        ok, stats = run_csp(inst)
        if stats.width:
            assert stats.max_table <= 2 ** (2 * stats.width)
