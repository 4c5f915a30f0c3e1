import random

import pytest

from ecwidth.fixtures import random_spanning_tree, random_srti
from ecwidth.graph import GraphError
from ecwidth.srti import (
    SRTIInstance,
    acceptability_graph,
    decide_maxsrti,
    is_blocking,
    oracle_srti,
    run_maxsrti,
    solve_maxsrti,
)


def make(prefs, target=0):
    return SRTIInstance.make([[frozenset(g) for g in agent] for agent in prefs],
                             target)


ROTATION = make([[{1}, {2}], [{2}, {0}], [{0}, {1}]])


def test_instance_validation():
    with pytest.raises(GraphError):
        make([[{0}]])  # lists itself
    with pytest.raises(GraphError):
        make([[{1}, {1}], []])  # repeated across ties
    with pytest.raises(GraphError):
        make([[{7}]])  # unknown agent


def test_acceptability_graph_mutuality():
    inst = make([[{1}], [{0}], [{0}]])
    g = acceptability_graph(inst)
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 2)  # one-sided listing
    assert g.m == 1


def test_is_blocking():
    inst = make([[{1}, {2}], [{0}], [{0}]], 1)
    # both unmatched and mutually acceptable: blocking
    assert is_blocking(inst, [], (0, 1)) is True
    # 0 matched to its top choice 1: edge (0,2) not blocking via 0
    assert is_blocking(inst, [(0, 1)], (0, 2)) is False
    # tie between partner and challenger is not blocking (strict required)
    tied = make([[{1, 2}], [{0}], [{0}]])
    assert is_blocking(tied, [(0, 1)], (0, 2)) is False
    with pytest.raises(GraphError):
        is_blocking(inst, [], (1, 2))  # not acceptable


def test_mutual_pair():
    inst = make([[{1}], [{0}]], 1)
    assert oracle_srti(inst) == 1
    assert solve_maxsrti(inst) == 1
    assert decide_maxsrti(inst) is True


def test_rotation_has_no_stable_matching():
    assert oracle_srti(ROTATION) is None
    assert solve_maxsrti(ROTATION) is None
    assert decide_maxsrti(ROTATION) is False  # even for target 0


def test_empty_and_isolated():
    assert solve_maxsrti(make([])) == 0
    lonely = make([[], []])
    assert solve_maxsrti(lonely) == 0
    assert oracle_srti(lonely) == 0


def test_path_of_four_strict():
    inst = make([[{1}], [{0}, {2}], [{1}, {3}], [{2}]], 2)
    assert oracle_srti(inst) == 2
    assert solve_maxsrti(inst) == 2
    assert decide_maxsrti(inst) is True


def test_ties_allow_larger_stable_matching():
    # with a tie at agent 1 the rotation pattern gains a stable matching
    inst = make([[{1}, {2}], [{0, 2}], [{0}, {1}]])
    assert oracle_srti(inst) == solve_maxsrti(inst)


def test_target_above_matching_bound():
    inst = make([[{1}], [{0}]], 9)
    assert decide_maxsrti(inst) is False


def test_matches_oracle_random():
    rng = random.Random(6)
    for s in range(80):
        inst = random_srti(rng.randint(1, 6), seed=s)
        assert run_maxsrti(inst)[0] == oracle_srti(inst), s


def test_invariant_under_root_and_tree():
    rng = random.Random(7)
    checked = 0
    s = 0
    while checked < 8:
        s += 1
        inst = random_srti(rng.randint(3, 6), seed=3000 + s)
        g = acceptability_graph(inst)
        if not g.is_connected() or g.n < 2:
            continue
        checked += 1
        base = oracle_srti(inst)
        for j in range(4):
            root = rng.randrange(g.n)
            t = random_spanning_tree(g, seed=j + 11 * s, root=root)
            assert run_maxsrti(inst, tree=t, root=root)[0] == base


def test_signature_table_bound():
    rng = random.Random(8)
    for s in range(30):
        inst = random_srti(rng.randint(2, 6), seed=600 + s)
        _value, stats = run_maxsrti(inst)
        if stats.width:
            assert stats.max_table <= 3 ** stats.width
