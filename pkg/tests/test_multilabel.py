import random

import pytest

from pathmajority import GeneratorSpec, MultiLabelIndex, StratifiedMajorityIndex
from pathmajority.multilabel import oracle_multi_majorities
from pathmajority.oracle import SHAPES, generate_multi


def test_two_node_tree():
    ml = MultiLabelIndex([0, 1], [[1, 2], [3]], "0.3")
    assert ml.map_query(1, 2) == [(ml.chains.top[1], ml.chains.bottom[2])]
    assert ml.query(1, 2)[0] == [1, 2, 3]
    assert ml.query(2, 2)[0] == [3]


def test_lca_chain_is_not_lost():
    # root carries [5, 5, 5]; two leaves carry 1 and 2
    parents, lists = [0, 1, 1], [[5, 5, 5], [1], [2]]
    ml = MultiLabelIndex(parents, lists, "1/2")
    assert len(ml.map_query(2, 3)) == 2
    assert ml.query(2, 3)[0] == [5] == oracle_multi_majorities(parents, lists, 2, 3, "1/2")


def test_rejects_bad_nodes():
    ml = MultiLabelIndex([0], [[1]], "0.5")
    with pytest.raises(ValueError):
        ml.query(1, 2)


@pytest.mark.parametrize("factory", [None, StratifiedMajorityIndex])
@pytest.mark.parametrize("shape", SHAPES)
def test_random_trees_match_oracle(shape, factory):
    rng = random.Random(shape)
    for seed in range(4):
        parents, lists = generate_multi(GeneratorSpec(shape, 120, 6, seed))
        for tau in ("0.5", "0.3", "0.1"):
            ml = MultiLabelIndex(parents, lists, tau, factory)
            for _ in range(60):
                u, v = rng.randint(1, 120), rng.randint(1, 120)
                assert ml.query(u, v)[0] == oracle_multi_majorities(parents, lists, u, v, tau)
