import pytest
from hypothesis import given, settings, strategies as st

from pathmajority import NavIndex, TreeValidationError, build_tree, chain_expand
from pathmajority.oracle import oracle_path
from pathmajority.tree import describe_path, lca, level_anc

from conftest import trees


def walk_depth(tree, u):
    d = 0
    while tree.parent[u]:
        u = tree.parent[u]
        d += 1
    return d


def test_single_node_remaps_label():
    t = build_tree([0], [7])
    assert (t.n, t.sigma, t.label[1], t.original(1)) == (1, 1, 1, 7)
    assert NavIndex(t).heavy_paths == [[1]]


def test_f1_shape(f1):
    nav = NavIndex(f1)
    assert f1.sigma == 3
    assert nav.depth[5] == 4
    assert nav.subtree_size[2] == 6
    assert nav.order[0] == f1.root
    assert nav.heavy_paths == [[1, 2, 3, 4, 5], [6, 7], [8, 9, 10], [11]]


def test_f1_lca_and_level_anc(f1):
    nav = NavIndex(f1)
    assert lca(nav, 5, 7) == 3
    assert lca(nav, 10, 11) == 9
    assert lca(nav, 4, 4) == 4
    assert level_anc(nav, 5, 1) == 2
    with pytest.raises(ValueError):
        level_anc(nav, 5, 5)


def test_f1_describe_path(f1):
    nav = NavIndex(f1)
    p = describe_path(nav, 5, 7)
    assert (p.z, p.z_prime, p.length) == (3, 6, 5)
    p = describe_path(nav, 5, 1)
    assert (p.z, p.z_prime, p.length) == (1, None, 5)
    p = describe_path(nav, 9, 9)
    assert (p.z, p.z_prime, p.length) == (9, None, 1)


@pytest.mark.parametrize(
    "parents, labels",
    [
        ([2, 1], [1, 1]),  # two-node cycle, no root
        ([0, 0], [1, 1]),  # two roots
        ([0, 3], [1, 1]),  # dangling parent
        ([0, 2], [1, 1]),  # self loop
        ([0, 1], [1, 0]),  # nonpositive label
        ([0, 1], [1]),  # length mismatch
        ([0, 3, 2], [1, 1, 1]),  # cycle detached from the root
        ([], []),
    ],
)
def test_invalid_trees_rejected(parents, labels):
    with pytest.raises(TreeValidationError):
        build_tree(parents, labels)


def test_children_preserve_input_order():
    t = build_tree([0, 1, 1, 1], [1, 1, 1, 1])
    assert t.children[1] == [2, 3, 4]


@settings(max_examples=60, deadline=None)
@given(trees())
def test_nav_matches_walks(tree):
    nav = NavIndex(tree)
    n = tree.n
    covered = sorted(u for path in nav.heavy_paths for u in path)
    assert covered == list(range(1, n + 1))
    for u in range(1, n + 1):
        assert nav.depth[u] == walk_depth(tree, u)
        for d in range(nav.depth[u] + 1):
            a = level_anc(nav, u, d)
            assert nav.depth[a] == d and nav.is_ancestor(a, u)
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            path = oracle_path(tree, u, v)
            z = nav.lca(u, v)
            assert z in path and nav.depth[z] == min(nav.depth[w] for w in path)
            assert nav.path_nodes(u, v) == path
            assert describe_path(nav, u, v).length == len(path)


def test_chain_expand_single_node():
    t, cm = chain_expand([0], [[4, 7]])
    assert t.n == 2
    assert t.original(t.label[t.root]) == 7
    assert cm.bottom[1] != t.root and t.original(t.label[cm.bottom[1]]) == 4


def test_chain_expand_identity_when_single_labeled(f1):
    from conftest import F1_LABELS, F1_PARENTS

    t, cm = chain_expand(F1_PARENTS, [[l] for l in F1_LABELS])
    assert t.parent == f1.parent and t.label == f1.label
    assert cm.bottom == cm.top == list(range(12))


def test_chain_expand_covers_multiset():
    t, cm = chain_expand([0, 1], [[1, 2], [3]])
    nav = NavIndex(t)
    nodes = nav.path_nodes(cm.top[1], cm.bottom[2])
    assert sorted(t.original(t.label[x]) for x in nodes) == [1, 2, 3]
