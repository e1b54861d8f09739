from hypothesis import given, settings

from pathmajority import LabelIndex, NavIndex, build_tree
from pathmajority.labels import count_on_path, count_on_root_path_rank_based, labelanc
from pathmajority.oracle import oracle_path

from conftest import trees


def test_f1_counts(f1):
    idx = LabelIndex(NavIndex(f1))
    assert (idx.count[5], idx.count[11], idx.count[10], idx.count[1]) == (3, 3, 2, 1)
    assert (idx.prevlabel[4], idx.prevlabel[5], idx.prevlabel[11]) == (-1, 2, 2)


def test_f1_labelanc(f1):
    idx = LabelIndex(NavIndex(f1))
    assert labelanc(idx, 5, 2) == 2
    assert labelanc(idx, 7, 1) == 3
    assert labelanc(idx, 10, 2) is None
    assert labelanc(idx, 2, 1) == 1
    for u in f1.nodes():
        assert labelanc(idx, u, f1.label[u]) == u


def test_f1_path_counts(f1):
    nav = NavIndex(f1)
    idx = LabelIndex(nav)
    assert count_on_path(idx, 1, nav.describe_path(5, 7)) == 2
    assert count_on_path(idx, 3, nav.describe_path(10, 11)) == 2
    assert count_on_root_path_rank_based(idx, nav, 1, 5) == 3
    assert count_on_root_path_rank_based(idx, nav, 99, 5) == 0


def test_equal_label_chain():
    t = build_tree(list(range(0, 9)), [4] * 9)
    idx = LabelIndex(NavIndex(t))
    assert idx.count[9] == 9


@settings(max_examples=60, deadline=None)
@given(trees())
def test_counts_match_walks(tree):
    nav = NavIndex(tree)
    idx = LabelIndex(nav)
    for u in tree.nodes():
        up = oracle_path(tree, u, tree.root)
        same = [w for w in up[1:] if tree.label[w] == tree.label[u]]
        assert idx.count[u] == 1 + len(same)
        assert idx.prevlabel[u] == (nav.depth[same[0]] if same else -1)
        for lab in range(1, tree.sigma + 1):
            hit = next((w for w in up if tree.label[w] == lab), 0)
            assert idx.labelanc(u, lab) == hit
            want = sum(tree.label[w] == lab for w in up)
            assert count_on_root_path_rank_based(idx, nav, lab, u) == want
    for u in tree.nodes():
        for v in tree.nodes():
            path = oracle_path(tree, u, v)
            desc = nav.describe_path(u, v)
            for lab in range(1, tree.sigma + 1):
                assert idx.count_on_path(lab, desc) == sum(tree.label[w] == lab for w in path)
