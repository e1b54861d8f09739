from collections import Counter
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from pathmajority import MinorityIndex, build_tree, oracle_minority
from pathmajority.minority import distinct_on_path, path_min, query_minority
from pathmajority.oracle import oracle_path, oracle_tally

from conftest import taus, trees


def test_f1_examples(f1):
    idx = MinorityIndex(f1)
    assert path_min(idx, 5, 3) == 4
    assert path_min(idx, 6, 6) == 6
    assert distinct_on_path(idx, 5, 3, 3) == {1, 3}
    assert distinct_on_path(idx, 7, 7, 2) == {2}
    lab, stats = query_minority(idx, 5, 7, Fraction(1, 5))
    assert lab == 3 and stats.verifications <= 2 * 6


def test_identical_labels_have_no_minority():
    t = build_tree([0, 1, 2, 3], [5] * 4)
    assert query_minority(MinorityIndex(t), 4, 1, "1/2")[0] is None
    assert oracle_minority(t, 4, 1, "1/2") is None


@settings(max_examples=60, deadline=None)
@given(trees(max_n=70), st.integers(1, 6))
def test_path_min_and_distinct(tree, limit):
    idx = MinorityIndex(tree)
    pre = idx.nav.preorder
    w = idx.labels.prevlabel
    for u in tree.nodes():
        for v in tree.nodes():
            path = oracle_path(tree, u, v)
            assert path_min(idx, u, v) == min(path, key=lambda x: (w[x], pre[x]))
        for z in oracle_path(tree, u, tree.root):
            found = idx.distinct_internal(u, z, limit)
            present = {tree.label[x] for x in oracle_path(tree, u, z)}
            assert len(found) == len(set(found)) == min(limit, len(present))
            assert set(found) <= present


@settings(max_examples=60, deadline=None)
@given(trees(max_n=70), taus)
def test_queries_valid_and_complete(tree, tau):
    t = Fraction(tau)
    idx = MinorityIndex(tree)
    cap = 2 * (1 + t.denominator // t.numerator)
    for u in tree.nodes():
        for v in tree.nodes():
            lab, stats = idx.query(u, v, t)
            expect = oracle_minority(tree, u, v, t)
            assert (lab is None) == (expect is None)
            if lab is not None:
                tally, length = oracle_tally(tree, u, v)
                c = Counter({tree.original(k): x for k, x in tally.items()})[lab]
                assert 1 <= c and c * t.denominator <= t.numerator * length
            assert stats.verifications <= cap
