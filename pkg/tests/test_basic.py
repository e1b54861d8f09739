from fractions import Fraction

import pytest
from hypothesis import given, settings

from pathmajority import BasicMajorityIndex, LabelIndex, NavIndex, build_tree, generate, GeneratorSpec, oracle_majorities
from pathmajority.basic import (
    build_candidates_heavy,
    build_candidates_quadratic,
    cover_index,
    decompose_query,
    mark_nodes,
    prefix_lengths,
)
from pathmajority.oracle import SHAPES, oracle_path
from pathmajority.sequence import exact_majorities

from conftest import taus, trees


def test_f1_marking(f1):
    nav = NavIndex(f1)
    marked = mark_nodes(nav, Fraction(1, 2))
    assert sorted(marked.nodes) == [1, 3]
    assert len(marked) <= Fraction(1, 2) * f1.n


def test_chain_marking():
    t = build_tree(list(range(7)), [1] * 7)
    marked = mark_nodes(NavIndex(t), "1/2")
    assert sorted(NavIndex(t).depth[u] for u in marked.nodes) == [0, 2, 4]


def test_marking_degenerates_when_tree_is_short(f1):
    assert mark_nodes(NavIndex(f1), "0.1").nodes == []


def test_f1_candidate_sets(f1):
    nav = NavIndex(f1)
    idx = BasicMajorityIndex(f1, "1/2", nav=nav)
    assert idx.candidates.get(3, 0) == (1, 2)
    assert idx.candidates.get(3, 1) == (1, 2)
    assert idx.candidates.sets[1] == []
    quad = build_candidates_quadratic(nav, Fraction(1, 2), idx.marked.nodes)
    assert quad == idx.candidates


def test_prefix_lengths():
    assert cover_index(1) == 0 and cover_index(2) == 1 and cover_index(5) == 3
    assert prefix_lengths(5) == [2, 3, 5, 6]


def test_f1_decomposition(f1):
    idx = BasicMajorityIndex(f1, "1/2")
    dec = decompose_query(idx, 5, 7)
    assert dec.near_u == [5, 4]
    assert dec.near_v == [7, 6]
    assert dec.far_u == (3, 3)
    assert dec.far_v is None


def test_f1_queries(f1):
    assert BasicMajorityIndex(f1, "0.35").query(5, 7)[0] == [1, 2]
    assert BasicMajorityIndex(f1, "1/2").query(5, 7)[0] == []
    idx = BasicMajorityIndex(f1, "0.9")
    for u in f1.nodes():
        assert idx.query(u, u)[0] == [f1.original(f1.label[u])]


@settings(max_examples=80, deadline=None)
@given(trees(max_n=80), taus)
def test_candidate_sets_are_exact(tree, tau):
    tau = Fraction(tau)
    nav = NavIndex(tree)
    idx = BasicMajorityIndex(tree, tau, nav=nav)
    for x in idx.marked.nodes:
        up = oracle_path(tree, x, tree.root)
        span = nav.depth[x]
        for i, length in enumerate(prefix_lengths(span) if span else []):
            want = exact_majorities([tree.label[w] for w in up[:length]], tau / 2)
            assert set(idx.candidates.get(x, i)) == want
            assert len(want) <= 2 / tau


@settings(max_examples=80, deadline=None)
@given(trees(max_n=80), taus)
def test_decomposition_covers_path_once(tree, tau):
    idx = BasicMajorityIndex(tree, tau)
    nav = idx.nav
    for u in tree.nodes():
        for v in tree.nodes():
            dec = idx.decompose(u, v)
            covered = dec.near_u + dec.near_v
            for piece in (dec.far_u, dec.far_v):
                if piece:
                    covered += nav.path_nodes(*piece)
            assert sorted(covered) == sorted(oracle_path(tree, u, v))
            assert 1 <= len(dec.pieces()) <= 4


@pytest.mark.parametrize("shape", SHAPES)
@pytest.mark.parametrize("tau", ["0.5", "0.25", "0.1"])
def test_heavy_equals_quadratic(shape, tau):
    tree = generate(GeneratorSpec(shape, 500, 6, 3))
    nav = NavIndex(tree)
    marked = mark_nodes(nav, tau).nodes
    heavy = build_candidates_heavy(nav, LabelIndex(nav), Fraction(tau), marked)
    assert heavy == build_candidates_quadratic(nav, Fraction(tau), marked)


@settings(max_examples=60, deadline=None)
@given(trees(max_n=80), taus)
def test_queries_match_oracle(tree, tau):
    idx = BasicMajorityIndex(tree, tau)
    t = Fraction(tau)
    bound = 2 * (2 * -(-t.denominator // t.numerator) - 1) + 2 * (2 * t.denominator // t.numerator) + 2
    for u in tree.nodes():
        for v in tree.nodes():
            got, stats = idx.query(u, v)
            assert got == oracle_majorities(tree, u, v, tau)
            assert stats.verifications <= stats.candidates_inspected <= bound


def test_unknown_construction(f1):
    with pytest.raises(ValueError):
        BasicMajorityIndex(f1, "0.5", construction="cubic")
