import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathmajority import MisraGries, RangeMajorityIndex
from pathmajority.sequence import Sequence, exact_majorities, exact_range_count, misra_gries


def test_misra_gries_examples():
    got = misra_gries([1, 1, 2, 3, 1, 2], Fraction(1, 3))
    assert 1 in got and len(got) <= 2
    assert misra_gries([5], Fraction(1, 2)) == {5}
    assert len(misra_gries([1, 2, 3, 4], Fraction(1, 2))) <= 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 5), max_size=80), st.integers(1, 6), st.integers(0, 80))
def test_misra_gries_merge_keeps_heavy_items(items, k, cut):
    whole = MisraGries(k)
    whole.extend(items)
    a, b = MisraGries(k), MisraGries(k)
    a.extend(items[:cut])
    b.extend(items[cut:])
    merged = a.merge(b)
    for x, c in Counter(items).items():
        if c * (k + 1) > len(items):
            assert x in whole.counters and x in merged.counters
    assert len(merged.counters) <= k


def test_range_candidates_examples():
    idx = RangeMajorityIndex([1, 2, 1, 2, 1], "0.4")
    assert 1 in idx.candidates(1, 5)
    for k in range(1, 6):
        assert idx.data[k - 1] in idx.candidates(k, k)
    with pytest.raises(IndexError):
        idx.candidates(0, 2)
    with pytest.raises(IndexError):
        idx.candidates(3, 2)


@pytest.mark.parametrize("tau", ["0.5", "0.2", "0.1"])
def test_range_candidates_exhaustive(tau):
    rng = random.Random(11)
    t = Fraction(tau)
    for n, sigma in [(500, 3), (300, 20), (257, 150)]:
        data = [rng.randint(1, sigma) for _ in range(n)]
        idx = RangeMajorityIndex(data, t)
        for i in range(1, n + 1):
            tally = Counter()
            for j in range(i, n + 1):
                tally[data[j - 1]] += 1
                got = idx.candidates(i, j)
                assert len(got) <= idx.max_candidates
                length = j - i + 1
                for x, c in tally.items():
                    if c * t.denominator > t.numerator * length:
                        assert x in got


def test_exact_counts():
    s = Sequence([1, 2, 1, 2, 1])
    assert exact_range_count(s, 1, 2, 4) == 1
    assert exact_range_count(s, 9, 1, 5) == 0
    assert sum(s.count(x, 1, len(s)) for x in set(s.data)) == len(s)


def test_exact_majorities():
    assert exact_majorities([1, 2, 1, 2, 2], Fraction(1, 2)) == {2}
