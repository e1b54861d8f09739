"""Frequent elements on flat sequences.

* :class:`MisraGries` - the classic k-counter summary, incremental and
  mergeable.
* :class:`RangeMajorityIndex` - returns, for any range ``S[i..j]``, a small
  candidate superset of the labels occurring more than ``tau * (j - i + 1)``
  times.  Callers verify candidates exactly.
* :class:`Sequence` - a label sequence with per-label position lists for
  exact range counts.

Positions in the public API are 1-based and ranges inclusive.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import defaultdict
from fractions import Fraction

from ._tau import TauLike, as_tau, floor_mul_inv, mg_counters


class MisraGries:
    """Misra-Gries summary with ``k`` counters.

    Any item occurring more than ``len / (k + 1)`` times in the stream seen so
    far has a positive counter.
    """

    __slots__ = ("k", "counters", "length")

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("need at least one counter")
        self.k = k
        self.counters = {}
        self.length = 0

    def update(self, item) -> None:
        c = self.counters
        self.length += 1
        if item in c:
            c[item] += 1
        elif len(c) < self.k:
            c[item] = 1
        else:
            for key in list(c):
                if c[key] == 1:
                    del c[key]
                else:
                    c[key] -= 1

    def extend(self, items) -> None:
        for item in items:
            self.update(item)

    def merge(self, other: "MisraGries") -> "MisraGries":
        out = MisraGries(self.k)
        out.counters = _merge_counters(self.counters, other.counters, self.k)
        out.length = self.length + other.length
        return out

    def candidates(self) -> set:
        return set(self.counters)


def _merge_counters(a: dict, b: dict, k: int) -> dict:
    c = dict(a)
    for key, v in b.items():
        c[key] = c.get(key, 0) + v
    if len(c) > k:
        cut = sorted(c.values(), reverse=True)[k]
        c = {key: v - cut for key, v in c.items() if v > cut}
    return c


def misra_gries(seq_slice, tau: TauLike) -> set:
    """Superset (of size at most ``ceil(1/tau) - 1``) of the tau-majorities."""
    mg = MisraGries(mg_counters(as_tau(tau)))
    mg.extend(seq_slice)
    return mg.candidates()


class Sequence:
    def __init__(self, data):
        self.data = list(data)
        positions = defaultdict(list)
        for i, x in enumerate(self.data, start=1):
            positions[x].append(i)
        self.positions = dict(positions)

    def __len__(self) -> int:
        return len(self.data)

    def count(self, lab, i: int, j: int) -> int:
        pos = self.positions.get(lab)
        if not pos:
            return 0
        return bisect_right(pos, j) - bisect_left(pos, i)


def exact_range_count(seq: Sequence, lab, i: int, j: int) -> int:
    return seq.count(lab, i, j)


class RangeMajorityIndex:
    """Candidate supersets for range tau-majority queries.

    Level ``s`` cuts the sequence into aligned blocks of ``2**s`` positions
    and keeps a Misra-Gries summary of each block at threshold ``tau/4``.
    A query of length ``L`` with ``2**t <= L < 2**(t+1)`` meets at most two
    blocks of level ``t + 1``; a tau-majority of the query occurs more than
    ``tau * L / 2 >= (tau/4) * 2**(t+1)`` times in one of them, so it is in
    that block's list.  Queries no longer than ``floor(8/tau)`` are answered
    by scanning, which is why levels below that size are never stored.
    """

    def __init__(self, data, tau: TauLike):
        self.tau = tau = as_tau(tau)
        self.data = data = list(data)
        n = len(data)
        self.max_candidates = floor_mul_inv(8, tau)
        self.counters = k = mg_counters(tau / 4)
        self.first_level = s0 = max(1, self.max_candidates.bit_length())
        self.levels = {}

        top = max(s0, n.bit_length())
        block = 1 << s0
        current = []
        for start in range(0, n, block):
            mg = MisraGries(k)
            mg.extend(data[start : start + block])
            current.append(mg.counters)
        s = s0
        while True:
            self.levels[s] = [tuple(sorted(c)) for c in current]
            if s >= top:
                break
            merged = []
            for q in range(0, len(current), 2):
                if q + 1 < len(current):
                    merged.append(_merge_counters(current[q], current[q + 1], k))
                else:
                    merged.append(current[q])
            current = merged
            s += 1

    def __len__(self) -> int:
        return len(self.data)

    @property
    def stored_entries(self) -> int:
        return sum(len(lst) for blocks in self.levels.values() for lst in blocks)

    def candidates(self, i: int, j: int) -> set:
        n = len(self.data)
        if not 1 <= i <= j <= n:
            raise IndexError(f"range [{i}, {j}] outside [1, {n}]")
        length = j - i + 1
        if length <= self.max_candidates:
            return set(self.data[i - 1 : j])
        s = length.bit_length()
        blocks = self.levels[s]
        out = set(blocks[(i - 1) >> s])
        out.update(blocks[(j - 1) >> s])
        return out


def build_range_majority(seq, tau: TauLike) -> RangeMajorityIndex:
    data = seq.data if isinstance(seq, Sequence) else seq
    return RangeMajorityIndex(data, tau)


def range_candidates(idx: RangeMajorityIndex, i: int, j: int) -> set:
    return idx.candidates(i, j)


def exact_majorities(items, tau: Fraction) -> set:
    """Labels of ``items`` occurring more than ``tau * len(items)`` times."""
    tally = defaultdict(int)
    for x in items:
        tally[x] += 1
    num, den = tau.numerator, tau.denominator
    length = len(items)
    return {x for x, c in tally.items() if c * den > num * length}
