"""Majority queries on trees whose nodes carry several labels.

Each node is expanded into an upward chain of single-labeled nodes (see
:func:`~pathmajority.tree.chain_expand`) and a query ``(u, v)`` on the
original tree becomes one or two vertical-or-general paths on the expanded
tree.  When the lca ``z`` is a proper ancestor of both endpoints the expanded
path only meets ``z_1``, so the remaining chain ``z_2 .. z_m`` is queried as a
second piece and the two answers are merged with exact counts.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, Optional

from ._tau import TauLike, as_tau
from .basic import BasicMajorityIndex, QueryStats
from .tree import LabeledTree, chain_expand


class MultiLabelIndex:
    """Wraps any single-label majority index built on the expanded tree.

    ``factory(tree, tau)`` builds that index; it must expose ``nav``,
    ``labels`` and ``query_internal``.
    """

    def __init__(self, parents, label_lists, tau: TauLike, factory: Optional[Callable] = None):
        self.tau = tau = as_tau(tau)
        self.expanded, self.chains = chain_expand(parents, label_lists)
        factory = factory or BasicMajorityIndex
        self.index = factory(self.expanded, tau)
        self.n = len(parents)

    def map_query(self, u: int, v: int) -> list:
        """Expanded-tree paths whose multiset union is the original path."""
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise ValueError(f"node ids must lie in [1, {self.n}]")
        nav = self.index.nav
        bottom, top = self.chains.bottom, self.chains.top
        if nav.is_ancestor(top[u], bottom[v]):
            return [(top[u], bottom[v])]
        if nav.is_ancestor(top[v], bottom[u]):
            return [(bottom[u], top[v])]
        z1 = nav.lca(bottom[u], bottom[v])
        paths = [(bottom[u], bottom[v])]
        zm = top[self.chains.owner[z1]]
        if zm != z1:
            paths.append((nav.parent[z1], zm))
        return paths

    def query_internal(self, u: int, v: int) -> tuple:
        idx = self.index
        paths = self.map_query(u, v)
        if len(paths) == 1:
            return idx.query_internal(*paths[0])
        descs = [idx.nav.describe_path(a, b) for a, b in paths]
        stats = QueryStats()
        cands = set()
        for a, b in paths:
            found, st = idx.query_internal(a, b)
            cands.update(found)
            stats.candidates_inspected += st.candidates_inspected
            stats.subpaths_used += st.subpaths_used
        # a tau-majority of the union is a tau-majority of one of the pieces
        num, den = self.tau.numerator, self.tau.denominator
        length = sum(d.length for d in descs)
        count = idx.labels.count_on_path
        found = sorted(l for l in cands if sum(count(l, d) for d in descs) * den > num * length)
        stats.verifications += len(cands)
        return found, stats

    def query(self, u: int, v: int) -> tuple:
        found, stats = self.query_internal(u, v)
        orig = self.expanded.original_labels
        return [orig[l] for l in found], stats


def oracle_multi_majorities(parents, label_lists, u: int, v: int, tau: TauLike) -> list:
    """Multiset tally over the original multi-labeled path."""
    tau = as_tau(tau)

    def up(x):
        out = [x]
        while parents[out[-1] - 1]:
            out.append(parents[out[-1] - 1])
        return out

    pu, pv = up(u), up(v)
    on_v = set(pv)
    z = next(x for x in pu if x in on_v)
    nodes = pu[: pu.index(z) + 1] + pv[: pv.index(z)]
    tally = Counter(l for x in nodes for l in label_lists[x - 1])
    length = sum(tally.values())
    return sorted(l for l, c in tally.items() if c * tau.denominator > tau.numerator * length)


def build_multilabel(parents, label_lists, tau: TauLike, factory: Optional[Callable] = None) -> MultiLabelIndex:
    return MultiLabelIndex(parents, label_lists, tau, factory)


def expanded_tree(index: MultiLabelIndex) -> LabeledTree:
    return index.expanded
