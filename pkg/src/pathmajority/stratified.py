"""Linear-space path tau-majorities by stratifying the tree on subtree size.

Level ``k`` (for ``k < kappa``) holds the nodes whose subtree has more than
``(1/tau) * log^[k] n`` nodes and that did not qualify for an earlier
level; everything left over forms level ``kappa``.  Each level is a forest
of parent-closed components.  Inside a component:

* branching nodes (two or more children in the same component) store
  candidate sets ``C_i`` clipped at the component root;
* maximal runs of non-branching nodes are written deepest-first into one
  sequence ``S`` that carries a range-majority index.

A query climbs from each endpoint to the lca, taking at most one range of
``S`` and one ``C_i`` per level, and enumerates the last-level nodes it
crosses one by one (or, in ``SUPERLINEAR`` mode, uses marked-node candidate
sets there as well).
"""
from __future__ import annotations

import enum
from typing import Optional

import numpy as np

from ._tau import TauLike, as_tau, ceil_inv, iterated_log2, log_star
from .basic import (
    CandidateTable,
    QueryStats,
    build_candidates_heavy,
    build_candidates_quadratic,
    cover_index,
    mark_nodes,
    verify_candidates,
)
from .labels import LabelIndex
from .sequence import RangeMajorityIndex
from .tree import NULL, LabeledTree, NavIndex


class Mode(enum.Enum):
    LINEAR = "linear"
    SUPERLINEAR = "superlinear"


class Stratification:
    """Per-node level, component root and branching structure.

    ``thresholds[k - 1]`` is the subtree-size cutoff of level ``k`` for
    ``k < kappa``.  ``leftover_cap`` bounds the size of every last-level
    component (it is the smallest cutoff applied, or ``n`` when none was).
    """

    def __init__(self, nav: NavIndex, tau: TauLike, kappa: Optional[int] = None):
        tau = as_tau(tau)
        n = nav.n
        if kappa is None:
            kappa = max(1, log_star(n))
        if kappa < 1:
            raise ValueError("kappa must be at least 1")
        self.requested_kappa = kappa
        inv = float(1 / tau)
        cutoffs = []
        for k in range(1, kappa):
            lg = iterated_log2(n, k)
            if lg <= 0 or inv * lg <= 1:
                break
            cutoffs.append(inv * lg)

        size = np.asarray(nav.subtree_size, dtype=np.float64)
        raw = np.full(n + 1, len(cutoffs) + 1, dtype=np.int64)
        for k in range(len(cutoffs), 0, -1):
            raw[size > cutoffs[k - 1]] = k
        present = sorted(set(raw[1:].tolist()))
        # empty levels are dropped and the rest renumbered 1..kappa
        renumber = np.zeros(len(cutoffs) + 2, dtype=np.int64)
        renumber[present] = np.arange(1, len(present) + 1)
        level = renumber[raw].tolist()
        level[NULL] = 0

        self.kappa = kappa = len(present)
        self.thresholds = [cutoffs[k - 1] for k in present if k <= len(cutoffs)]
        self.leftover_cap = cutoffs[-1] if cutoffs else float(n)
        self.level = level

        parent = nav.parent
        sub_root = [NULL] * (n + 1)
        inlevel = [0] * (n + 1)
        for u in nav.order:
            p = parent[u]
            if p and level[p] == level[u]:
                sub_root[u] = sub_root[p]
                inlevel[p] += 1
            else:
                sub_root[u] = u
        branching = bytearray(n + 1)
        nearest_branching = [NULL] * (n + 1)
        for u in nav.order:
            if level[u] < kappa and inlevel[u] >= 2:
                branching[u] = 1
                nearest_branching[u] = u
            elif sub_root[u] != u:
                nearest_branching[u] = nearest_branching[parent[u]]
        self.sub_root = sub_root
        self.inlevel_children = inlevel
        self.branching = branching
        self.nearest_branching_anc = nearest_branching

    def level_sizes(self) -> list:
        counts = np.bincount(np.asarray(self.level[1:]), minlength=self.kappa + 1)
        return counts[1:].tolist()


def stratify(tree: LabeledTree, nav: NavIndex, tau: TauLike, kappa: Optional[int] = None) -> Stratification:
    return Stratification(nav, tau, kappa)


class UnaryPathSequence:
    """Labels of all maximal non-branching runs (levels below ``kappa``).

    Each run is written deepest node first, so ``pos[parent(u)] == pos[u] + 1``
    inside a run.  ``run_top[u]`` is the shallowest node of ``u``'s run.
    """

    def __init__(self, nav: NavIndex, strat: Stratification, tau):
        n = nav.n
        parent, label = nav.parent, nav.tree.label
        level, branching, kappa = strat.level, strat.branching, strat.kappa
        in_run = [level[u] < kappa and not branching[u] for u in range(n + 1)]
        in_run[NULL] = False
        run_top = [NULL] * (n + 1)
        has_run_child = bytearray(n + 1)
        for u in nav.order:
            if not in_run[u]:
                continue
            p = parent[u]
            if in_run[p] and level[p] == level[u]:
                run_top[u] = run_top[p]
                has_run_child[p] = 1
            else:
                run_top[u] = u
        pos = [0] * (n + 1)
        data = []
        starts = []
        for u in nav.order:
            if in_run[u] and not has_run_child[u]:
                starts.append(len(data) + 1)
                top = run_top[u]
                c = u
                while True:
                    data.append(label[c])
                    pos[c] = len(data)
                    if c == top:
                        break
                    c = parent[c]
        self.data = data
        self.pos = pos
        self.run_top = run_top
        self.segment_starts = starts
        self.index = RangeMajorityIndex(data, tau)


class DepthEncodedTable:
    """Candidate sets stored as depths of the nearest ancestor carrying each
    candidate label; decoded as ``label(anc(x, depth))``."""

    def __init__(self, table: CandidateTable, nav: NavIndex, labels: LabelIndex):
        depth = nav.depth
        self.nav = nav
        enc = {}
        for x, per_i in table.sets.items():
            where = {}
            for c in per_i:
                for lab in c:
                    if lab not in where:
                        where[lab] = depth[labels.labelanc(x, lab)]
            enc[x] = [tuple(sorted(where[lab] for lab in c)) for c in per_i]
        self.sets = enc

    def get(self, x: int, i: int) -> list:
        label = self.nav.tree.label
        anc = self.nav.level_anc
        return [label[anc(x, d)] for d in self.sets[x][i]]

    def decoded(self) -> CandidateTable:
        return CandidateTable({x: [tuple(sorted(self.get(x, i))) for i in range(len(v))] for x, v in self.sets.items()})

    @property
    def entries(self) -> int:
        return sum(len(c) for per_node in self.sets.values() for c in per_node)


class StratifiedMajorityIndex:
    def __init__(
        self,
        tree: LabeledTree,
        tau: TauLike,
        kappa: Optional[int] = None,
        mode: Mode = Mode.LINEAR,
        nav: Optional[NavIndex] = None,
        labels: Optional[LabelIndex] = None,
        candidates: Optional[CandidateTable] = None,
    ):
        self.tree = tree
        self.tau = tau = as_tau(tau)
        self.mode = mode = Mode(mode)
        self.nav = nav = nav if nav is not None else NavIndex(tree)
        self.labels = labels = labels if labels is not None else LabelIndex(nav)
        self.strat = strat = Stratification(nav, tau, kappa)
        self.kappa = strat.kappa
        self.unary = UnaryPathSequence(nav, strat, tau)

        level, branching, sub_root = strat.level, strat.branching, strat.sub_root
        self.marked = None
        if mode is Mode.SUPERLINEAR:
            last = [lv == strat.kappa for lv in level]
            self.marked = mark_nodes(nav, tau, comp_root=sub_root, members=last)

        if candidates is None:
            candidates = self._build_candidates()
        self.candidates = DepthEncodedTable(candidates, nav, labels)

    def _build_candidates(self) -> CandidateTable:
        nav, strat = self.nav, self.strat
        level, branching, sub_root = strat.level, strat.branching, strat.sub_root
        top_level = [u for u in nav.order if branching[u] and level[u] == 1]
        deeper = [u for u in nav.order if branching[u] and level[u] > 1]
        sets = {}
        if top_level:
            sets.update(build_candidates_heavy(nav, self.labels, self.tau, top_level, clip_root=sub_root).sets)
        if deeper:
            sets.update(build_candidates_quadratic(nav, self.tau, deeper, clip_root=sub_root).sets)
        if self.marked is not None:
            sets.update(build_candidates_quadratic(nav, self.tau, self.marked.nodes, clip_root=sub_root).sets)
        return CandidateTable(sets)

    @property
    def candidate_entries(self) -> int:
        return self.candidates.entries

    @property
    def stored_entries(self) -> int:
        return self.candidates.entries + self.unary.index.stored_entries

    def segments(self, u: int, z: int):
        """Pieces covering the vertical path ``u .. z`` (``z`` an ancestor-or-self).

        Yields ``("nodes", bottom, stop)`` for nodes from ``bottom`` up to but
        excluding ``stop``, ``("table", x, top)`` for a candidate set of the
        path ``x .. top`` and ``("range", bottom, top)`` for a run of ``S``.
        """
        nav, strat = self.nav, self.strat
        depth, parent = nav.depth, nav.parent
        level, sub_root, branching = strat.level, strat.sub_root, strat.branching
        run_top = self.unary.run_top
        kappa = self.kappa
        nearest_marked = self.marked.nearest_marked_anc if self.marked is not None else None
        dz = depth[z]
        cur = u
        while depth[cur] >= dz:
            r = sub_root[cur]
            top = r if depth[r] > dz else z
            if level[cur] == kappa:
                x = nearest_marked[cur] if nearest_marked is not None else NULL
                if x and depth[x] >= depth[top]:
                    if x != cur:
                        yield ("nodes", cur, x)
                    yield ("table", x, top)
                else:
                    yield ("nodes", cur, parent[top])
                cur = parent[top]
            elif branching[cur]:
                yield ("table", cur, top)
                cur = parent[top]
            else:
                rt = run_top[cur]
                end = rt if depth[rt] > dz else z
                yield ("range", cur, end)
                cur = parent[end]

    def collect_candidates_up(self, u: int, z: int) -> tuple:
        """Candidate labels (with repeats) for ``u .. z`` and the piece count."""
        label = self.tree.label
        depth, parent = self.nav.depth, self.nav.parent
        pos = self.unary.pos
        rcand = self.unary.index.candidates
        out = []
        pieces = 0
        for kind, a, b in self.segments(u, z):
            pieces += 1
            if kind == "nodes":
                while a != b:
                    out.append(label[a])
                    a = parent[a]
            elif kind == "table":
                if a == b:
                    out.append(label[a])
                else:
                    out.extend(self.candidates.get(a, cover_index(depth[a] - depth[b])))
            else:
                p = pos[a]
                out.extend(rcand(p, p + depth[a] - depth[b]))
        return out, pieces

    def query_internal(self, u: int, v: int) -> tuple:
        path = self.nav.describe_path(u, v)
        cands, pieces = self.collect_candidates_up(u, path.z)
        if v != path.z:
            more, extra = self.collect_candidates_up(v, path.z_prime)
            cands.extend(more)
            pieces += extra
        found, distinct = verify_candidates(self.labels, path, cands, self.tau)
        return found, QueryStats(len(cands), distinct, pieces)

    def query(self, u: int, v: int) -> tuple:
        found, stats = self.query_internal(u, v)
        orig = self.tree.original_labels
        return [orig[l] for l in found], stats

    def candidate_bound(self) -> int:
        """Most raw candidates any query can gather (see the module docstring).

        Per endpoint: at most one range pull (``floor(8/tau)``) and one
        candidate set (``floor(2/tau)``) per level below ``kappa``, plus the
        last-level stretch, which is at most ``leftover_cap`` nodes (in
        ``SUPERLINEAR`` mode possibly ``2*ceil(1/tau) - 1`` nodes plus one
        candidate set instead).
        """
        tau = self.tau
        two = (2 * tau.denominator) // tau.numerator
        per_level = (8 * tau.denominator) // tau.numerator + two
        last = int(self.strat.leftover_cap)
        if self.mode is Mode.SUPERLINEAR:
            last = max(last, 2 * ceil_inv(tau) - 1 + two)
        return 2 * (self.kappa - 1) * per_level + 2 * last + 2


def build_stratified(tree, nav, label_index, tau, kappa=None, mode=Mode.LINEAR) -> StratifiedMajorityIndex:
    return StratifiedMajorityIndex(tree, tau, kappa=kappa, mode=mode, nav=nav, labels=label_index)


def collect_candidates_up(index: StratifiedMajorityIndex, u: int, z: int) -> tuple:
    return index.collect_candidates_up(u, z)


def query_majorities_stratified(index: StratifiedMajorityIndex, u: int, v: int) -> tuple:
    return index.query(u, v)
