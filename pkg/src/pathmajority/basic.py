"""Path tau-majorities with candidate sets stored at sampled ("marked") nodes.

A node is marked when its height is at least ``ceil(1/tau)`` and its depth a
multiple of ``ceil(1/tau)``.  For a marked ``x`` and every ``i`` the index
stores ``C_i(x)``: the exact (tau/2)-majorities of the ``1 + 2**i`` labels
read upward from ``x`` (cut at the root).  A query splits ``P_uv`` into at
most four pieces; two short ones are read node by node and the other two
take their candidates from one ``C_i`` each.  Every candidate is then
counted exactly on the whole path.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ._tau import TauLike, as_tau, ceil_inv, mg_counters
from .labels import LabelIndex
from .sequence import MisraGries, RangeMajorityIndex
from .tree import NULL, LabeledTree, NavIndex, PathDescriptor


@dataclass
class QueryStats:
    candidates_inspected: int = 0
    verifications: int = 0
    subpaths_used: int = 0


@dataclass
class MarkedSet:
    is_marked: bytearray
    nearest_marked_anc: list  # self-or-ancestor; NULL when none
    nodes: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.nodes)


def mark_nodes(nav: NavIndex, tau: TauLike, comp_root=None, members=None) -> MarkedSet:
    """Apply the height/depth sampling rule.

    With ``comp_root`` the rule runs inside components: depth is measured
    from ``comp_root[u]`` and nearest marked ancestors never leave the
    component.  ``members`` restricts marking to nodes with a true flag.
    """
    step = ceil_inv(as_tau(tau))
    n = nav.n
    depth, height, parent = nav.depth, nav.height, nav.parent
    flags = bytearray(n + 1)
    nearest = [NULL] * (n + 1)
    nodes = []
    for u in nav.order:
        if members is not None and not members[u]:
            continue
        d = depth[u] if comp_root is None else depth[u] - depth[comp_root[u]]
        if height[u] >= step and d % step == 0:
            flags[u] = 1
            nearest[u] = u
            nodes.append(u)
        elif comp_root is None or comp_root[u] != u:
            nearest[u] = nearest[parent[u]]
    return MarkedSet(flags, nearest, nodes)


def select_marked_basic(tree: LabeledTree, nav: NavIndex, tau: TauLike) -> MarkedSet:
    return mark_nodes(nav, tau)


class CandidateTable:
    """``C_i(x)`` for a set of nodes; ``sets[x][i]`` is a sorted label tuple."""

    def __init__(self, sets: Optional[dict] = None):
        self.sets = sets if sets is not None else {}

    def get(self, x: int, i: int) -> tuple:
        return self.sets[x][i]

    def __contains__(self, x) -> bool:
        return x in self.sets

    def __eq__(self, other) -> bool:
        return isinstance(other, CandidateTable) and self.sets == other.sets

    @property
    def entries(self) -> int:
        return sum(len(c) for per_node in self.sets.values() for c in per_node)


def cover_index(d: int) -> int:
    """Smallest ``i`` with ``2**i >= d`` (``d >= 1``)."""
    return (d - 1).bit_length()


def prefix_lengths(span: int) -> list:
    """Prefix lengths ``min(1 + 2**i, span + 1)`` for ``i = 0..ceil(lg span)``."""
    return [min(1 + (1 << i), span + 1) for i in range(cover_index(span) + 1)]


def _clip_span(nav: NavIndex, x: int, clip_root) -> int:
    r = nav.root if clip_root is None else clip_root[x]
    return nav.depth[x] - nav.depth[r]


def build_candidates_quadratic(nav: NavIndex, tau: TauLike, nodes, clip_root=None) -> CandidateTable:
    """One upward Misra-Gries scan per node; exact tallies finalize each set."""
    half = as_tau(tau) / 2
    num, den = half.numerator, half.denominator
    k = mg_counters(half)
    label, parent = nav.tree.label, nav.parent
    sets = {}
    for x in nodes:
        span = _clip_span(nav, x, clip_root)
        if span <= 0:
            sets[x] = []
            continue
        targets = prefix_lengths(span)
        mg = MisraGries(k)
        tally = {}
        out = []
        c = x
        length = 0
        for target in targets:
            while length < target:
                lab = label[c]
                mg.update(lab)
                tally[lab] = tally.get(lab, 0) + 1
                length += 1
                c = parent[c]
            out.append(tuple(sorted(l for l in mg.counters if tally[l] * den > num * length)))
        sets[x] = out
    return CandidateTable(sets)


def heavy_label_sequence(nav: NavIndex) -> list:
    label = nav.tree.label
    return [label[u] for u in nav.horder]


def build_candidates_heavy(
    nav: NavIndex,
    labels: LabelIndex,
    tau: TauLike,
    nodes,
    clip_root=None,
    range_index: Optional[RangeMajorityIndex] = None,
) -> CandidateTable:
    """Candidate sets from range majorities on heavy-path label sequences.

    The upward path from ``x`` is a chain of heavy-path segments.  Walking
    them in order keeps the exact (tau/2)-majorities of the segments covered
    so far; a prefix ending inside a segment adds that partial segment's
    range candidates, and each candidate is counted on the tree.
    """
    half = as_tau(tau) / 2
    num, den = half.numerator, half.denominator
    if range_index is None:
        range_index = RangeMajorityIndex(heavy_label_sequence(nav), half)
    elif range_index.tau != half:
        raise ValueError("range index must be built for tau/2")
    rcand = range_index.candidates
    depth, parent, head, hpos, horder = nav.depth, nav.parent, nav.head, nav.hpos, nav.horder
    count = labels.count
    labelanc = labels.labelanc
    root = nav.root
    sets = {}
    for x in nodes:
        r = root if clip_root is None else clip_root[x]
        span = depth[x] - depth[r]
        if span <= 0:
            sets[x] = []
            continue
        segs = []
        c = x
        while True:
            h = head[c]
            if depth[h] <= depth[r]:
                segs.append((hpos[c] - (depth[c] - depth[r]), hpos[c]))
                break
            segs.append((hpos[h], hpos[c]))
            c = parent[h]

        at_x = {}

        def occurrences(lab, top):
            a = at_x.get(lab)
            if a is None:
                a = at_x[lab] = count[labelanc(x, lab)]
            return a - count[labelanc(parent[top], lab)]

        acc = ()
        covered = 0
        si = 0
        out = []
        for target in prefix_lengths(span):
            while si < len(segs):
                lo, hi = segs[si]
                total = covered + hi - lo + 1
                if total > target:
                    break
                cands = rcand(lo + 1, hi + 1)
                cands.update(acc)
                top = horder[lo]
                acc = [l for l in cands if occurrences(l, top) * den > num * total]
                covered = total
                si += 1
            if covered == target:
                out.append(tuple(sorted(acc)))
                continue
            hi = segs[si][1]
            lo = hi - (target - covered) + 1
            cands = rcand(lo + 1, hi + 1)
            cands.update(acc)
            top = horder[lo]
            out.append(tuple(sorted(l for l in cands if occurrences(l, top) * den > num * target)))
        sets[x] = out
    return CandidateTable(sets)


@dataclass
class Decomposition:
    """The (up to) four pieces of a query path.

    ``near_u``/``near_v`` list nodes explicitly; ``far_u = (x, z)`` and
    ``far_v = (y, z')`` are vertical pieces starting at a marked node.
    """

    path: PathDescriptor
    near_u: list
    near_v: list
    far_u: Optional[tuple]
    far_v: Optional[tuple]

    def pieces(self) -> list:
        return [p for p in (self.near_u, self.near_v, self.far_u, self.far_v) if p]


def _walk(parent, u: int, stop: int, inclusive: bool) -> list:
    out = []
    while u != stop:
        out.append(u)
        u = parent[u]
    if inclusive:
        out.append(stop)
    return out


class BasicMajorityIndex:
    def __init__(
        self,
        tree: LabeledTree,
        tau: TauLike,
        nav: Optional[NavIndex] = None,
        labels: Optional[LabelIndex] = None,
        construction: str = "heavy",
        candidates: Optional[CandidateTable] = None,
    ):
        self.tree = tree
        self.tau = tau = as_tau(tau)
        self.nav = nav = nav if nav is not None else NavIndex(tree)
        self.labels = labels = labels if labels is not None else LabelIndex(nav)
        self.marked = mark_nodes(nav, tau)
        if candidates is not None:
            self.candidates = candidates
        elif construction == "heavy":
            self.candidates = build_candidates_heavy(nav, labels, tau, self.marked.nodes)
        elif construction == "quadratic":
            self.candidates = build_candidates_quadratic(nav, tau, self.marked.nodes)
        else:
            raise ValueError(f"unknown construction {construction!r}")

    @property
    def stored_entries(self) -> int:
        return self.candidates.entries

    def decompose(self, u: int, v: int) -> Decomposition:
        nav = self.nav
        depth, parent = nav.depth, nav.parent
        nearest = self.marked.nearest_marked_anc
        path = nav.describe_path(u, v)
        z = path.z
        x = nearest[u]
        if x and depth[x] >= depth[z]:
            near_u, far_u = _walk(parent, u, x, False), (x, z)
        else:
            near_u, far_u = _walk(parent, u, z, True), None
        near_v, far_v = [], None
        if v != z:
            zp = path.z_prime
            y = nearest[v]
            if y and depth[y] >= depth[zp]:
                near_v, far_v = _walk(parent, v, y, False), (y, zp)
            else:
                near_v = _walk(parent, v, zp, True)
        return Decomposition(path, near_u, near_v, far_u, far_v)

    def _far_candidates(self, piece) -> tuple:
        x, top = piece
        if x == top:
            return (self.tree.label[x],)
        return self.candidates.get(x, cover_index(self.nav.depth[x] - self.nav.depth[top]))

    def query_internal(self, u: int, v: int) -> tuple:
        dec = self.decompose(u, v)
        label = self.tree.label
        cands = [label[w] for w in dec.near_u]
        cands.extend(label[w] for w in dec.near_v)
        for piece in (dec.far_u, dec.far_v):
            if piece:
                cands.extend(self._far_candidates(piece))
        found, distinct = verify_candidates(self.labels, dec.path, cands, self.tau)
        stats = QueryStats(len(cands), distinct, len(dec.pieces()))
        return found, stats

    def query(self, u: int, v: int) -> tuple:
        """Sorted original labels occurring more than ``tau * |P_uv|`` times."""
        found, stats = self.query_internal(u, v)
        orig = self.tree.original_labels
        return [orig[l] for l in found], stats


def verify_candidates(labels: LabelIndex, path: PathDescriptor, cands, tau) -> tuple:
    """Exactly count each distinct candidate; returns (sorted winners, #distinct)."""
    num, den = tau.numerator, tau.denominator
    bound = num * path.length
    distinct = set(cands)
    count = labels.count_on_path
    found = sorted(l for l in distinct if count(l, path) * den > bound)
    return found, len(distinct)


def build_basic(tree: LabeledTree, tau: TauLike, **kwargs) -> BasicMajorityIndex:
    return BasicMajorityIndex(tree, tau, **kwargs)


def decompose_query(index: BasicMajorityIndex, u: int, v: int) -> Decomposition:
    return index.decompose(u, v)


def query_majorities_basic(index: BasicMajorityIndex, u: int, v: int) -> tuple:
    return index.query(u, v)
