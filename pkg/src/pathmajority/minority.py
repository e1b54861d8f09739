"""Path tau-minorities: a label occurring at least once and at most
``tau * |P_uv|`` times on the path.

Among any ``1 + floor(1/tau)`` distinct labels of a path at most
``floor(1/tau)`` can be tau-majorities, so trying that many distinct labels
per side of the lca finds a minority whenever one exists.  Distinct labels
are enumerated Muthukrishnan-style: weight each node by ``prevlabel`` (depth
of the previous occurrence of its label above it); on a vertical path whose
top is ``z``, a node is the topmost occurrence of its label exactly when its
weight is below ``depth(z)``, and repeated path-minimum queries peel those
nodes off.
"""
from __future__ import annotations

from typing import Optional

from ._tau import TauLike, as_tau, floor_mul_inv
from .basic import QueryStats
from .labels import LabelIndex
from .rmq import SparseTableArgMin
from .tree import LabeledTree, NavIndex


class PathMinIndex:
    """Minimum-``prevlabel`` node on any path, ties to the smaller preorder.

    A sparse table over the heavy-path layout answers each heavy-path
    segment in O(1); a path crosses O(log n) segments.
    """

    def __init__(self, nav: NavIndex, labels: LabelIndex):
        self.nav = nav
        self.weight = labels.prevlabel
        w = labels.prevlabel
        self._rmq = SparseTableArgMin([w[u] for u in nav.horder])

    def _better(self, a: int, b: int) -> int:
        if b == 0:
            return a
        wa, wb = self.weight[a], self.weight[b]
        if wa != wb:
            return a if wa < wb else b
        pre = self.nav.preorder
        return a if pre[a] < pre[b] else b

    def vertical_min(self, bottom: int, top: int) -> int:
        """Argmin over the vertical path ``bottom .. top`` (top an ancestor)."""
        nav = self.nav
        depth, head, hpos, parent, horder = nav.depth, nav.head, nav.hpos, nav.parent, nav.horder
        argmin = self._rmq.argmin
        best = 0
        dt = depth[top]
        c = bottom
        while True:
            h = head[c]
            if depth[h] <= dt:
                best = self._better(horder[argmin(hpos[c] - (depth[c] - dt), hpos[c])], best)
                return best
            best = self._better(horder[argmin(hpos[h], hpos[c])], best)
            c = parent[h]

    def path_min(self, a: int, b: int) -> int:
        nav = self.nav
        z = nav.lca(a, b)
        best = self.vertical_min(a, z)
        if b != z:
            best = self._better(self.vertical_min(b, nav.level_anc(b, nav.depth[z] + 1)), best)
        return best


class MinorityIndex:
    def __init__(self, tree: LabeledTree, nav: Optional[NavIndex] = None, labels: Optional[LabelIndex] = None):
        self.tree = tree
        self.nav = nav = nav if nav is not None else NavIndex(tree)
        self.labels = labels = labels if labels is not None else LabelIndex(nav)
        self.pathmin = PathMinIndex(nav, labels)

    def distinct_internal(self, u: int, z: int, limit: int) -> list:
        """Up to ``limit`` distinct internal labels on ``u .. z``, top-down-ish."""
        nav = self.nav
        depth, parent = nav.depth, nav.parent
        label = self.tree.label
        prevlabel = self.labels.prevlabel
        vmin = self.pathmin.vertical_min
        dz = depth[z]
        out = []
        stack = [(u, z)]
        while stack and len(out) < limit:
            b, a = stack.pop()
            m = vmin(b, a)
            if prevlabel[m] >= dz:
                continue
            out.append(label[m])
            if m != b:
                stack.append((b, nav.level_anc(b, depth[m] + 1)))
            if m != a:
                stack.append((parent[m], a))
        return out

    def distinct_on_path(self, u: int, z: int, limit: int) -> set:
        if limit < 1:
            raise ValueError("limit must be at least 1")
        if not self.nav.is_ancestor(z, u):
            raise ValueError(f"{z} is not an ancestor of {u}")
        orig = self.tree.original_labels
        return {orig[l] for l in self.distinct_internal(u, z, limit)}

    def query_internal(self, u: int, v: int, tau: TauLike) -> tuple:
        tau = as_tau(tau)
        nav = self.nav
        path = nav.describe_path(u, v)
        limit = 1 + floor_mul_inv(1, tau)
        bound = tau.numerator * path.length
        den = tau.denominator
        count = self.labels.count_on_path
        sides = [(u, path.z)]
        if v != path.z:
            sides.append((v, path.z_prime))
        stats = QueryStats(subpaths_used=len(sides))
        tried = set()
        for a, top in sides:
            for lab in self.distinct_internal(a, top, limit):
                stats.candidates_inspected += 1
                if lab in tried:
                    continue
                tried.add(lab)
                stats.verifications += 1
                if count(lab, path) * den <= bound:
                    return lab, stats
        return None, stats

    def query(self, u: int, v: int, tau: TauLike) -> tuple:
        lab, stats = self.query_internal(u, v, tau)
        return (None if lab is None else self.tree.original_labels[lab]), stats


def path_min(idx: MinorityIndex, a: int, b: int) -> int:
    return idx.pathmin.path_min(a, b)


def distinct_on_path(idx: MinorityIndex, u: int, z: int, limit: int) -> set:
    return idx.distinct_on_path(u, z, limit)


def query_minority(idx: MinorityIndex, u: int, v: int, tau: TauLike) -> tuple:
    return idx.query(u, v, tau)
