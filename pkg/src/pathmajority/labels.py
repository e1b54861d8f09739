"""Label-aware primitives: nearest labeled ancestor and path label counts."""
from __future__ import annotations

from bisect import bisect_right

import numpy as np

from .tree import NULL, NavIndex, PathDescriptor


def _sorted_keys(label: list, rank: list, n: int) -> list:
    # one sorted list of label * n + rank; rank is 0-based here
    keys = np.asarray(label[1:], dtype=np.int64) * n + np.asarray(rank[1:], dtype=np.int64)
    keys.sort()
    return keys.tolist()


class LabelIndex:
    """Per-node ``count``/``prevlabel`` fields plus per-label occurrence keys.

    ``count[u]`` is the number of nodes labeled ``label(u)`` on the path from
    ``u`` to the root, and ``prevlabel[u]`` the depth of the nearest proper
    ancestor sharing the label (``-1`` if none).  Slot 0 stands for null, so
    ``count[NULL] == 0``.

    Occurrences of label ``l`` are stored as sorted keys ``l * n + rank``:
    ``_hkeys`` uses the heavy-path position (each heavy path is a contiguous
    block, so the deepest ``l`` on a path segment is one bisection), and
    ``_prekeys``/``_postkeys`` use 0-based preorder and postorder ranks.
    """

    def __init__(self, nav: NavIndex):
        tree = nav.tree
        n = tree.n
        label = tree.label
        children = tree.children
        depth = nav.depth
        self.nav = nav
        self.n = n
        self.label = label

        near = [NULL] * (n + 1)
        count = [0] * (n + 1)
        prevlabel = [-1] * (n + 1)
        top = [NULL] * (tree.sigma + 1)
        # enter/exit walk: top[l] is the deepest l-node on the current root path
        stack = [tree.root]
        while stack:
            u = stack.pop()
            if u > 0:
                lab = label[u]
                a = top[lab]
                near[u] = a
                count[u] = count[a] + 1
                prevlabel[u] = depth[a]
                top[lab] = u
                stack.append(-u)
                stack.extend(reversed(children[u]))
            else:
                top[label[-u]] = near[-u]
        self.count = count
        self.prevlabel = prevlabel
        self.nearest_same = near

        self._hkeys = _sorted_keys(label, nav.hpos, n)
        pre0 = [p - 1 for p in nav.preorder]
        post0 = [p - 1 for p in nav.postorder]
        self._prekeys = _sorted_keys(label, pre0, n)
        self._postkeys = _sorted_keys(label, post0, n)

    def labelanc(self, u: int, lab: int) -> int:
        """Deepest ancestor-or-self of ``u`` labeled ``lab``; ``NULL`` if none."""
        nav = self.nav
        head = nav.head
        hpos = nav.hpos
        parent = nav.parent
        keys = self._hkeys
        base = lab * self.n
        while u:
            h = head[u]
            i = bisect_right(keys, base + hpos[u]) - 1
            if i >= 0:
                k = keys[i]
                if k >= base + hpos[h]:
                    return nav.horder[k - base]
            u = parent[h]
        return NULL

    def count_to_ancestor(self, lab: int, u: int, a: int) -> int:
        """Occurrences of ``lab`` on the vertical path from ``u`` up to ``a``."""
        count = self.count
        return count[self.labelanc(u, lab)] - count[self.labelanc(self.nav.parent[a], lab)]

    def count_on_path(self, lab: int, path: PathDescriptor) -> int:
        count = self.count
        anc = self.labelanc
        z = path.z
        c = count[anc(path.u, lab)] - count[anc(self.nav.parent[z], lab)]
        if path.v != z:
            c += count[anc(path.v, lab)] - count[anc(z, lab)]
        return c

    def count_on_root_path_rank_based(self, lab: int, u: int) -> int:
        """Occurrences of ``lab`` from ``u`` to the root using only ranks.

        Nodes opened up to ``u`` in a depth-first walk are the ones with
        preorder <= preorder(u); among them, the ones already closed are
        exactly the ``preorder(u) - 1 - depth(u)`` nodes with the smallest
        postorder ranks.  The difference leaves ``u`` and its ancestors.
        """
        nav = self.nav
        n = self.n
        base = lab * n
        p = nav.preorder[u]
        opened = bisect_right(self._prekeys, base + p - 1) - bisect_right(self._prekeys, base - 1)
        closed_before = p - 1 - nav.depth[u]
        closed = bisect_right(self._postkeys, base + closed_before - 1) - bisect_right(self._postkeys, base - 1)
        return opened - closed

    def label_total(self, lab: int) -> int:
        base = lab * self.n
        return bisect_right(self._prekeys, base + self.n - 1) - bisect_right(self._prekeys, base - 1)


def build_label_index(tree, nav: NavIndex) -> LabelIndex:
    if nav.tree is not tree:
        raise ValueError("nav index was built for a different tree")
    return LabelIndex(nav)


def labelanc(idx: LabelIndex, u: int, lab: int):
    a = idx.labelanc(u, lab)
    return a or None


def count_on_path(idx: LabelIndex, lab: int, path: PathDescriptor) -> int:
    return idx.count_on_path(lab, path)


def count_on_root_path_rank_based(idx: LabelIndex, nav: NavIndex, lab: int, u: int) -> int:
    return idx.count_on_root_path_rank_based(lab, u)
