"""Labeled rooted trees and the navigation tables every index builds on.

Node ids are 1-based.  Every per-node array has a slot 0 that stands for
"no node" (the parent of the root, a missing ancestor), so lookups such as
``depth[parent[root]]`` need no special casing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .rmq import SparseTableArgMin

NULL = 0


class TreeValidationError(ValueError):
    """Malformed tree input.  ``node`` names the offending node when known."""

    def __init__(self, message: str, node: Optional[int] = None):
        super().__init__(message)
        self.node = node


@dataclass(frozen=True, eq=False)
class LabeledTree:
    n: int
    root: int
    parent: list
    children: list
    label: list
    sigma: int
    original_labels: list  # original_labels[l] is the input label remapped to l

    @property
    def node_count(self) -> int:
        return self.n

    def original(self, label: int):
        return self.original_labels[label]

    def nodes(self) -> range:
        return range(1, self.n + 1)


def _as_parent(p, n: int, node: int) -> int:
    if p is None:
        return NULL
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise TreeValidationError(f"node {node}: parent id {p!r} is not an integer", node)
    p = int(p)
    if p < 0 or p > n:
        raise TreeValidationError(f"node {node}: dangling parent id {p}", node)
    if p == node:
        raise TreeValidationError(f"node {node}: is its own parent (cycle)", node)
    return p


def build_tree(parents: Sequence, labels: Sequence) -> LabeledTree:
    """Validate a parent list and label list and return a :class:`LabeledTree`.

    ``parents[i]`` is the parent of node ``i + 1``; ``0`` or ``None`` marks
    the root.  Labels are remapped to ``1..sigma`` preserving their order, so
    ascending internal labels are ascending original labels.
    """
    n = len(parents)
    if n == 0:
        raise TreeValidationError("tree must have at least one node")
    if len(labels) != n:
        raise TreeValidationError(f"{n} parents but {len(labels)} labels")

    parent = [NULL] * (n + 1)
    root = NULL
    for i, p in enumerate(parents, start=1):
        p = _as_parent(p, n, i)
        if p == NULL:
            if root != NULL:
                raise TreeValidationError(f"multiple roots: nodes {root} and {i}", i)
            root = i
        parent[i] = p
    if root == NULL:
        raise TreeValidationError("no root marker; parent links contain a cycle")

    for i, lab in enumerate(labels, start=1):
        if isinstance(lab, bool) or not isinstance(lab, (int, np.integer)):
            raise TreeValidationError(f"node {i}: label {lab!r} is not an integer", i)
        if lab <= 0:
            raise TreeValidationError(f"node {i}: nonpositive label {lab}", i)

    children = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        if i != root:
            children[parent[i]].append(i)

    seen = 1
    stack = [root]
    while stack:
        ch = children[stack.pop()]
        seen += len(ch)
        stack.extend(ch)
    if seen != n:
        reached = bytearray(n + 1)
        stack = [root]
        while stack:
            u = stack.pop()
            reached[u] = 1
            stack.extend(children[u])
        bad = next(i for i in range(1, n + 1) if not reached[i])
        raise TreeValidationError(f"node {bad} is not reachable from the root (cycle)", bad)

    distinct = sorted({int(x) for x in labels})
    remap = {lab: k for k, lab in enumerate(distinct, start=1)}
    label = [0] + [remap[int(x)] for x in labels]
    return LabeledTree(n, root, parent, children, label, len(distinct), [None] + distinct)


@dataclass(frozen=True)
class PathDescriptor:
    u: int
    v: int
    z: int
    z_prime: Optional[int]
    length: int


class NavIndex:
    """Depth, pre/postorder, subtree sizes, heights, heavy paths, LCA and
    level-ancestor support for a static :class:`LabeledTree`.

    Heavy paths are laid out contiguously: ``horder[hpos[u]]`` is ``u`` and a
    heavy path occupies positions ``hpos[head] .. hpos[head] + len - 1`` from
    its head downward.  That layout answers ``level_anc`` by jumping over
    heads and is shared by the label index and the path-minimum index.
    """

    def __init__(self, tree: LabeledTree):
        self.tree = tree
        n = tree.n
        parent = tree.parent
        children = tree.children
        root = tree.root

        order = [0] * n
        depth = [0] * (n + 1)
        depth[NULL] = -1
        pre = [0] * (n + 1)
        stack = [root]
        i = 0
        while stack:
            u = stack.pop()
            order[i] = u
            i += 1
            pre[u] = i
            ch = children[u]
            if ch:
                d = depth[u] + 1
                for c in ch:
                    depth[c] = d
                stack.extend(reversed(ch))

        size = [1] * (n + 1)
        size[NULL] = 0
        height = [0] * (n + 1)
        height[NULL] = -1
        heavy = [NULL] * (n + 1)
        best = [0] * (n + 1)
        # reverse preorder: subtrees finish before their parent; ">=" lets the
        # earlier sibling win ties
        for u in reversed(order):
            p = parent[u]
            if p:
                s = size[u]
                size[p] += s
                h = height[u] + 1
                if h > height[p]:
                    height[p] = h
                if s >= best[p]:
                    best[p] = s
                    heavy[p] = u

        head = [NULL] * (n + 1)
        hpos = [0] * (n + 1)
        horder = [0] * n
        pos = 0
        for u in order:
            if u == root or heavy[parent[u]] != u:
                c = u
                while c:
                    head[c] = u
                    hpos[c] = pos
                    horder[pos] = c
                    pos += 1
                    c = heavy[c]

        self.n = n
        self.root = root
        self.parent = parent
        self.order = order
        self.depth = depth
        self.preorder = pre
        self.postorder = [0] + [pre[u] - 1 - depth[u] + size[u] for u in range(1, n + 1)]
        self.subtree_size = size
        self.height = height
        self.heavy = heavy
        self.head = head
        self.hpos = hpos
        self.horder = horder
        self._lca_rmq = SparseTableArgMin(np.fromiter((depth[u] for u in order), dtype=np.int32, count=n))

    @property
    def heavy_paths(self) -> list:
        paths = []
        horder, heavy = self.horder, self.heavy
        p = 0
        while p < self.n:
            q = p
            while heavy[horder[q]]:
                q += 1
            paths.append(horder[p : q + 1])
            p = q + 1
        return paths

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when ``a`` is an ancestor of ``b`` or ``a == b``."""
        pa = self.preorder[a]
        return pa <= self.preorder[b] < pa + self.subtree_size[a]

    def lca(self, u: int, v: int) -> int:
        if u == v:
            return u
        pu = self.preorder[u]
        pv = self.preorder[v]
        if pu > pv:
            pu, pv = pv, pu
        # the shallowest node strictly after u and up to v in preorder is a
        # child of the lca (pu, pv are 1-based; positions are 0-based)
        m = self._lca_rmq.argmin(pu, pv - 1)
        return self.parent[self.order[m]]

    def level_anc(self, u: int, d: int) -> int:
        depth = self.depth
        if not 0 <= d <= depth[u]:
            raise ValueError(f"depth {d} outside [0, {depth[u]}] for node {u}")
        head = self.head
        parent = self.parent
        h = head[u]
        while depth[h] > d:
            h = head[parent[h]]
        return self.horder[self.hpos[h] + d - depth[h]]

    def describe_path(self, u: int, v: int) -> PathDescriptor:
        z = self.lca(u, v)
        depth = self.depth
        zp = None if v == z else self.level_anc(v, depth[z] + 1)
        return PathDescriptor(u, v, z, zp, depth[u] + depth[v] - 2 * depth[z] + 1)

    def path_nodes(self, u: int, v: int) -> list:
        """Nodes of the path from ``u`` to ``v`` in order."""
        z = self.lca(u, v)
        parent = self.parent
        up = []
        while u != z:
            up.append(u)
            u = parent[u]
        up.append(z)
        down = []
        while v != z:
            down.append(v)
            v = parent[v]
        return up + down[::-1]


def build_nav(tree: LabeledTree) -> NavIndex:
    return NavIndex(tree)


def lca(nav: NavIndex, u: int, v: int) -> int:
    return nav.lca(u, v)


def level_anc(nav: NavIndex, u: int, d: int) -> int:
    return nav.level_anc(u, d)


def describe_path(nav: NavIndex, u: int, v: int) -> PathDescriptor:
    return nav.describe_path(u, v)


@dataclass(frozen=True)
class ChainMap:
    """Where each node of a multi-labeled tree went after chain expansion.

    ``bottom[u]`` is ``u_1`` (the endpoint used for ordinary queries),
    ``top[u]`` is ``u_m`` (used when ``u`` is an ancestor of the other
    endpoint) and ``owner[x]`` maps an expanded node back to its original.
    """

    bottom: list
    top: list
    owner: list

    def endpoints(self, u: int) -> tuple:
        return self.bottom[u], self.top[u]


def chain_expand(parents: Sequence, label_lists: Sequence) -> tuple:
    """Replace every node carrying labels ``l_1..l_m`` by an upward chain.

    Node ``u`` becomes ``u_1, ..., u_m`` with ``u_i`` labeled ``l_i`` and the
    only child of ``u_{i+1}``; ``u_m`` hangs below ``v_1`` where ``v`` is the
    parent of ``u``.  Returns ``(expanded_tree, ChainMap)``.
    """
    n = len(parents)
    if len(label_lists) != n:
        raise TreeValidationError(f"{n} parents but {len(label_lists)} label lists")
    base = [0] * (n + 2)
    total = 0
    for u, labs in enumerate(label_lists, start=1):
        if len(labs) == 0:
            raise TreeValidationError(f"node {u} has no labels", u)
        base[u] = total + 1
        total += len(labs)
    new_parents = [0] * total
    new_labels = [0] * total
    owner = [0] * (total + 1)
    for u, labs in enumerate(label_lists, start=1):
        p = _as_parent(parents[u - 1], n, u)
        b = base[u]
        m = len(labs)
        for i in range(m):
            x = b + i
            owner[x] = u
            new_labels[x - 1] = labs[i]
            new_parents[x - 1] = x + 1 if i < m - 1 else (base[p] if p else 0)
    tree = build_tree(new_parents, new_labels)
    bottom = [0] + [base[u] for u in range(1, n + 1)]
    top = [0] + [base[u] + len(label_lists[u - 1]) - 1 for u in range(1, n + 1)]
    return tree, ChainMap(bottom, top, owner)
