"""Brute-force ground truth and deterministic tree generators.

The oracles walk parent pointers only; they share nothing with the indexes
they check beyond :class:`~pathmajority.tree.LabeledTree` itself.

Random draws come from SplitMix64 so a generator spec reproduces the same
tree everywhere:

* state update ``s <- (s + 0x9E3779B97F4A7C15) mod 2**64``
* output ``z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31)`` (all mod 2**64)
* a draw below ``b`` is ``(z * b) >> 64``

Parent draws (nodes 2..n in order) come first, then one label draw per node
1..n, ``label = 1 + draw(sigma)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from ._tau import TauLike, as_tau
from .tree import LabeledTree, build_tree

_MASK = (1 << 64) - 1
SHAPES = ("random-attachment", "chain", "caterpillar", "complete-binary", "broom")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = s = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = ((s ^ (s >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return (self.next_u64() * bound) >> 64


@dataclass(frozen=True)
class GeneratorSpec:
    shape: str
    n: int
    sigma: int
    seed: int = 0


def _parents(shape: str, n: int, rng: SplitMix64) -> list:
    if shape == "random-attachment":
        return [0] + [1 + rng.below(i - 1) for i in range(2, n + 1)]
    if shape == "chain":
        return [i - 1 for i in range(1, n + 1)]
    if shape == "complete-binary":
        return [i // 2 for i in range(1, n + 1)]
    spine = (n + 1) // 2
    if shape == "caterpillar":
        return [i - 1 for i in range(1, spine + 1)] + [1 + rng.below(spine) for _ in range(spine + 1, n + 1)]
    if shape == "broom":
        return [i - 1 for i in range(1, spine + 1)] + [spine] * (n - spine)
    raise ValueError(f"unknown shape {shape!r}; expected one of {', '.join(SHAPES)}")


def generate_parents_labels(spec: GeneratorSpec) -> tuple:
    if spec.n < 1:
        raise ValueError("n must be positive")
    if spec.sigma < 1:
        raise ValueError("sigma must be positive")
    rng = SplitMix64(spec.seed)
    parents = _parents(spec.shape, spec.n, rng)
    labels = [1 + rng.below(spec.sigma) for _ in range(spec.n)]
    return parents, labels


def generate(spec: GeneratorSpec) -> LabeledTree:
    return build_tree(*generate_parents_labels(spec))


def generate_multi(spec: GeneratorSpec, max_labels: int = 3) -> tuple:
    """Parents plus 1..max_labels labels per node (drawn after the tree)."""
    rng = SplitMix64(spec.seed)
    parents = _parents(spec.shape, spec.n, rng)
    lists = []
    for _ in range(spec.n):
        m = 1 + rng.below(max_labels)
        lists.append([1 + rng.below(spec.sigma) for _ in range(m)])
    return parents, lists


def oracle_path(tree: LabeledTree, u: int, v: int) -> list:
    parent = tree.parent
    up = [u]
    while parent[up[-1]]:
        up.append(parent[up[-1]])
    where = {w: i for i, w in enumerate(up)}
    down = []
    while v not in where:
        down.append(v)
        v = parent[v]
    return up[: where[v] + 1] + down[::-1]


def oracle_tally(tree: LabeledTree, u: int, v: int) -> tuple:
    """(Counter of internal labels on P_uv, |P_uv|)."""
    nodes = oracle_path(tree, u, v)
    label = tree.label
    return Counter(label[w] for w in nodes), len(nodes)


def oracle_majorities(tree: LabeledTree, u: int, v: int, tau: TauLike) -> list:
    tau = as_tau(tau)
    tally, length = oracle_tally(tree, u, v)
    orig = tree.original_labels
    return sorted(orig[l] for l, c in tally.items() if c * tau.denominator > tau.numerator * length)


def oracle_minority(tree: LabeledTree, u: int, v: int, tau: TauLike) -> Optional[int]:
    tau = as_tau(tau)
    tally, length = oracle_tally(tree, u, v)
    ok = [l for l, c in tally.items() if c * tau.denominator <= tau.numerator * length]
    return tree.original_labels[min(ok)] if ok else None
