"""Path tau-majority and tau-minority queries on labeled trees.

Given a rooted tree with a label per node and a threshold ``0 < tau < 1``,
the indexes here report every label occurring more than ``tau * |P|`` times
on the path ``P`` between two nodes, or one label occurring at least once
and at most ``tau * |P|`` times.

>>> from pathmajority import build_tree, BasicMajorityIndex
>>> tree = build_tree([0, 1, 2, 3, 4, 3, 6, 3, 8, 9, 9],
...                   [1, 2, 1, 3, 1, 2, 2, 3, 1, 3, 3])
>>> BasicMajorityIndex(tree, "0.35").query(5, 7)[0]
[1, 2]
"""
from .basic import BasicMajorityIndex, CandidateTable, QueryStats, mark_nodes
from .labels import LabelIndex
from .minority import MinorityIndex
from .multilabel import MultiLabelIndex
from .oracle import GeneratorSpec, generate, oracle_majorities, oracle_minority
from .sequence import MisraGries, RangeMajorityIndex
from .stratified import Mode, StratifiedMajorityIndex
from .tree import LabeledTree, NavIndex, TreeValidationError, build_tree, chain_expand

__all__ = [
    "BasicMajorityIndex",
    "CandidateTable",
    "GeneratorSpec",
    "LabelIndex",
    "LabeledTree",
    "MinorityIndex",
    "MisraGries",
    "Mode",
    "MultiLabelIndex",
    "NavIndex",
    "QueryStats",
    "RangeMajorityIndex",
    "StratifiedMajorityIndex",
    "TreeValidationError",
    "build_tree",
    "chain_expand",
    "generate",
    "mark_nodes",
    "oracle_majorities",
    "oracle_minority",
]
