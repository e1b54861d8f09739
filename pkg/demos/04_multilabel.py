"""
Nodes with several labels
=========================

A node carrying labels l1..lm is unfolded into a small chain before
indexing; queries are mapped onto the unfolded tree.
"""
from pathmajority import MultiLabelIndex
from pathmajority.multilabel import oracle_multi_majorities

# the root carries 5 three times; its two children carry 1 and 2
parents = [0, 1, 1]
label_lists = [[5, 5, 5], [1], [2]]

ml = MultiLabelIndex(parents, label_lists, "1/2")
print("expanded tree has", ml.expanded.n, "nodes")
print("query (2, 3) maps to", ml.map_query(2, 3))
print("1/2-majorities:", ml.query(2, 3)[0], "brute force:", oracle_multi_majorities(parents, label_lists, 2, 3, "1/2"))
