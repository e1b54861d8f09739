"""
Path majorities on a small tree
===============================

Build an 11-node labeled tree, ask which labels dominate a path, and look
at how the basic index splits the path into pieces.
"""
from pathmajority import BasicMajorityIndex, MinorityIndex, build_tree, oracle_majorities

# node i+1 has parent parents[i]; 0 marks the root
parents = [0, 1, 2, 3, 4, 3, 6, 1, 8, 9, 9]
labels = [1, 2, 1, 3, 1, 2, 2, 3, 3, 1, 3]
tree = build_tree(parents, labels)

# the path 5-4-3-6-7 carries labels 1 3 1 2 2
idx = BasicMajorityIndex(tree, "0.35")
found, stats = idx.query(5, 7)
print("0.35-majorities on (5, 7):", found)
print("brute force agrees:", found == oracle_majorities(tree, 5, 7, "0.35"))
print(stats)

# at tau = 1/2 nothing occurs more than 2.5 times
print("1/2-majorities on (5, 7):", BasicMajorityIndex(tree, "1/2").query(5, 7)[0])

# marked nodes and the four-piece split
half = BasicMajorityIndex(tree, "1/2")
print("marked nodes:", sorted(half.marked.nodes))
dec = half.decompose(5, 7)
print("near u:", dec.near_u, " near v:", dec.near_v, " far u:", dec.far_u, " far v:", dec.far_v)

# a rare label instead of a frequent one
label, _ = MinorityIndex(tree).query(5, 7, "1/5")
print("a 1/5-minority on (5, 7):", label)
