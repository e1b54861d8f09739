"""
How many candidates does a query look at?
=========================================

Every query gathers a few candidate labels and counts each one exactly.
The count is capped by a constant depending on tau only; on bushy random
trees paths are short, so most queries read every node of the path instead.
"""
import random

import numpy as np

from pathmajority import BasicMajorityIndex, GeneratorSpec, NavIndex, StratifiedMajorityIndex, generate

tau = "0.1"
for shape in ("random-attachment", "caterpillar", "chain"):
    tree = generate(GeneratorSpec(shape, 20_000, 64, seed=3))
    nav = NavIndex(tree)
    rng = random.Random(0)
    pairs = [(rng.randint(1, tree.n), rng.randint(1, tree.n)) for _ in range(1000)]
    lengths = np.array([nav.describe_path(u, v).length for u, v in pairs])
    for index in (BasicMajorityIndex(tree, tau, nav=nav), StratifiedMajorityIndex(tree, tau, nav=nav)):
        inspected = np.array([index.query_internal(u, v)[1].candidates_inspected for u, v in pairs])
        print(f"{shape:>17} {type(index).__name__:>24}: mean path {lengths.mean():8.1f}  "
              f"mean candidates {inspected.mean():6.2f}  max {inspected.max()}")
