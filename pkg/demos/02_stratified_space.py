"""
Space of the two majority indexes
=================================

Both indexes keep their stored candidate entries at a small, steady
fraction of n.  The stratified count also includes the range index over
the unary-run sequence, which is why it sits above the basic one on bushy
random trees where few nodes get marked.
"""
import numpy as np

from pathmajority import BasicMajorityIndex, GeneratorSpec, LabelIndex, NavIndex, StratifiedMajorityIndex, generate

tau = "0.1"
sizes = [1_000, 10_000, 100_000]
rows = []
for n in sizes:
    tree = generate(GeneratorSpec("random-attachment", n, 64, seed=1))
    nav = NavIndex(tree)
    labels = LabelIndex(nav)
    basic = BasicMajorityIndex(tree, tau, nav=nav, labels=labels)
    strat = StratifiedMajorityIndex(tree, tau, nav=nav, labels=labels)
    rows.append((n, basic.stored_entries, strat.stored_entries, strat.kappa))
    print(f"n={n:>7}  levels={strat.strat.level_sizes()}")

table = np.array(rows, dtype=float)
per_node = table[:, 1:3] / table[:, :1]
for (n, _, _, kappa), (b, s) in zip(rows, per_node):
    print(f"n={n:>7}  kappa={kappa}  basic entries/n={b:.4f}  stratified entries/n={s:.4f}")
