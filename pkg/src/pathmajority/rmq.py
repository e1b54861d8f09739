"""Sparse-table range minimum queries (O(n log n) build, O(1) query)."""
from __future__ import annotations

import numpy as np


class SparseTableArgMin:
    """Leftmost argmin over ``values[l..r]`` (inclusive, 0-based).

    Level ``k`` holds, for every start ``i``, the position of the leftmost
    minimum of ``values[i : i + 2**k]``.  Positions are stored as int32.
    """

    __slots__ = ("values", "levels", "size")

    def __init__(self, values):
        vals = np.asarray(values)
        self.size = m = len(vals)
        self.values = vals.tolist()
        if m == 0:
            self.levels = []
            return
        idx = np.arange(m, dtype=np.int32)
        levels = [idx]
        k = 1
        while (1 << k) <= m:
            prev = levels[-1]
            half = 1 << (k - 1)
            a = prev[: m - (1 << k) + 1]
            b = prev[half : half + len(a)]
            levels.append(np.where(vals[a] <= vals[b], a, b).astype(np.int32))
            k += 1
        self.levels = levels

    def argmin(self, lo: int, hi: int) -> int:
        if not 0 <= lo <= hi < self.size:
            raise IndexError(f"range [{lo}, {hi}] outside [0, {self.size})")
        k = (hi - lo + 1).bit_length() - 1
        row = self.levels[k]
        a = int(row[lo])
        b = int(row[hi - (1 << k) + 1])
        vals = self.values
        return a if vals[a] <= vals[b] else b
