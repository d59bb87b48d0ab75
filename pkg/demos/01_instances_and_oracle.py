"""Benchmark instances and the exact oracle.

Every error figure in this package is measured against the true optimum at
the current capacity, so the oracle comes first.
"""

# %%
import numpy as np

from dynkp import OracleTable, dp_optimal_profit, generate
from dynkp.oracle import brute_force_optimal

# Three instance classes share the same generator interface.
for cls in ("uncorr", "unc-s-w", "bou-s-c"):
    inst = generate(cls, 100, seed=1, capacity=4815)
    print(f"{cls:8s} weights {inst.weights.min()}..{inst.weights.max()}  "
          f"profits {inst.profits.min()}..{inst.profits.max()}")

# %%
# A bounded strongly correlated item always earns its weight plus 100.
bsc = generate("bou-s-c", 5, seed=3)
print(np.column_stack([bsc.weights, bsc.profits]))

# %%
# The unit-weight variant keeps profits and rescales the capacity by the mean profit.
uw = generate("uncorr", 100, seed=1, capacity=4815, unit_weights=True)
print("unit-weight capacity:", uw.capacity)
top = np.sort(uw.profits)[::-1]
print("DP optimum", dp_optimal_profit(uw, uw.capacity), "= top-C profits", top[:uw.capacity].sum())

# %%
# The DP agrees with exhaustive search on small instances.
small = generate("uncorr", 14, seed=9)
for c in (0, 500, 2000, small.total_weight):
    assert dp_optimal_profit(small, c) == brute_force_optimal(small, c)
print("DP matches brute force on a 14-item instance")

# %%
# A single DP row yields the optimum for every capacity at once; experiments
# build one table that covers the whole capacity trajectory.
inst = generate("uncorr", 100, seed=1, capacity=4815)
table = OracleTable(inst, 12_000)
for c in (0, 2000, 4815, 9000, 12_000):
    print(f"C={c:6d}  optimum {table[c]}")
