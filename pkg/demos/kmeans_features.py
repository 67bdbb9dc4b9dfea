"""Cluster on a handful of features and pay almost nothing in cost.

Three reductions feed the same Lloyd clusterer: picking real features
by leverage, random sign projections, and the top right singular
vectors. Cost is always scored against the full feature set.
"""

from itertools import permutations

import numpy as np

from matsketch import kmeans_cost, lloyd, reduce_features
from matsketch.synthetic import blobs

k, eps = 3, 1.0 / 3.0
A, planted = blobs(300, 50, k, 8.0, seed=21)
print(f"data: {A.shape[0]} points, {A.shape[1]} features, {k} planted blobs")

full = lloyd(A, k, restarts=5, seed=0)
base = kmeans_cost(A, full)
# cluster ids are arbitrary, so score agreement over all renamings
match = max(np.mean(np.asarray(perm)[planted] == full.labels)
            for perm in permutations(range(k)))
print(f"full-feature Lloyd: cost {base:.1f}, "
      f"label agreement with planting {match:.2f}")

for method, c0 in (("select", 0.04), ("rp", 1.0), ("svd", 4.0)):
    C, _ = reduce_features(A, k, eps, method=method, c0=c0, seed=1)
    red = lloyd(C, k, restarts=5, seed=2)
    cost = kmeans_cost(A, red)  # reduced labels, full-feature cost
    print(f"{method:6s}: {C.shape[1]:3d} features, "
          f"cost ratio {cost / base:.4f}")
