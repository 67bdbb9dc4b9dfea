"""Pick a few actual columns of a matrix and ask how much of it they explain.

Three flavors: oversampled selection with a certified error factor,
exactly-k selection, and an interpolative decomposition whose
coefficient matrix stays small. Ends with the worst-case instance on
which no choice of columns can do well.
"""

import numpy as np

from matsketch import (all_subset_errors, cssp, cx_frobenius,
                       interpolative_decomposition, lower_bound_instance,
                       svd)
from matsketch.synthetic import lowrank_plus_noise

# a 100 x 80 matrix that is rank 2 plus a little noise
A = lowrank_plus_noise(100, 80, 2, 0.05, seed=7)
f = svd(A)
best = float(np.linalg.norm(f.singular_values[2:]))
print(f"||A - A_2||_F (best possible with rank 2): {best:.4f}")

# 8 rescaled columns, deterministic pick, factor sqrt(5) certified
res = cx_frobenius(A, 2, 8, mode="deterministic")
print(f"deterministic 8-column pick: error {res.rank_k_error_frobenius:.4f}"
      f" <= bound {res.bound_value:.4f}")

# exactly 2 unit columns; the bound is now only in expectation
got = cssp(A, 2, mode="frobenius", seed=0)
print(f"exactly-2 columns {sorted(got.plan.indices.tolist())}: "
      f"error {got.rank_k_error_frobenius:.4f} (E-bound {got.bound_value:.1f})")

# A ~= C X with an exact identity block inside X and entries bounded by 2
C, X, plan = interpolative_decomposition(A, 2, seed=0)
print(f"interpolative: picked {plan.indices.tolist()}, "
      f"max|X| = {np.abs(X).max():.3f}, "
      f"||A - CX||_2 = {np.linalg.norm(A - C @ X, 2):.4f}")

# the hard instance: every r-subset of columns gives the same ratio
n, alpha, r = 5, 1.0, 2
H = lower_bound_instance(n, alpha)
_, errs = all_subset_errors(H, r, norm="spectral")
ratios = (errs / alpha) ** 2
print(f"worst-case instance n={n}: every {r}-subset has squared ratio "
      f"{ratios.min():.6f}..{ratios.max():.6f} "
      f"(closed form {(n + alpha**2) / (r + alpha**2):.6f})")
