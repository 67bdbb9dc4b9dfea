"""Deterministic sparsification: keep r of n vectors, certify both sides.

The dual-set barrier walk reweights a few columns so that one quadratic
form stays well conditioned from below while another stays controlled
from above. No randomness anywhere; rerunning gives the same picks.
"""

import math

import numpy as np

from matsketch import apply_plan_columns, barrier_dual_spectral
from matsketch.samplers import barrier_dual_frobenius
from matsketch.synthetic import random_orthonormal

n, k, ell, r = 400, 4, 8, 20
V = random_orthonormal(n, k, seed=1)
U = random_orthonormal(n, ell, seed=2)

plan = barrier_dual_spectral(V, U, r)
print(f"kept {len(plan)} of {n} index/weight pairs")

smin = np.linalg.svd(apply_plan_columns(V.T, plan), compute_uv=False)[-1]
smax = np.linalg.svd(apply_plan_columns(U.T, plan), compute_uv=False)[0]
print(f"sigma_min(V^T Omega S) = {smin:.4f} "
      f">= 1 - sqrt(k/r) = {1 - math.sqrt(k / r):.4f}")
print(f"||U^T Omega S||_2     = {smax:.4f} "
      f"<= 1 + sqrt(l/r) = {1 + math.sqrt(ell / r):.4f}")

# second run, same inputs: identical plan (fully deterministic)
again = barrier_dual_spectral(V, U, r)
print("deterministic:", np.array_equal(plan.indices, again.indices)
      and np.allclose(plan.weights, again.weights))

# Frobenius variant: the upper control is a norm budget, not a spectrum
g = np.random.default_rng(3)
A_cols = g.normal(size=(30, n))
fplan = barrier_dual_frobenius(V, A_cols, r)
kept = np.linalg.norm(apply_plan_columns(A_cols, fplan))
print(f"||A Omega S||_F = {kept:.4f} <= ||A||_F = {np.linalg.norm(A_cols):.4f}")
