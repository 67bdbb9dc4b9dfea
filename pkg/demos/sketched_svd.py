"""Approximate the top-k subspace from a random sketch instead of a full SVD.

The Frobenius variant projects onto a slightly oversampled sketch; the
spectral variant adds power iterations until the two-norm error is
within (sqrt(2)+eps) of optimal in expectation.
"""

import math

import numpy as np

from matsketch import fast_frobenius_svd, fast_spectral_svd, svd
from matsketch.synthetic import lowrank_plus_noise

A = lowrank_plus_noise(300, 200, 5, 0.2, seed=9)
k = 5
s = svd(A).singular_values
opt_f = float(np.linalg.norm(s[k:]))
opt_2 = float(s[k])
print(f"exact tails: ||A-A_k||_F = {opt_f:.4f}, sigma_{k + 1} = {opt_2:.4f}")

errs = []
for seed in range(20):
    Z = fast_frobenius_svd(A, k, 0.5, seed=seed).Z
    errs.append(np.linalg.norm(A - (A @ Z) @ Z.T) ** 2)
print(f"frobenius sketch, 20 seeds: mean ||E||_F^2 = {np.mean(errs):.4f}"
      f" <= 1.5 * {opt_f**2:.4f} = {1.5 * opt_f**2:.4f}")

errs = []
power = None
for seed in range(20):
    basis = fast_spectral_svd(A, k, 1.0, seed=seed)
    power = basis.power
    errs.append(np.linalg.norm(A - (A @ basis.Z) @ basis.Z.T, 2))
bound = (math.sqrt(2) + 1.0) * opt_2
print(f"spectral sketch ({power} power steps), 20 seeds: "
      f"mean ||E||_2 = {np.mean(errs):.4f} <= {bound:.4f}")

# the basis is orthonormal and the residual is orthogonal to it
Z = fast_frobenius_svd(A, k, 0.5, seed=0).Z
E = A - (A @ Z) @ Z.T
print(f"||Z^T Z - I|| = {np.abs(Z.T @ Z - np.eye(k)).max():.2e}, "
      f"||E Z|| = {np.linalg.norm(E @ Z):.2e}")
