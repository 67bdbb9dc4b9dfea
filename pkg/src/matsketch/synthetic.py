"""Reproducible synthetic instances for benches and tests."""

import numpy as np

from . import rng
from .errors import ArgumentError


def lowrank_plus_noise(m, n, k, noise, seed=0):
    """Rank-k signal with singular values k+9 .. 10 plus i.i.d. N(0, noise^2).

    noise=0 gives an exactly rank-k matrix.
    """
    if not (1 <= k <= min(m, n)):
        raise ArgumentError(f"need 1 <= k <= min(m,n), got k={k}")
    gen = rng.stream(seed, rng.SYNTH, 0)
    U, _ = np.linalg.qr(gen.standard_normal((m, k)))
    V, _ = np.linalg.qr(gen.standard_normal((n, k)))
    sig = np.linspace(10.0 + k - 1, 10.0, k)
    A = (U * sig) @ V.T
    if noise > 0:
        A = A + noise * gen.standard_normal((m, n))
    return A


def blobs(m, n, k, sep, seed=0, n_informative=None):
    """k Gaussian blobs: centers `sep` apart in an informative subspace,
    unit noise everywhere. Returns (points m x n, planted labels)."""
    if k < 1 or m < k or n < 1:
        raise ArgumentError(f"bad blob shape m={m}, n={n}, k={k}")
    d = n if n_informative is None else min(n_informative, n)
    gen = rng.stream(seed, rng.SYNTH, 1)
    centers = np.zeros((k, n))
    if d >= k:
        # scaled basis vectors: every pair of centers exactly sep apart
        centers[:, :k] = np.eye(k) * (sep / np.sqrt(2.0))
    else:
        raw = gen.standard_normal((k, d))
        raw /= np.linalg.norm(raw, axis=1, keepdims=True)
        centers[:, :d] = raw * (sep / np.sqrt(2.0))  # sep apart on average
    labels = np.arange(m) % k
    gen.shuffle(labels)
    pts = centers[labels] + gen.standard_normal((m, n))
    return pts, labels


def random_orthonormal(n, k, seed=0):
    """n x k with orthonormal columns, Haar-ish via QR of a Gaussian."""
    if not (1 <= k <= n):
        raise ArgumentError(f"need 1 <= k <= n, got k={k}, n={n}")
    gen = rng.stream(seed, rng.SYNTH, 2)
    Q, R = np.linalg.qr(gen.standard_normal((n, k)))
    # fix signs so the result is unique given the stream
    return Q * np.sign(np.diag(R))
