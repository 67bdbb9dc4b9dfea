"""Shared helpers for the test suite."""

import hashlib

import numpy as np


def rand(seed):
    """Test-local generator, independent of the package streams."""
    return np.random.default_rng(seed)


def digest(*arrays):
    """Stable fingerprint of a tuple of float arrays."""
    h = hashlib.sha256()
    for a in arrays:
        a = np.ascontiguousarray(np.asarray(a, dtype=float))
        h.update(str(a.shape).encode())
        h.update(a.tobytes())
    return h.hexdigest()


def plan_digest(plan):
    return digest(plan.indices.astype(float), plan.weights)
