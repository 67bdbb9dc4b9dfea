"""Row coresets for constrained least squares, plus the solvers needed
to evaluate them end to end.

A coreset here is a small weighted subset of rows (or, for the srht
method, of randomized row mixtures) whose constrained LS solution is
within (1+eps) of the full-data optimum. The constraint set is either
unconstrained or the nonnegative orthant; the solver seam accepts just
these two tags.
"""

import math
import time
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import rng
from .errors import ArgumentError, ConvergenceError, NumericError, RankError
from .linalg import apply_plan_rows, as_matrix, as_vector, pseudo_inverse, svd
from .samplers import _barrier_core, _plan_from_weights, subspace_sampling
from .sketch import srht_rows

_CONSTRAINTS = ("none", "nonnegative")


@dataclass(frozen=True)
class RegressionProblem:
    A: np.ndarray
    b: np.ndarray
    constraint: str = "none"

    def __post_init__(self):
        A = as_matrix(self.A)
        b = as_vector(self.b, "b")
        m, n = A.shape
        if m <= n:
            raise ArgumentError(f"need more rows than columns, got {m}x{n}")
        if b.shape[0] != m:
            raise ArgumentError(f"b has length {b.shape[0]}, expected {m}")
        if self.constraint not in _CONSTRAINTS:
            raise ArgumentError(
                f"constraint must be one of {_CONSTRAINTS}, got {self.constraint!r}")
        if svd(A).rank != n:
            raise RankError(f"design matrix is rank-deficient (rank < {n})")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class Coreset:
    """Rows C, targets b_c, and the plan that produced them.

    For barrier and subspace methods C and b_c are exactly the weighted
    selected rows of (A, b). For srht the plan indexes rows of the
    sign-flipped Hadamard transform of the zero-padded data, so C is a
    mixture of original rows rather than a subset.
    """

    plan: object
    C: np.ndarray
    b_c: np.ndarray
    method: str
    eps: float
    delta: float = field(default=float("nan"))


def coreset_size(method, n, eps, delta, m):
    """The theorem's coreset row count for an m x n problem."""
    d = n + 1
    if method == "barrier":
        return math.ceil(225.0 * d / eps ** 2)
    if method == "subspace":
        return math.ceil(36.0 * d * math.log(2.0 * d / delta) / eps ** 2)
    if method == "srht":
        return math.ceil(72.0 * d * math.log(2.0 * d / delta)
                         * math.log2(40.0 * d * m) / eps ** 2)
    raise ArgumentError(
        f"unknown method {method!r} (expected barrier|subspace|srht)")


def build_coreset(p, eps, method="barrier", delta=0.1, seed=0, r_override=None):
    """Build a coreset whose LS solution is (1+eps)-good on the full data.

    barrier: deterministic, r = ceil(225(n+1)/eps^2), guarantee holds on
    every run. subspace: leverage-score row sampling,
    r = ceil(36(n+1) ln(2(n+1)/delta)/eps^2), holds w.p. >= 1-delta.
    srht: uniform sampling of Hadamard-mixed rows with
    r = ceil(72(n+1) ln(2(n+1)/delta) log2(40(n+1)m)/eps^2), holds w.p.
    >= 0.95-delta. r_override replaces the formula count (the guarantee
    then no longer applies; meant for desk-scale experiments).
    """
    if not isinstance(p, RegressionProblem):
        raise ArgumentError("build_coreset expects a RegressionProblem")
    if not (0.0 < eps < 1.0):
        raise ArgumentError(f"need 0 < eps < 1, got {eps}")
    if eps > 1.0 / 3.0:
        warnings.warn(
            f"eps={eps} is outside the proved range (0, 1/3]; the (1+eps) "
            "guarantee is not certified out here", stacklevel=2)
    if method in ("subspace", "srht") and not (0.0 < delta < 1.0):
        raise ArgumentError(f"need 0 < delta < 1, got {delta}")
    m, n = p.A.shape
    r = coreset_size(method, n, eps, delta, m) if r_override is None else int(r_override)
    if r < 1:
        raise ArgumentError(f"need at least one row, got r={r}")

    Y = np.column_stack([p.A, p.b])
    fY = svd(Y)
    U_Y = fY.U  # m x k, k = rank(Y) <= n+1

    if method == "barrier":
        if r > m:
            # the weighting loop runs fine past m steps and still emits at
            # most m distinct rows, so oversized formula counts only cost time
            warnings.warn(
                f"formula coreset size r={r} exceeds m={m}; continuing "
                "(at most m distinct weighted rows come out)", stacklevel=2)
        if r <= fY.rank:
            raise ArgumentError(
                f"coreset size r={r} must exceed rank(Y)={fY.rank}")
        weights = _barrier_core(U_Y, r, ("same", None))
        plan = _plan_from_weights(weights)
        C = apply_plan_rows(p.A, plan)
        b_c = plan.weights * p.b[plan.indices]
        delta_used = float("nan")
    elif method == "subspace":
        if r > m:
            raise ArgumentError(
                f"coreset larger than data: r={r} > m={m} "
                "(shrink eps/delta or pass r_override)")
        plan = subspace_sampling(U_Y, 1.0, r,
                                 seed=rng.derive_seed(seed, rng.CORESET, 0))
        C = apply_plan_rows(p.A, plan)
        b_c = plan.weights * p.b[plan.indices]
        delta_used = float(delta)
    elif method == "srht":
        if r > m:
            raise ArgumentError(
                f"coreset larger than data: r={r} > m={m} "
                "(shrink eps/delta or pass r_override)")
        C, b_c, plan = srht_rows(p.A, p.b, r,
                                 seed=rng.derive_seed(seed, rng.CORESET, 1))
        delta_used = float(delta)
    else:
        raise ArgumentError(
            f"unknown method {method!r} (expected barrier|subspace|srht)")
    return Coreset(plan=plan, C=C, b_c=b_c, method=method, eps=float(eps),
                   delta=delta_used)


def _lawson_hanson(C, b):
    """Active-set NNLS: argmin_{x >= 0} ||Cx - b||^2."""
    m, n = C.shape
    x = np.zeros(n)
    passive = np.zeros(n, dtype=bool)
    scale = max(1.0, float(np.abs(C.T @ b).max()))
    wtol = 1e-10 * scale
    cap = 3 * n
    cycles = 0
    w = C.T @ b
    while (~passive).any() and (w[~passive] > wtol).any():
        cycles += 1
        if cycles > cap:
            raise ConvergenceError(
                f"NNLS exceeded {cap} active-set cycles on {m}x{n} system")
        j = int(np.argmax(np.where(passive, -np.inf, w)))
        passive[j] = True
        while True:
            z = np.zeros(n)
            z[passive] = np.linalg.lstsq(C[:, passive], b, rcond=None)[0]
            if z[passive].min() > 0.0:
                x = z
                break
            cycles += 1
            if cycles > cap:
                raise ConvergenceError(
                    f"NNLS exceeded {cap} active-set cycles on {m}x{n} system")
            drop = passive & (z <= 0.0)
            alpha = float(np.min(x[drop] / (x[drop] - z[drop])))
            x = x + alpha * (z - x)
            passive &= x > 1e-14 * scale
            x[~passive] = 0.0
        w = C.T @ (b - C @ x)

    # KKT: zero gradient on the support, nonnegative dual off it
    gtol = 1e-8 * scale
    if passive.any() and float(np.abs(w[passive]).max()) > gtol:
        raise NumericError("NNLS left a nonzero gradient on the support")
    if (~passive).any() and float(w[~passive].max()) > gtol:
        raise NumericError("NNLS left a strictly improving inactive variable")
    return x


def solve_ls(C, b, constraint="none"):
    """Least squares under the problem's constraint tag.

    none: minimum-norm solution via the pseudo-inverse. nonnegative:
    Lawson-Hanson active-set iteration, verified against its KKT
    conditions before returning.
    """
    C = as_matrix(C)
    b = as_vector(b, "b")
    if C.shape[0] != b.shape[0]:
        raise ArgumentError(
            f"C has {C.shape[0]} rows but b has length {b.shape[0]}")
    if constraint == "none":
        return pseudo_inverse(C) @ b
    if constraint == "nonnegative":
        return _lawson_hanson(C, b)
    raise ArgumentError(
        f"constraint must be one of {_CONSTRAINTS}, got {constraint!r}")


def evaluate_coreset(p, c):
    """Solve full and coreset problems, report the objective ratio.

    The ratio is ||A x_coreset - b||^2 / ||A x_full - b||^2, both
    residuals measured on the full data. A zero full residual with a
    zero coreset residual reports ratio 1.0; zero full with nonzero
    coreset reports +inf (ratio_finite=False).
    """
    t0 = time.perf_counter()
    x_full = solve_ls(p.A, p.b, p.constraint)
    t_full = time.perf_counter() - t0
    t0 = time.perf_counter()
    x_core = solve_ls(c.C, c.b_c, p.constraint)
    t_core = time.perf_counter() - t0

    r_full = float(np.linalg.norm(p.A @ x_full - p.b) ** 2)
    r_core = float(np.linalg.norm(p.A @ x_core - p.b) ** 2)
    floor = (1e-12 * max(1.0, float(np.linalg.norm(p.b)))) ** 2
    if r_full <= floor:
        ratio = 1.0 if r_core <= floor else float("inf")
    else:
        ratio = r_core / r_full
    return {
        "ratio": ratio,
        "ratio_finite": math.isfinite(ratio),
        "full_objective": r_full,
        "coreset_objective_on_full": r_core,
        "coreset_rows": len(c.plan),
        "distinct_rows": int(np.unique(c.plan.indices).size),
        "m": int(p.A.shape[0]),
        "n": int(p.A.shape[1]),
        "constraint": p.constraint,
        "method": c.method,
        "eps": c.eps,
        "delta": c.delta,
        "full_solve_seconds": t_full,
        "coreset_solve_seconds": t_core,
    }
