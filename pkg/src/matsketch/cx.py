"""Column selection: oversampled CX, exactly-k subset selection, and
interpolative decomposition, each packaged with its certified bound.

Every routine returns a CxResult holding the sampling plan, the selected
(and possibly rescaled) columns C, the measured rank-k reconstruction
errors, and the bound the construction certifies. Frobenius errors are
exact optima over span(C); spectral errors use the same restricted
factorization, which is within sqrt(2) of the spectral optimum, and the
per-instance spectral bounds already include that factor.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import rng
from .approx_svd import fast_frobenius_svd, fast_spectral_svd
from .errors import ArgumentError
from .linalg import (SamplingPlan, apply_plan_columns, as_matrix,
                     best_rank_k_in_subspace, svd)
from .samplers import (adaptive_sampling, barrier_dual_frobenius,
                       barrier_dual_spectral, barrier_single, rrqr_select,
                       subspace_sampling)


@dataclass(frozen=True)
class CxResult:
    plan: SamplingPlan
    C: np.ndarray
    rank_k_error_spectral: float
    rank_k_error_frobenius: float
    bound_value: float
    baseline_sigma: float
    norm: str
    bound_formula: str


def _baselines(s, k):
    """(sigma_{k+1}, ||A - A_k||_F) from the singular value list."""
    tail = s[k:]
    if tail.size == 0:
        return 0.0, 0.0
    return float(tail[0]), float(np.linalg.norm(tail))


def _measure(A, C, k):
    approx, _ = best_rank_k_in_subspace(A, C, k)
    R = A - approx
    return float(np.linalg.norm(R, 2)), float(np.linalg.norm(R))


def _result(A, k, plan, bound_value, baseline, norm, formula):
    C = apply_plan_columns(A, plan)
    err_s, err_f = _measure(A, C, k)
    return CxResult(plan=plan, C=C, rank_k_error_spectral=err_s,
                    rank_k_error_frobenius=err_f,
                    bound_value=float(bound_value),
                    baseline_sigma=float(baseline), norm=norm,
                    bound_formula=formula)


def _check_kr(A, k, r, min_k):
    m, n = A.shape
    if not (min_k <= k <= min(m, n)):
        raise ArgumentError(f"need {min_k} <= k <= min(m,n)={min(m, n)}, got k={k}")
    if not (k < r <= n):
        raise ArgumentError(f"need k < r <= n, got k={k}, r={r}, n={n}")


def cx_spectral(A, k, r, mode="deterministic", seed=0):
    """Pick r > k rescaled columns with a spectral rank-k reconstruction bound.

    deterministic: dual barrier selection on the top-k and residual right
    singular subspaces; the bound
    sqrt(2) * (1 + (1+sqrt((rho-k)/r)) / (1-sqrt(k/r))) * sigma_{k+1}
    holds on every run (the sqrt(2) covers the restricted-SVD estimator).
    fast: sketch the top subspace first, then run the barrier against the
    identity; the analogous bound with sqrt(n/r) holds in expectation with
    leading constant sqrt(2)+1.
    """
    A = as_matrix(A)
    n = A.shape[1]
    if mode == "deterministic":
        _check_kr(A, k, r, 1)
        shrink = 1.0 - math.sqrt(k / r)
        f = svd(A)
        rho = f.rank
        if k > rho:
            raise ArgumentError(f"k={k} exceeds rank(A)={rho}")
        sig1, _ = _baselines(f.singular_values, k)
        if rho > k:
            plan = barrier_dual_spectral(f.V[:, :k], f.V[:, k:], r)
            const = 1.0 + (1.0 + math.sqrt((rho - k) / r)) / shrink
        else:
            # nothing outside the top subspace; a single-set run suffices
            plan = barrier_single(f.V, r)
            const = 1.0 + 1.0 / shrink
        bound = math.sqrt(2.0) * const * sig1
        formula = "sqrt(2)*(1+(1+sqrt((rho-k)/r))/(1-sqrt(k/r)))*sigma_{k+1}"
        return _result(A, k, plan, bound, sig1, "spectral", formula)
    if mode == "fast":
        _check_kr(A, k, r, 2)
        shrink = 1.0 - math.sqrt(k / r)
        basis = fast_spectral_svd(A, k, 1, seed=seed)
        plan = barrier_dual_spectral(basis.Z, np.eye(n), r)
        sig1, _ = _baselines(svd(A).singular_values, k)
        const = (math.sqrt(2.0) + 1.0) * (1.0 + (1.0 + math.sqrt(n / r)) / shrink)
        formula = "E: (sqrt(2)+1)*(1+(1+sqrt(n/r))/(1-sqrt(k/r)))*sigma_{k+1}"
        return _result(A, k, plan, const * sig1, sig1, "spectral", formula)
    raise ArgumentError(f"unknown mode {mode!r} (expected deterministic|fast)")


def cx_frobenius(A, k, r, mode="deterministic", seed=0):
    """Pick r > k rescaled columns with a Frobenius rank-k bound.

    deterministic: per-instance
    ||A - Pi_{C,k}(A)||_F <= sqrt(1 + 1/(1-sqrt(k/r))^2) * ||A - A_k||_F.
    fast: same construction on a sketched subspace, bound in expectation
    with both terms inflated by 1.1.
    relative: barrier stage of width 4k plus r-4k adaptively sampled
    residual columns; E err^2 <= (1 + 6k/(r-4k)) * ||A - A_k||_F^2.
    """
    A = as_matrix(A)
    if mode == "deterministic":
        _check_kr(A, k, r, 1)
        shrink = 1.0 - math.sqrt(k / r)
        f = svd(A)
        if k > f.rank:
            raise ArgumentError(f"k={k} exceeds rank(A)={f.rank}")
        Vk = f.V[:, :k]
        _, base_f = _baselines(f.singular_values, k)
        plan = barrier_dual_frobenius(Vk, A - (A @ Vk) @ Vk.T, r)
        bound = math.sqrt(1.0 + 1.0 / shrink ** 2) * base_f
        formula = "sqrt(1+1/(1-sqrt(k/r))^2)*||A-A_k||_F"
        return _result(A, k, plan, bound, base_f, "frobenius", formula)
    if mode == "fast":
        _check_kr(A, k, r, 2)
        shrink = 1.0 - math.sqrt(k / r)
        Z = fast_frobenius_svd(A, k, 0.1, seed=seed).Z
        plan = barrier_dual_frobenius(Z, A - (A @ Z) @ Z.T, r)
        _, base_f = _baselines(svd(A).singular_values, k)
        bound = math.sqrt(1.1 * (1.0 + 1.0 / shrink ** 2)) * base_f
        formula = "E: sqrt(1.1+1.1/(1-sqrt(k/r))^2)*||A-A_k||_F"
        return _result(A, k, plan, bound, base_f, "frobenius", formula)
    if mode == "relative":
        n = A.shape[1]
        if not (2 <= k <= min(A.shape)):
            raise ArgumentError(f"need 2 <= k <= min(m,n), got k={k}")
        if not (4 * k < r <= n):
            raise ArgumentError(f"need 4k < r <= n, got k={k}, r={r}, n={n}")
        if r <= 10 * k:
            warnings.warn(
                f"relative-error guarantee is proved for r > 10k; r={r} <= {10 * k} "
                "keeps the expectation bound but thins the safety margin",
                stacklevel=2)
        Z = fast_frobenius_svd(A, k, 0.1, seed=seed).Z
        plan1 = barrier_dual_frobenius(Z, A - (A @ Z) @ Z.T, 4 * k)
        C1 = apply_plan_columns(A, plan1)
        plan2 = adaptive_sampling(A, C1, r - 4 * k,
                                  seed=rng.derive_seed(seed, rng.ADAPTIVE, 0))
        picks = tuple(plan1.picks) + tuple(plan2.picks)
        plan = SamplingPlan(source_dim=n, picks=picks, with_replacement=True,
                            note="barrier+adaptive")
        _, base_f = _baselines(svd(A).singular_values, k)
        bound = math.sqrt(1.0 + 6.0 * k / (r - 4 * k)) * base_f
        formula = "E^2: (1+6k/(r-4k))*||A-A_k||_F^2"
        return _result(A, k, plan, bound, base_f, "frobenius", formula)
    raise ArgumentError(
        f"unknown mode {mode!r} (expected deterministic|fast|relative)")


def cssp(A, k, mode="spectral", delta=0.1, seed=0):
    """Select exactly k columns (unit weights, no rescaling).

    spectral: sketched top subspace + strong RRQR;
    E ||A - CC+A||_2 <= 4 sqrt(4k(n-k)+1) sigma_{k+1}.
    frobenius: barrier stage of width 4k, then RRQR inside the sampled
    block; E ||A - CC+A||_F <= 9k ||A - A_k||_F.
    two_stage: leverage-score sampling of 8k ln(2k/delta) columns, then
    RRQR; w.p. >= 1-3delta the error is within
    26k sqrt(ln(2k/delta))/delta of ||A - A_k||_F.
    """
    A = as_matrix(A)
    n = A.shape[1]
    min_k = 1 if mode == "two_stage" else 2
    if not (min_k <= k <= min(A.shape)):
        raise ArgumentError(f"need {min_k} <= k <= min(m,n), got k={k}")
    if k >= n:
        raise ArgumentError(f"need k < n to have columns to reject, got k={k}, n={n}")
    if mode == "spectral":
        Z = fast_spectral_svd(A, k, 0.5, seed=seed).Z
        sel = rrqr_select(Z)
        bound_const = 4.0 * math.sqrt(4.0 * k * (n - k) + 1.0)
        base, _ = _baselines(svd(A).singular_values, k)
        formula = "E: 4*sqrt(4k(n-k)+1)*sigma_{k+1}"
        norm = "spectral"
    elif mode == "frobenius":
        Z = fast_frobenius_svd(A, k, 0.5, seed=seed).Z
        plan1 = barrier_dual_frobenius(Z, A - (A @ Z) @ Z.T, 4 * k)
        X = plan1.weights[:, None] * Z[plan1.indices]
        inner = rrqr_select(X)
        sel = SamplingPlan(source_dim=n,
                           picks=tuple((int(plan1.indices[j]), 1.0)
                                       for j in inner.indices))
        bound_const = 9.0 * k
        _, base = _baselines(svd(A).singular_values, k)
        formula = "E: 9k*||A-A_k||_F"
        norm = "frobenius"
    elif mode == "two_stage":
        if not (0.0 < delta < 1.0):
            raise ArgumentError(f"need 0 < delta < 1, got {delta}")
        if k == 1:
            Z = svd(A).V[:, :1]
        else:
            Z = fast_frobenius_svd(A, k, 0.5, seed=seed).Z
        r1 = math.ceil(8.0 * k * math.log(2.0 * k / delta))
        plan1 = subspace_sampling(Z, 1.0, max(r1, k),
                                  seed=rng.derive_seed(seed, rng.CSSP, 0))
        X = plan1.weights[:, None] * Z[plan1.indices]
        inner = rrqr_select(X)
        sel = SamplingPlan(source_dim=n,
                           picks=tuple(sorted((int(plan1.indices[j]), 1.0)
                                              for j in inner.indices)))
        bound_const = 26.0 * k * math.sqrt(math.log(2.0 * k / delta)) / delta
        _, base = _baselines(svd(A).singular_values, k)
        formula = "w.p. 1-3delta: 26k*sqrt(ln(2k/delta))/delta*||A-A_k||_F"
        norm = "frobenius"
    else:
        raise ArgumentError(
            f"unknown mode {mode!r} (expected spectral|frobenius|two_stage)")
    return _result(A, k, sel, bound_const * base, base, norm, formula)


def interpolative_decomposition(A, k, seed=0):
    """A ~= C X with C k true columns of A and X of small, bounded entries.

    Returns (C, X, plan). X contains an exact k x k identity block at the
    selected columns, max |X_ij| <= 2, ||X||_2 <= sqrt(4k(n-k)) + 1 and
    sigma_min(X) >= 1. If k = rank(A) then A = CX; in general
    E ||A - CX||_2 <= 4 sqrt(4k(n-k)+1) sigma_{k+1}.
    """
    A = as_matrix(A)
    if not (2 <= k <= min(A.shape)):
        raise ArgumentError(f"need 2 <= k <= min(m,n), got k={k}")
    Z = fast_spectral_svd(A, k, 0.5, seed=seed).Z
    plan = rrqr_select(Z)
    sel = plan.indices
    C = A[:, sel].copy()
    X = np.linalg.solve(Z[sel].T, Z.T)
    X[:, sel] = np.eye(k)
    return C, X, plan


def lower_bound_instance(n, alpha):
    """The worst-case matrix for column selection: no r columns do better
    than a squared spectral ratio of (n + alpha^2)/(r + alpha^2).

    Columns are e_1 + alpha * e_{j+1} in R^{n+1}; sigma_1^2 = n + alpha^2
    and every other squared singular value is alpha^2.
    """
    if n < 2:
        raise ArgumentError(f"need n >= 2, got {n}")
    if not (alpha > 0):
        raise ArgumentError(f"need alpha > 0, got {alpha}")
    A = np.zeros((n + 1, n))
    A[0, :] = 1.0
    A[np.arange(1, n + 1), np.arange(n)] = alpha
    return A
