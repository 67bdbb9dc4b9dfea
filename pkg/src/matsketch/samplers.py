"""Column-sampling primitives.

Randomized: additive (column-norm) sampling, adaptive (residual-norm)
sampling, subspace (leverage) sampling. Deterministic: strong
rank-revealing QR selection and the dual-set barrier sparsifiers, which
greedily reweight indices while soft barrier potentials keep the smallest
eigenvalue of one accumulated quadratic form and the largest eigenvalue
(or trace) of another inside moving thresholds.
"""

import math
import warnings

import numpy as np
import scipy.linalg

from . import rng
from .errors import ArgumentError, InfeasibleStepError, NumericError, RankError
from .linalg import SamplingPlan, as_matrix, rank_cutoff, svd

_ORTHO_TOL = 1e-10


def additive_sampling(A, r, seed=0):
    """r i.i.d. column picks, p_i proportional to the squared column norm.

    Unit weights: span-based uses need no rescaling.
    """
    A = as_matrix(A)
    n = A.shape[1]
    if not (1 <= r <= n):
        raise ArgumentError(f"need 1 <= r <= n={n}, got r={r}")
    sq = np.einsum("ij,ij->j", A, A)
    total = sq.sum()
    if total <= 0:
        raise ArgumentError("zero matrix: column probabilities undefined")
    gen = rng.stream(seed, rng.ADDITIVE)
    idx = gen.choice(n, size=int(r), replace=True, p=sq / total)
    return SamplingPlan(n, [(int(i), 1.0) for i in idx], with_replacement=True)


def adaptive_sampling(A, C1, s, seed=0):
    """s i.i.d. picks proportional to residual column norms after C1.

    Residual B = A - C1 C1^+ A. If C1 already spans A the distribution is
    undefined; the plan then repeats the largest column of A and is marked
    degenerate (any choice preserves exactness).
    """
    A = as_matrix(A)
    C1 = as_matrix(C1, "C1", allow_empty_cols=True)
    if C1.shape[0] != A.shape[0]:
        raise ArgumentError("C1.rows must equal A.rows")
    if s < 1:
        raise ArgumentError(f"need s >= 1, got {s}")
    n = A.shape[1]
    if C1.shape[1] == 0:
        resid = A
    else:
        Q = svd(C1).U
        resid = A - Q @ (Q.T @ A)
    sq = np.einsum("ij,ij->j", resid, resid)
    total = sq.sum()
    fro2 = float(np.einsum("ij,ij->", A, A))
    if total <= (1e-10 ** 2) * fro2 or total <= 0:
        j = int(np.argmax(np.einsum("ij,ij->j", A, A)))
        return SamplingPlan(
            n, [(j, 1.0)] * int(s), with_replacement=True, note="degenerate-residual"
        )
    gen = rng.stream(seed, rng.ADAPTIVE)
    idx = gen.choice(n, size=int(s), replace=True, p=sq / total)
    return SamplingPlan(n, [(int(i), 1.0) for i in idx], with_replacement=True)


def subspace_sampling(X, beta, r, seed=0):
    """r i.i.d. row picks of X with leverage-mixture probabilities.

    beta = 1 gives p_i = ||x_i||^2 / ||X||_F^2; beta < 1 mixes with the
    uniform distribution: p_i = beta * lev_i + (1 - beta)/n. A pick of
    index i gets weight 1/sqrt(p_i * r).
    """
    X = as_matrix(X, "X")
    n = X.shape[0]
    if not (0 < beta <= 1):
        raise ArgumentError(f"need 0 < beta <= 1, got {beta}")
    if r < 1:
        raise ArgumentError(f"need r >= 1, got {r}")
    sq = np.einsum("ij,ij->i", X, X)
    total = sq.sum()
    if total <= 0:
        raise ArgumentError("zero matrix: leverage probabilities undefined")
    p = beta * (sq / total) + (1.0 - beta) / n
    gen = rng.stream(seed, rng.SUBSPACE)
    idx = gen.choice(n, size=int(r), replace=True, p=p / p.sum())
    w = 1.0 / np.sqrt(p[idx] * r)
    return SamplingPlan(
        n, [(int(i), float(wi)) for i, wi in zip(idx, w)], with_replacement=True
    )


def rrqr_select(X, f=2.0):
    """Strong rank-revealing QR selection of k rows of an n x k matrix.

    Runs column-pivoted QR on X^T, then swaps a selected column against a
    rejected one while any entry of A_k^{-1} B_k exceeds f (each swap grows
    |det A_k| by that entry, so the loop terminates). The k selected
    indices guarantee sigma_k(X^T Omega) >= sigma_k(X^T)/sqrt(f^2 k (n-k) + 1).
    """
    X = as_matrix(X, "X")
    n, k = X.shape
    if n < k:
        raise ArgumentError(f"need n >= k, got n={n} < k={k}")
    if not f > 1:
        raise ArgumentError(f"need f > 1, got {f}")
    Xt = np.ascontiguousarray(X.T)  # k x n
    sv = np.linalg.svd(Xt, compute_uv=False)
    if sv[-1] <= rank_cutoff(sv, Xt.shape):
        raise RankError(f"X has numerical rank < k={k}")
    if n == k:
        return SamplingPlan(n, [(i, 1.0) for i in range(n)], with_replacement=False)

    _, _, piv = scipy.linalg.qr(Xt, pivoting=True, mode="economic")
    perm = np.array(piv, dtype=int)
    cap = math.ceil(k * math.log(n) / math.log(f)) + 10 * k
    swaps = 0
    while True:
        R = np.linalg.qr(Xt[:, perm], mode="r")
        T = scipy.linalg.solve_triangular(R[:, :k], R[:, k:])
        i, j = np.unravel_index(np.argmax(np.abs(T)), T.shape)
        if abs(T[i, j]) <= f:
            break
        perm[i], perm[k + j] = perm[k + j], perm[i]
        swaps += 1
        if swaps > cap:
            raise NumericError(
                f"internal: RRQR swap loop exceeded cap {cap}; the determinant "
                "must strictly increase per swap, so this indicates a bug"
            )
    sel = np.sort(perm[:k])
    return SamplingPlan(n, [(int(i), 1.0) for i in sel], with_replacement=False)


# ---------------------------------------------------------------------------
# dual-set barrier sparsifiers


def _check_orthonormal(M, name):
    G = M.T @ M
    dev = float(np.max(np.abs(G - np.eye(M.shape[1]))))
    if dev > _ORTHO_TOL:
        raise ArgumentError(
            f"{name} must have orthonormal columns (deviation {dev:.2e} > {_ORTHO_TOL})"
        )


def _lower_values(VW, d, lam, L):
    """L(v_j) for all rows: barrier gain of the min-eigenvalue side."""
    q1 = (VW * VW / d).sum(axis=1)
    q2 = (VW * VW / (d * d)).sum(axis=1)
    denom = float(np.sum(1.0 / d) - np.sum(1.0 / (lam - L)))
    if denom <= 0:
        raise NumericError("internal: lower potential difference not positive")
    return q2 / denom - q1


def _barrier_core(V, r, upper):
    """Shared greedy loop.

    upper is one of
      ("matrix", U)      spectral control of an n x ell set,
      ("same", None)     U = V (single-set),
      ("identity", None) U = I_n fast path,
      ("columns", c_sq)  Frobenius/trace control, c_sq = squared column norms.
    Returns the merged, rescaled weight vector s (length n).
    """
    n, k = V.shape
    if not (k < r):
        raise ArgumentError(f"need k < r, got k={k}, r={r}")
    shrink = 1.0 - math.sqrt(k / r)
    sqrt_rk = math.sqrt(r * k)

    kind, data = upper
    if kind == "matrix":
        U = data
        ell = U.shape[1]
        dU = (1.0 + math.sqrt(ell / r)) / shrink
        B_acc = np.zeros((ell, ell))
    elif kind == "same":
        ell = k
        dU = (1.0 + math.sqrt(ell / r)) / shrink
    elif kind == "identity":
        ell = n
        dU = (1.0 + math.sqrt(ell / r)) / shrink
        diag_raw = np.zeros(n)
    else:  # columns
        c_sq = data
        total = float(c_sq.sum())
        dU = total / shrink
        UF = c_sq / dU if total > 0 else np.zeros(n)

    s = np.zeros(n)
    A_acc = np.zeros((k, k))
    for tau in range(int(r)):
        L = tau - sqrt_rk
        lam, W = np.linalg.eigh(A_acc)
        d = lam - (L + 1.0)
        if d.min() <= 0:
            raise NumericError("internal: lower barrier crossed")
        VW = V @ W
        Lvals = _lower_values(VW, d, lam, L)

        if kind == "columns":
            Uvals = UF
        else:
            Uthr = dU * (tau + math.sqrt(ell * r))
            if kind == "same":
                mu, UW = lam, VW
            elif kind == "matrix":
                mu, Wb = np.linalg.eigh(B_acc)
                UW = U @ Wb
            else:  # identity
                mu, UW = diag_raw, None
            e = (Uthr + dU) - mu
            if e.min() <= 0:
                raise NumericError("internal: upper barrier crossed")
            denomU = float(np.sum(1.0 / (Uthr - mu)) - np.sum(1.0 / e))
            if denomU <= 0:
                raise NumericError("internal: upper potential difference not positive")
            if kind == "identity":
                Uvals = (1.0 / (e * e)) / denomU + 1.0 / e
            else:
                Uvals = (UW * UW / (e * e)).sum(axis=1) / denomU + (
                    UW * UW / e
                ).sum(axis=1)

        tol = 1e-9 * np.maximum(1.0, np.abs(Lvals))
        feas = (Uvals <= Lvals + tol) & (Uvals + Lvals > 0)
        if not feas.any():
            raise InfeasibleStepError(
                tau,
                float(np.min(Uvals - Lvals)),
                "check that the input columns are orthonormal",
            )
        j = int(np.argmax(feas))  # smallest feasible index
        t = 2.0 / (Uvals[j] + Lvals[j])
        if not (t > 0 and math.isfinite(t)):
            raise InfeasibleStepError(tau, t, "nonpositive or non-finite weight")
        s[j] += t
        A_acc += t * np.outer(V[j], V[j])
        if kind == "matrix":
            B_acc += t * np.outer(U[j], U[j])
        elif kind == "identity":
            diag_raw[j] += t

    return s * (shrink / r)


def _plan_from_weights(s):
    nz = np.flatnonzero(s > 0)
    return SamplingPlan(
        len(s),
        [(int(i), float(math.sqrt(s[i]))) for i in nz],
        with_replacement=False,
    )


def barrier_dual_spectral(V, U, r):
    """Deterministic dual-set sparsifier (spectral/spectral).

    V n x k and U n x ell, both with orthonormal columns, k < r <= n.
    The returned plan satisfies sigma_k(V^T Omega S) >= 1 - sqrt(k/r) and
    ||U^T Omega S||_2 <= 1 + sqrt(ell/r), with at most r nonzero weights.
    Thresholds move as L_tau = tau - sqrt(rk), U_tau = dU (tau + sqrt(ell r))
    with dL = 1, dU = (1 + sqrt(ell/r)) / (1 - sqrt(k/r)); each step picks
    the smallest feasible index (U(u_j) <= L(v_j)), weight t = 2/(U + L);
    final weights are rescaled by (1 - sqrt(k/r))/r and stored as sqrt(s_i).
    """
    V = as_matrix(V, "V")
    U = as_matrix(U, "U")
    n, k = V.shape
    if U.shape[0] != n:
        raise ArgumentError("V and U must have the same number of rows")
    if not (k < r <= n):
        raise ArgumentError(f"need k < r <= n, got k={k}, r={r}, n={n}")
    _check_orthonormal(V, "V")
    same = U is V or (U.shape == V.shape and np.array_equal(U, V))
    if same:
        upper = ("same", None)
    elif U.shape[0] == U.shape[1] and np.array_equal(U, np.eye(n)):
        upper = ("identity", None)
    else:
        _check_orthonormal(U, "U")
        upper = ("matrix", U)
    return _plan_from_weights(_barrier_core(V, int(r), upper))


def barrier_single(V, r):
    """Single-set sparsifier: both singular-value bounds, 1 +- sqrt(k/r).

    Exactly barrier_dual_spectral(V, V, r).
    """
    return barrier_dual_spectral(V, V, r)


def barrier_dual_frobenius(V, A_cols, r):
    """Dual-set sparsifier, spectral lower bound + Frobenius upper bound.

    V n x k orthonormal; A_cols is ell x n (its n COLUMNS pair with the n
    rows of V). Guarantees sigma_k(V^T Omega S) >= 1 - sqrt(k/r) and
    ||A_cols Omega S||_F <= ||A_cols||_F. Upper side uses the constant
    per-index potential U_F(a_j) = ||a_j||^2 / dU with
    dU = sum_i ||a_i||^2 / (1 - sqrt(k/r)) and thresholds U_tau = tau * dU;
    a zero A_cols makes the Frobenius condition vacuous.
    """
    V = as_matrix(V, "V")
    A_cols = as_matrix(A_cols, "A_cols")
    n, k = V.shape
    if A_cols.shape[1] != n:
        raise ArgumentError(
            f"A_cols must have n={n} columns, got {A_cols.shape[1]}"
        )
    if not (k < r <= n):
        raise ArgumentError(f"need k < r <= n, got k={k}, r={r}, n={n}")
    _check_orthonormal(V, "V")
    c_sq = np.einsum("ij,ij->j", A_cols, A_cols)
    return _plan_from_weights(_barrier_core(V, int(r), ("columns", c_sq)))


def barrier_dual_general(X, Y, r, mode="spectral"):
    """Barrier sparsification for inputs that are not orthonormal.

    Runs the matching barrier routine on the left-singular-vector factor of
    X (and of Y in spectral mode). Guarantees, with rho = rank(X):
    ||(X^T Omega S)^+||_2 * (1 - sqrt(rho/r)) <= ||(X^T)^+||_2, plus
    ||Y^T Omega S||_2 <= (1 + sqrt(rank(Y)/r)) ||Y^T||_2 in spectral mode or
    ||Y Omega S||_F <= ||Y||_F in frobenius mode (Y then ell x n). Inputs
    that are already orthonormal are passed through unchanged, so the
    output matches the non-general routine exactly.
    """
    X = as_matrix(X, "X")
    n = X.shape[0]

    def _left_factor(M):
        G = M.T @ M
        if float(np.max(np.abs(G - np.eye(M.shape[1])))) <= _ORTHO_TOL:
            return M
        return svd(M).U

    UX = _left_factor(X)
    rho = UX.shape[1]
    if not (rho < r <= n):
        raise ArgumentError(f"need rank(X)={rho} < r <= n={n}, got r={r}")
    if mode == "spectral":
        Y = as_matrix(Y, "Y")
        if Y.shape[0] != n:
            raise ArgumentError("Y must have the same row count as X")
        UY = _left_factor(Y)
        return barrier_dual_spectral(UX, UY, r)
    if mode == "frobenius":
        return barrier_dual_frobenius(UX, Y, r)
    raise ArgumentError(f"unknown mode {mode!r}")
