"""Acceptance gate: twelve headline guarantees at desk scale.

Each criterion is one test that prints a single PASS/FAIL line with the
measured statistic before asserting, so a red criterion still reports
what was observed. Deterministic theorems allow zero failures at a
1e-9 float tolerance; expectation bounds get the slack factor named in
the matching docstring (1.05 or 1.10) on top of the proved constant.
Seeds are fixed; nothing here is tuned per run.
"""

import math
import time
import warnings
from itertools import permutations

import numpy as np
import pytest

from matsketch import (ArgumentError, ClusterAssignment, RegressionProblem,
                       all_subset_errors, apply_plan_columns,
                       barrier_dual_frobenius, barrier_dual_spectral,
                       best_subset_exhaustive, build_coreset, cssp,
                       cx_frobenius, evaluate_coreset,
                       fast_frobenius_svd, fast_spectral_svd,
                       indicator_matrix, interpolative_decomposition,
                       kmeans_cost, lloyd, lower_bound_instance,
                       pseudo_inverse, reduce_features, rrqr_select,
                       srht_lowrank, svd)
from matsketch import rng
from matsketch.samplers import (adaptive_sampling, additive_sampling,
                                subspace_sampling)
from matsketch.sketch import gaussian_sketch, sign_sketch, srht_rows
from matsketch.synthetic import blobs, lowrank_plus_noise, random_orthonormal

from conftest import digest, plan_digest, rand


def _verdict(num, name, ok, detail):
    line = f"criterion {num:02d} {'PASS' if ok else 'FAIL'} {name}: {detail}"
    print(line)
    assert ok, line


TOL = 1e-9                   # float slop on deterministic theorems
MEAN_SLACK_05 = 1.05         # Monte-Carlo slack on sketched-SVD means
MEAN_SLACK_10 = 1.10         # Monte-Carlo slack on selection means
BARRIER_CONFIGS = [(3, 5, 12), (5, 5, 20), (4, 9, 16)]  # (k, ell, r), n=200


def test_criterion_01_barrier_dual_set_bounds():
    n, fails, checked = 200, 0, 0
    worst = ""
    for k, ell, r in BARRIER_CONFIGS:
        lo = 1.0 - math.sqrt(k / r)
        hi = 1.0 + math.sqrt(ell / r)
        for t in range(100):
            V = random_orthonormal(n, k, seed=rng.derive_seed(1, k, ell, t, 0))
            U = random_orthonormal(n, ell, seed=rng.derive_seed(1, k, ell, t, 1))
            plan = barrier_dual_spectral(V, U, r)
            smin = np.linalg.svd(apply_plan_columns(V.T, plan),
                                 compute_uv=False)[-1]
            smax = np.linalg.svd(apply_plan_columns(U.T, plan),
                                 compute_uv=False)[0]
            checked += 1
            if smin < lo - TOL or smax > hi + TOL:
                fails += 1
                worst = f" e.g. (k,l,r)=({k},{ell},{r}) smin={smin} smax={smax}"
    _verdict(1, "dual-set barrier spectral bounds", fails == 0,
             f"{checked - fails}/{checked} instances inside "
             f"[1-sqrt(k/r), 1+sqrt(l/r)] +- {TOL}{worst}")


def test_criterion_02_barrier_frobenius_variant():
    n, fails, checked = 200, 0, 0
    for k, ell, r in BARRIER_CONFIGS:
        lo = 1.0 - math.sqrt(k / r)
        for t in range(100):
            g = rand(rng.derive_seed(2, k, ell, t))
            V = random_orthonormal(n, k, seed=rng.derive_seed(2, k, ell, t, 1))
            A_cols = g.normal(size=(ell, n))
            plan = barrier_dual_frobenius(V, A_cols, r)
            smin = np.linalg.svd(apply_plan_columns(V.T, plan),
                                 compute_uv=False)[-1]
            f_in = np.linalg.norm(A_cols)
            f_out = np.linalg.norm(apply_plan_columns(A_cols, plan))
            checked += 1
            if smin < lo - TOL or f_out > f_in + TOL:
                fails += 1
    _verdict(2, "dual-set barrier Frobenius variant", fails == 0,
             f"{checked - fails}/{checked} instances with "
             f"||A~||_F <= ||A||_F + {TOL} and the sigma_k bound")


def test_criterion_03_deterministic_cx_per_instance():
    k, r, fails = 2, 8, 0
    ratios = []
    for s in range(50):
        A = lowrank_plus_noise(100, 80, k, 0.05, seed=rng.derive_seed(3, s))
        res = cx_frobenius(A, k, r, mode="deterministic")
        ratios.append(res.rank_k_error_frobenius / res.baseline_sigma)
        if res.rank_k_error_frobenius > res.bound_value * (1.0 + 1e-12) + 1e-12:
            fails += 1
    _verdict(3, "oversampled CX per-instance sqrt(5) bound", fails == 0,
             f"50 instances, worst ratio {max(ratios):.4f} "
             f"vs bound {math.sqrt(5):.4f}, {fails} failures")


def test_criterion_04_relative_error_cx_expectation():
    k, r = 2, 40
    bound = 1.0 + 6.0 * k / (r - 4 * k)  # 1.375
    A = lowrank_plus_noise(100, 80, k, 0.05, seed=4)
    base = svd(A)
    tail = float(np.linalg.norm(base.singular_values[k:]))
    sq = [(cx_frobenius(A, k, r, mode="relative",
                        seed=s).rank_k_error_frobenius / tail) ** 2
          for s in range(50)]
    mean_sq = float(np.mean(sq))
    _verdict(4, "relative-error CX expectation bound",
             mean_sq <= bound * MEAN_SLACK_10,
             f"mean sq ratio {mean_sq:.4f} <= {bound} * {MEAN_SLACK_10} "
             f"over 50 seeds")


def test_criterion_05_strong_rrqr():
    k, n = 2, 10
    floor = math.sqrt(4.0 * k * (n - k) + 1.0)  # sqrt(65) at f=2
    fails = 0
    for s in range(100):
        X = rand(rng.derive_seed(5, s)).normal(size=(n, k))
        plan = rrqr_select(X)
        got = np.linalg.svd(X[plan.indices].T, compute_uv=False)[-1]
        ref = np.linalg.svd(X.T, compute_uv=False)[-1]
        if got < ref / floor - TOL:
            fails += 1
    chain_ok = True
    floor6 = math.sqrt(4.0 * k * (6 - k) + 1.0)
    for s in range(20):
        X = rand(rng.derive_seed(5, 100 + s)).normal(size=(6, k))
        plan = rrqr_select(X)
        alg = np.linalg.svd(X[plan.indices].T, compute_uv=False)[-1]
        best = max(np.linalg.svd(X[list(cols)].T, compute_uv=False)[-1]
                   for cols in permutations(range(6), k))
        ref = np.linalg.svd(X.T, compute_uv=False)[-1]
        if not (best >= alg - TOL and alg >= ref / floor6 - TOL):
            chain_ok = False
    _verdict(5, "strong rank-revealing QR floor", fails == 0 and chain_ok,
             f"{100 - fails}/100 instances above sigma_k/sqrt(65) - {TOL}; "
             f"oracle >= algorithm >= floor chain on 20 n=6 instances: "
             f"{chain_ok}")


def test_criterion_06_lower_bound_instance_exhaustive():
    n, worst = 5, 0.0
    for alpha in (0.1, 1.0):
        A = lower_bound_instance(n, alpha)
        for r in (1, 2, 3, 4):
            closed = (n + alpha ** 2) / (r + alpha ** 2)
            _, errs = all_subset_errors(A, r, norm="spectral")
            sq = (np.asarray(errs) / alpha) ** 2
            worst = max(worst, float(np.max(np.abs(sq - closed)) / closed))
    _verdict(6, "lower-bound instance matches closed form", worst <= 1e-9,
             f"max relative deviation {worst:.2e} over alpha in "
             f"{{0.1, 1}}, r in 1..4, every subset")


@pytest.mark.filterwarnings("ignore::UserWarning")
def test_criterion_07_deterministic_coreset():
    # 20 builds: eps in {1/3, 0.5} x constraint in {none, nonnegative} x 5
    t0 = time.perf_counter()
    fails, checked = 0, 0
    for eps in (1.0 / 3.0, 0.5):
        for constraint in ("none", "nonnegative"):
            for t in range(5):
                g = rand(rng.derive_seed(7, int(eps * 6), t,
                                         constraint == "none"))
                A = g.normal(size=(6000, 3))
                b = A @ g.normal(size=3) + 0.1 * g.normal(size=6000)
                p = RegressionProblem(A, b, constraint=constraint)
                c = build_coreset(p, eps, method="barrier")
                ratio = evaluate_coreset(p, c)["ratio"]
                checked += 1
                if not ratio <= 1.0 + eps + TOL:
                    fails += 1
    elapsed = time.perf_counter() - t0
    _verdict(7, "deterministic regression coreset", fails == 0 and elapsed <= 120,
             f"{checked - fails}/{checked} instances with ratio <= 1+eps, "
             f"{elapsed:.1f}s (limit 120s)")


@pytest.mark.filterwarnings("ignore::UserWarning")
def test_criterion_08_randomized_coresets():
    eps, delta = 1.0 / 3.0, 0.1
    g = rand(800)
    A = g.normal(size=(6000, 3))
    b = A @ g.normal(size=3) + 0.1 * g.normal(size=6000)
    p = RegressionProblem(A, b)
    ok_sub = sum(
        evaluate_coreset(p, build_coreset(p, eps, method="subspace",
                                          delta=delta, seed=s))["ratio"]
        <= 1.0 + eps + TOL
        for s in range(100))
    # the mixed-row formula count exceeds any desk-scale m, so the size
    # must be overridden; the refusal below is what forces that choice
    with pytest.raises(ArgumentError, match="larger than data"):
        build_coreset(p, eps, method="srht", delta=delta)
    ok_srht = sum(
        evaluate_coreset(p, build_coreset(p, eps, method="srht", delta=delta,
                                          seed=s, r_override=2000))["ratio"]
        <= 1.0 + eps + TOL
        for s in range(100))
    _verdict(8, "randomized regression coresets",
             ok_sub >= 85 and ok_srht >= 80,
             f"leverage-score {ok_sub}/100 (need 85), "
             f"mixed-row r=2000 {ok_srht}/100 (need 80) at eps=1/3")


def _random_spectrum_instance():
    g = rand(900)
    s = np.sort(g.uniform(0.5, 10.0, size=20))[::-1]
    U = random_orthonormal(30, 20, seed=901)
    V = random_orthonormal(20, 20, seed=902)
    return U @ np.diag(s) @ V.T


def test_criterion_09_fast_svd_expectation():
    k = 3
    details, ok = [], True
    for name, A in (("diag", np.diag(np.arange(10.0, 0.0, -1.0))),
                    ("random", _random_spectrum_instance())):
        s = svd(A).singular_values
        tail_f2 = float(np.sum(s[k:] ** 2))
        mean_f2 = float(np.mean(
            [np.linalg.norm(A - (A @ Z) @ Z.T) ** 2
             for Z in (fast_frobenius_svd(A, k, 0.5, seed=t).Z
                       for t in range(50))]))
        f_ok = mean_f2 <= 1.5 * tail_f2 * MEAN_SLACK_05
        mean_s = float(np.mean(
            [np.linalg.norm(A - (A @ Z) @ Z.T, 2)
             for Z in (fast_spectral_svd(A, k, 1.0, seed=t).Z
                       for t in range(50))]))
        s_bound = (math.sqrt(2.0) + 1.0) * float(s[k])
        s_ok = mean_s <= s_bound * MEAN_SLACK_05
        ok = ok and f_ok and s_ok
        details.append(f"{name}: F2 {mean_f2:.3f}<={1.5 * tail_f2:.3f}*1.05 "
                       f"{f_ok}, sp {mean_s:.3f}<={s_bound:.3f}*1.05 {s_ok}")
    _verdict(9, "sketched SVD expectation bounds", ok, "; ".join(details))


def test_criterion_10_cssp_expectation():
    k, n = 2, 12
    A = lowrank_plus_noise(40, n, k, 0.1, seed=10)
    s = svd(A).singular_values
    sp = [cssp(A, k, mode="spectral", seed=t).rank_k_error_spectral / s[k]
          for t in range(50)]
    tail = float(np.linalg.norm(s[k:]))
    fr = [cssp(A, k, mode="frobenius", seed=t).rank_k_error_frobenius / tail
          for t in range(50)]
    sp_bound = 4.0 * math.sqrt(4.0 * k * (n - k) + 1.0)  # 36
    fr_bound = 9.0 * k                                   # 18
    sp_ok = np.mean(sp) <= sp_bound * MEAN_SLACK_10
    fr_ok = np.mean(fr) <= fr_bound * MEAN_SLACK_10
    _verdict(10, "exactly-k selection expectation bounds", sp_ok and fr_ok,
             f"spectral mean {np.mean(sp):.2f} <= {sp_bound}*{MEAN_SLACK_10} "
             f"{sp_ok}; frobenius mean {np.mean(fr):.2f} <= "
             f"{fr_bound}*{MEAN_SLACK_10} {fr_ok} (50 seeds each)")


def _labels_match_upto_permutation(got, want, k):
    return any(np.array_equal(np.asarray(perm)[want], got)
               for perm in permutations(range(k)))


def test_criterion_11_kmeans_identities_and_reductions():
    g = rand(1100)
    ident_ok = True
    for _ in range(5):
        labels = g.integers(0, 3, size=40)
        labels[:3] = [0, 1, 2]
        a = ClusterAssignment(labels=labels, k=3)
        X = indicator_matrix(a)
        ident_ok &= bool(np.allclose(X.T @ X, np.eye(3), atol=1e-14))
        A = g.normal(size=(40, 6))
        mu = np.stack([A[labels == j].mean(axis=0) for j in range(3)])
        ident_ok &= bool(np.max(np.abs(X @ (X.T @ A) - mu[labels])) <= 1e-10)
        cost = kmeans_cost(A, a)
        dual1 = np.linalg.norm(A) ** 2 - np.linalg.norm(X.T @ A) ** 2
        dual2 = float(((A - mu[labels]) ** 2).sum())
        ident_ok &= bool(abs(cost - dual1) <= 1e-9 * max(1.0, cost))
        ident_ok &= bool(abs(cost - dual2) <= 1e-9 * max(1.0, cost))

    # reduction constants are uncertified (gamma-approximate inner
    # clusterer), so only the empirical 4x ceiling is scored
    k, eps, wins = 3, 1.0 / 3.0, 0
    for s in range(100):
        A, planted = blobs(200, 50, k, 8.0, seed=rng.derive_seed(11, s))
        full = lloyd(A, k, restarts=3, seed=rng.derive_seed(11, s, 1))
        good = _labels_match_upto_permutation(full.labels, planted, k)
        base = kmeans_cost(A, full)
        for method, c0 in (("select", 0.04), ("rp", 1.0), ("svd", 4.0)):
            C, _ = reduce_features(A, k, eps, method=method, c0=c0,
                                   seed=rng.derive_seed(11, s, 2))
            red = lloyd(C, k, restarts=3, seed=rng.derive_seed(11, s, 3))
            good &= kmeans_cost(A, red) <= 4.0 * base
        wins += good
    _verdict(11, "k-means identities and feature reduction",
             ident_ok and wins >= 80,
             f"identities exact: {ident_ok}; planted recovery with all three "
             f"reductions <= 4x full cost in {wins}/100 seeds (need 80)")


def _check_pythagoras():
    g = rand(1200)
    X = np.zeros((10, 6))
    Y = np.zeros((10, 6))
    X[:5] = g.normal(size=(5, 6))
    Y[5:] = g.normal(size=(5, 6))
    lhs = np.linalg.norm(X + Y) ** 2
    rhs = np.linalg.norm(X) ** 2 + np.linalg.norm(Y) ** 2
    s_all = np.linalg.norm(X + Y, 2) ** 2
    return (abs(lhs - rhs) <= 1e-9 * rhs
            and max(np.linalg.norm(X, 2), np.linalg.norm(Y, 2)) ** 2
            <= s_all + 1e-12
            and s_all <= np.linalg.norm(X, 2) ** 2 + np.linalg.norm(Y, 2) ** 2
            + 1e-12)


def _check_six_way():
    g = rand(1201)
    V = random_orthonormal(20, 3, seed=1201)
    W = V + 0.05 * g.normal(size=(20, 3))
    G = V.T @ W @ W.T @ V
    eps = float(np.linalg.norm(G - np.eye(3), 2)) + 1e-12
    lo, hi = 1.0 - eps, 1.0 + eps
    eig = np.linalg.eigvalsh(G)
    sv2 = np.linalg.svd(W.T @ V, compute_uv=False) ** 2
    ok = bool(np.all((eig >= lo) & (eig <= hi))
              and np.all((sv2 >= lo) & (sv2 <= hi)))
    for _ in range(50):
        y = g.normal(size=3)
        q = float(y @ G @ y)
        n2 = float(y @ y)
        img = float(np.linalg.norm(W.T @ (V @ y)) ** 2)
        ref = float(np.linalg.norm(V @ y) ** 2)
        ok &= lo * n2 <= q <= hi * n2
        ok &= lo * ref <= img <= hi * ref
    return ok


def _check_penrose():
    g = rand(1202)
    A = g.normal(size=(8, 3)) @ g.normal(size=(3, 6))
    P = pseudo_inverse(A)
    tol = 1e-8 * np.linalg.norm(A, 2)
    return (np.max(np.abs(A @ P @ A - A)) <= tol
            and np.max(np.abs(P @ A @ P - P)) <= tol
            and np.max(np.abs((A @ P).T - A @ P)) <= tol
            and np.max(np.abs((P @ A).T - P @ A)) <= tol)


def _check_ez_zero():
    A = lowrank_plus_noise(32, 24, 3, 0.1, seed=12)
    zs = [fast_frobenius_svd(A, 3, 0.5, seed=1).Z,
          fast_spectral_svd(A, 3, 1.0, seed=1).Z]
    scale = np.linalg.norm(A)
    return all(np.linalg.norm((A - (A @ Z) @ Z.T) @ Z) <= 1e-10 * scale
               for Z in zs)


def _randomized_ops():
    A = lowrank_plus_noise(32, 24, 3, 0.1, seed=12)
    b = rand(1203).normal(size=100)
    R = rand(1204).normal(size=(100, 4))
    p = RegressionProblem(R, b)
    km, _ = blobs(80, 60, 3, 6.0, seed=13)
    return {
        "gaussian_sketch": (True, lambda s: digest(gaussian_sketch(A, 6, seed=s))),
        "sign_sketch": (True, lambda s: digest(sign_sketch(A, 6, seed=s))),
        "srht_rows": (True, lambda s: digest(*srht_rows(R, b, 64, seed=s)[:2])),
        "additive_sampling": (False, lambda s: plan_digest(
            additive_sampling(A, 8, seed=s))),
        "adaptive_sampling": (False, lambda s: plan_digest(
            adaptive_sampling(A, A[:, :2], 6, seed=s))),
        "subspace_sampling": (False, lambda s: plan_digest(
            subspace_sampling(A, 1.0, 8, seed=s))),
        "fast_frobenius_svd": (True, lambda s: digest(
            fast_frobenius_svd(A, 3, 0.5, seed=s).Z)),
        "fast_spectral_svd": (True, lambda s: digest(
            fast_spectral_svd(A, 3, 1.0, seed=s).Z)),
        "srht_lowrank": (True, lambda s: digest(
            srht_lowrank(A, 3, 0.45, seed=s, r_override=16))),
        "cx_frobenius_fast": (False, lambda s: plan_digest(
            cx_frobenius(A, 2, 8, mode="fast", seed=s).plan)),
        "cx_frobenius_relative": (False, lambda s: plan_digest(
            cx_frobenius(A, 2, 21, mode="relative", seed=s).plan)),
        "cssp_spectral": (False, lambda s: plan_digest(
            cssp(A, 2, mode="spectral", seed=s).plan)),
        "cssp_two_stage": (False, lambda s: plan_digest(
            cssp(A, 2, mode="two_stage", seed=s).plan)),
        "interpolative_decomposition": (False, lambda s: digest(
            interpolative_decomposition(A, 3, seed=s)[1])),
        "coreset_subspace": (True, lambda s: digest(
            build_coreset(p, 0.3, method="subspace", seed=s,
                          r_override=64).C)),
        "coreset_srht": (True, lambda s: digest(
            build_coreset(p, 0.3, method="srht", seed=s, r_override=64).C)),
        "reduce_features_select": (False, lambda s: digest(
            reduce_features(km, 3, 1.0 / 3.0, method="select", c0=0.04,
                            seed=s)[0])),
        "reduce_features_rp": (True, lambda s: digest(
            reduce_features(km, 3, 1.0 / 3.0, method="rp", c0=1.0,
                            seed=s)[0])),
        "lloyd": (False, lambda s: digest(
            lloyd(km, 3, restarts=2, seed=s).labels.astype(float))),
        "lowrank_plus_noise": (True, lambda s: digest(
            lowrank_plus_noise(16, 12, 2, 0.1, seed=s))),
        "blobs": (True, lambda s: digest(blobs(30, 8, 3, 6.0, seed=s)[0])),
    }


def test_criterion_12_property_suites():
    checks = {"pythagoras": _check_pythagoras(),
              "six_way_equivalence": _check_six_way(),
              "penrose": _check_penrose(),
              "residual_orthogonal_to_basis": _check_ez_zero()}
    det_fail, sens = [], 0
    ops = _randomized_ops()
    for name, (continuous, fn) in ops.items():
        if fn(1) != fn(1):
            det_fail.append(name)
        differs = fn(1) != fn(2)
        sens += differs
        # discrete outputs (index sets, labels) may legitimately coincide
        # across seeds; continuous ones may not
        if continuous and not differs:
            det_fail.append(name + " (seed-insensitive)")
    checks[f"determinism_hash_{len(ops)}_ops"] = not det_fail
    ok = all(checks.values())
    _verdict(12, "property suites", ok,
             "; ".join(f"{k}={v}" for k, v in checks.items())
             + f"; {sens}/{len(ops)} ops differ across seeds"
             + (f"; failures: {det_fail}" if det_fail else ""))
