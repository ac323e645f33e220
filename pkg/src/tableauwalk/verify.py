"""Exact cross-checks between the fast routines and the brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import continuum, moments, oracles
from .partitions import partitions_of
from .tableaux import area_sequence, count_formula, enumerate_all, sample_uniform, validate
from .walk import WalkConfig, evolve_distribution


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _valid_starts(N: int):
    return range(N % 2, N + 1, 2)


def check_enumeration(max_shape: int = 4, max_length: int = 8) -> CheckResult:
    for k in range(max_shape + 1):
        for shape in partitions_of(k):
            for N in range(max_length + 1):
                got = len(enumerate_all(shape, N, bound=max_length))
                want = count_formula(shape, N)
                if got != want:
                    return CheckResult("enumeration", False, f"shape={list(shape)} N={N}: {got} != {want}")
    return CheckResult("enumeration", True, f"|shape|<={max_shape}, N<={max_length}")


def check_sampler(draws: int = 200, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    for shape, N in (((2, 1), 5), ((1,), 7), ((), 8), ((3, 1), 10)):
        for _ in range(draws):
            t = sample_uniform(shape, N, rng)
            h = area_sequence(t)
            ok = validate(t) and h[-1] == 0 and all(0 <= y <= N - x for x, y in enumerate(h))
            if not ok:
                return CheckResult("sampler", False, f"invalid sample {t.to_list()}")
    return CheckResult("sampler", True, f"{draws} draws per shape")


def check_closed_forms(max_mean: int = 60, max_cov: int = 30) -> CheckResult:
    for N in range(4, max_mean + 1):
        for Y0 in _valid_starts(N):
            for X in range(N + 1):
                if moments.moment(N, Y0, X, 1) != moments.closed_form_mean(N, Y0, X):
                    return CheckResult("closed_forms", False, f"mean N={N} Y0={Y0} X={X}")
                if moments.moment(N, Y0, X, 2) != moments.closed_form_second_moment(N, Y0, X):
                    return CheckResult("closed_forms", False, f"second moment N={N} Y0={Y0} X={X}")
    for N in range(4, max_cov + 1):
        for Y0 in _valid_starts(N):
            for X1 in range(N + 1):
                for X2 in range(X1 + 1, N + 1):
                    if moments.covariance_by_recursion(N, Y0, X1, X2) != moments.covariance(N, Y0, X1, X2):
                        return CheckResult("closed_forms", False, f"covariance N={N} Y0={Y0} X1={X1} X2={X2}")
    return CheckResult("closed_forms", True, f"mean/second moment N<={max_mean}, covariance N<={max_cov}")


def check_brute_force(max_n: int = 10, max_order: int = 4) -> CheckResult:
    for N in range(1, max_n + 1):
        for Y0 in _valid_starts(N):
            paths = list(oracles.walk_paths(N, Y0))
            for X in range(N + 1):
                for n in range(max_order + 1):
                    want = sum(p * Fraction(path[X]) ** n for p, path in paths)
                    if moments.moment(N, Y0, X, n) != want:
                        return CheckResult("brute_force", False, f"moment N={N} Y0={Y0} X={X} n={n}")
            for X1 in range(N + 1):
                for X2 in range(X1 + 1, N + 1):
                    for a, b in ((1, 1), (2, 1), (1, 2)):
                        want = sum(p * path[X1] ** a * path[X2] ** b for p, path in paths)
                        if moments.mixed_moment(N, Y0, (X1, X2), (a, b)) != want:
                            return CheckResult("brute_force", False, f"mixed N={N} Y0={Y0} ({X1},{X2})^({a},{b})")
            vols = [(p, sum(path)) for p, path in paths]
            mean = sum(p * v for p, v in vols)
            var = sum(p * v * v for p, v in vols) - mean**2
            if mean != moments.volume_mean(N, Y0) or var != moments.volume_variance(N, Y0):
                return CheckResult("brute_force", False, f"volume N={N} Y0={Y0}")
    return CheckResult("brute_force", True, f"N<={max_n}, orders<={max_order}")


def check_distribution(max_n: int = 30, max_order: int = 4) -> CheckResult:
    for N in range(1, max_n + 1):
        for Y0 in _valid_starts(N):
            slices = evolve_distribution(WalkConfig(N, Y0))
            for s in slices:
                if s.total() != 1:
                    return CheckResult("distribution", False, f"N={N} Y0={Y0} X={s.X} mass {s.total()}")
                for n in range(max_order + 1):
                    if s.moment(n) != moments.moment(N, Y0, s.X, n):
                        return CheckResult("distribution", False, f"moment N={N} Y0={Y0} X={s.X} n={n}")
            if slices[-1].probs != {0: 1}:
                return CheckResult("distribution", False, f"N={N} Y0={Y0} does not end at 0")
    return CheckResult("distribution", True, f"N<={max_n}")


def check_covariance_matrix_formulas(grids: int = 20, seed: int = 0, tol: float = 1e-10) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst_det = worst_inv = 0.0
    done = 0
    while done < grids:
        n = int(rng.integers(1, 7))
        x = np.sort(rng.uniform(0.02, 0.98, size=n))
        if np.any(np.diff(x) < 1e-3):
            continue
        done += 1
        det, inv = continuum.covariance_matrix_analysis(x)
        C = continuum.covariance_grid(x).matrix
        worst_det = max(worst_det, abs(det - np.linalg.det(C)) / abs(det))
        worst_inv = max(worst_inv, float(np.max(np.abs(inv @ C - np.eye(n)))))
    ok = worst_det <= tol and worst_inv <= tol
    return CheckResult("covariance_matrix_formulas", ok, f"det rel err {worst_det:.2e}, inverse err {worst_inv:.2e}")


def check_ode_residual(tol: float = 1e-12) -> CheckResult:
    x = np.linspace(0.01, 0.99, 99)
    r = continuum.ode_residual(x * (1 - x), 1 - 2 * x, -2 * np.ones_like(x))
    worst = float(np.max(np.abs(r)))
    return CheckResult("ode_residual", worst <= tol, f"max residual {worst:.2e}")


def run_verification(max_n: int = 10) -> list[CheckResult]:
    """The full oracle suite; ``max_n`` bounds the exhaustive path sums."""
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_enumeration(4, min(8, max_n)),
        check_sampler,
        check_closed_forms,
        lambda: check_brute_force(max_n),
        check_distribution,
        check_covariance_matrix_formulas,
        check_ode_residual,
    ]
    return [c() for c in checks]
