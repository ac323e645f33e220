"""Exact moments of the area walk with the standard weights.

Everything here is a ``Fraction``. The forward recursion

    E[H(X+1)^n] = 1 + sum_{k=1}^{n} (C(n,k) - (1 + (-1)^(n-k)) C(n,k-1) / (N-X)) E[H(X)^k]

is the source of truth; the closed forms below are checked against it.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

__all__ = [
    "MomentTable",
    "MixedMomentSpec",
    "DegenerateLengthError",
    "moment_table",
    "moment",
    "closed_form_mean",
    "closed_form_second_moment",
    "closed_form_variance",
    "mixed_moment",
    "conditional_moment_polynomial",
    "covariance",
    "covariance_by_recursion",
    "volume_mean",
    "volume_variance",
    "weighted_sum_expectation",
    "fit_bivariate_polynomial",
]


class DegenerateLengthError(ValueError):
    pass


def _check_walk(N: int, Y0: int) -> None:
    if N < 0 or not 0 <= Y0 <= N:
        raise ValueError(f"need 0 <= Y0 <= N, got N={N}, Y0={Y0}")


def _step_coefficients(n: int, M: int) -> list[Fraction]:
    """Coefficients of ``E[H^k]``, k = 1..n, in one recursion step with ``N - X = M``."""
    return [
        comb(n, k) - Fraction((1 + (-1) ** (n - k)) * comb(n, k - 1), M)
        for k in range(1, n + 1)
    ]


@dataclass(frozen=True)
class MomentTable:
    """``values[X][n] = E[H(X)^n]`` for ``0 <= X <= N`` and ``0 <= n <= order``."""

    N: int
    Y0: int
    order: int
    values: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        X, n = key
        return self.values[X][n]

    def to_csv(self, closed_form: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["X", "n", "value"]
        if closed_form:
            header.append("closed_form")
        writer.writerow(header)
        for X, row in enumerate(self.values):
            for n, v in enumerate(row):
                line = [X, n, str(v)]
                if closed_form:
                    line.append(_closed_form_or_blank(self.N, self.Y0, X, n))
                writer.writerow(line)
        return buf.getvalue()


def _closed_form_or_blank(N: int, Y0: int, X: int, n: int) -> str:
    try:
        if n == 0:
            return "1"
        if n == 1:
            return str(closed_form_mean(N, Y0, X))
        if n == 2:
            return str(closed_form_second_moment(N, Y0, X))
    except DegenerateLengthError:
        pass
    return ""


@lru_cache(maxsize=256)
def moment_table(N: int, Y0: int, order: int) -> MomentTable:
    _check_walk(N, Y0)
    if order < 0:
        raise ValueError("order must be nonnegative")
    row = tuple(Fraction(Y0) ** n for n in range(order + 1))
    rows = [row]
    for X in range(N):
        M = N - X
        nxt = [Fraction(1)]
        for n in range(1, order + 1):
            coef = _step_coefficients(n, M)
            nxt.append(1 + sum(c * row[k] for k, c in enumerate(coef, start=1)))
        row = tuple(nxt)
        rows.append(row)
    return MomentTable(N, Y0, order, tuple(rows))


def moment(N: int, Y0: int, X: int, n: int) -> Fraction:
    """``E[H(X)^n]`` for the walk of length ``N`` started at ``Y0``."""
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    if not 0 <= X <= N:
        raise ValueError(f"X={X} outside [0, {N}]")
    return moment_table(N, Y0, n)[X, n]


def closed_form_mean(N: int, Y0: int, X: int) -> Fraction:
    if N < 2:
        raise DegenerateLengthError("closed-form mean needs N >= 2")
    return Fraction(X * (N - X), N - 1) + Y0 * Fraction((N - X) * (N - X - 1), N * (N - 1))


def closed_form_second_moment(N: int, Y0: int, X: int) -> Fraction:
    if N < 4:
        raise DegenerateLengthError("closed-form second moment needs N >= 4")
    d = N * (N - 1) * (N - 2) * (N - 3)
    return (
        Fraction(X * (N - X) * (N * X - X * X - 2), (N - 1) * (N - 3))
        + Y0 * Fraction(2 * X * (N - X) * (N - X - 1) * ((N - 1) ** 2 - (N - 1) * X - 2), d)
        + Y0**2 * Fraction((N - X) * (N - X - 1) * (N - X - 2) * (N - X - 3), d)
    )


def _variance_x_factor(N: int, Y0: int, X: int) -> Fraction:
    # Var[H(X)] and Cov[H(X1), H(X2)] share this factor in X (resp. X1)
    return (
        Fraction(2 * X * (X - 1), (N - 1) ** 2 * (N - 3))
        + Y0 * Fraction(2 * X * (2 * N * N - 5 * N + 1 - (3 * N - 5) * X), N * (N - 1) ** 2 * (N - 2) * (N - 3))
        - Y0**2 * Fraction(2 * X * (2 * N * N - 6 * N + 3 - (2 * N - 3) * X), N**2 * (N - 1) ** 2 * (N - 2) * (N - 3))
    )


def closed_form_variance(N: int, Y0: int, X: int) -> Fraction:
    if N < 4:
        raise DegenerateLengthError("closed-form variance needs N >= 4")
    return _variance_x_factor(N, Y0, X) * (N - X) * (N - X - 1)


def covariance(N: int, Y0: int, X1: int, X2: int) -> Fraction:
    """Closed-form ``Cov[H(X1), H(X2)]`` for ``X1 < X2``."""
    if N < 4:
        raise DegenerateLengthError("closed-form covariance needs N >= 4")
    if not 0 <= X1 < X2 <= N:
        raise ValueError(f"need 0 <= X1 < X2 <= N, got X1={X1}, X2={X2}")
    return _variance_x_factor(N, Y0, X1) * (N - X2) * (N - X2 - 1)


@dataclass(frozen=True)
class MixedMomentSpec:
    points: tuple[int, ...]
    powers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "powers", tuple(self.powers))
        if len(self.points) != len(self.powers):
            raise ValueError("points and powers must have equal length")
        if any(b <= a for a, b in zip(self.points, self.points[1:])):
            raise ValueError("points must be strictly increasing")
        if any(a < 0 for a in self.powers):
            raise ValueError("powers must be nonnegative")


def mixed_moment(N: int, Y0: int, points: Sequence[int] | MixedMomentSpec, powers: Sequence[int] | None = None) -> Fraction:
    """``E[H(X1)^a1 ... H(Xn)^an]`` for ``X1 < ... < Xn``.

    Conditioned on ``H(X_{n-1}) = y``, the rest of the walk is a fresh walk
    of length ``N - X_{n-1}`` started at ``y``. Running the single-point
    recursion on that shifted walk with ``y`` kept symbolic gives
    ``E[H(Xn)^an | H(X_{n-1}) = y]`` as a polynomial in ``y`` of degree
    ``an``. That polynomial is folded into the power at ``X_{n-1}``, and the
    reduction repeats until one point is left.
    """
    spec = points if isinstance(points, MixedMomentSpec) else MixedMomentSpec(points, powers)
    _check_walk(N, Y0)
    if spec.points and (spec.points[0] < 0 or spec.points[-1] > N):
        raise ValueError("points must lie in [0, N]")
    return _mixed(N, Y0, spec.points, spec.powers)


@lru_cache(maxsize=None)
def conditional_moment_polynomial(M: int, steps: int, n: int) -> tuple[Fraction, ...]:
    """Coefficients ``c`` with ``E[H(steps)^n | H(0) = y] = sum_j c[j] y^j``.

    The walk has length ``M`` and starts at ``y``. This is exact for every
    admissible start ``0 <= y <= M``.
    """
    if not 0 <= steps <= M:
        raise ValueError("steps must lie in [0, M]")
    # row[k] is E[H^k] as a coefficient list in y
    row = [tuple(Fraction(int(j == k)) for j in range(n + 1)) for k in range(n + 1)]
    for X in range(steps):
        nxt = [row[0]]
        for k in range(1, n + 1):
            acc = [Fraction(0)] * (n + 1)
            acc[0] = Fraction(1)
            for i, c in enumerate(_step_coefficients(k, M - X), start=1):
                for j, v in enumerate(row[i]):
                    acc[j] += c * v
            nxt.append(tuple(acc))
        row = nxt
    return row[n]


@lru_cache(maxsize=None)
def _mixed(N: int, Y0: int, points: tuple[int, ...], powers: tuple[int, ...]) -> Fraction:
    keep = [(x, a) for x, a in zip(points, powers) if a]
    if not keep:
        return Fraction(1)
    points = tuple(x for x, _ in keep)
    powers = tuple(a for _, a in keep)
    if len(points) == 1:
        return moment(N, Y0, points[0], powers[0])
    *head, prev, last = points
    *head_pow, prev_pow, a = powers
    poly = conditional_moment_polynomial(N - prev, last - prev, a)
    total = Fraction(0)
    for j, c in enumerate(poly):
        if c:
            total += c * _mixed(N, Y0, tuple(head) + (prev,), tuple(head_pow) + (prev_pow + j,))
    return total


def covariance_by_recursion(N: int, Y0: int, X1: int, X2: int) -> Fraction:
    if X1 == X2:
        return moment(N, Y0, X1, 2) - moment(N, Y0, X1, 1) ** 2
    lo, hi = sorted((X1, X2))
    return mixed_moment(N, Y0, (lo, hi), (1, 1)) - moment(N, Y0, lo, 1) * moment(N, Y0, hi, 1)


def volume_mean(N: int, Y0: int) -> Fraction:
    """``E[V]`` where ``V = H(0) + ... + H(N)``."""
    return Fraction(N * (N + 1), 6) + Y0 * Fraction(N + 1, 3)


def volume_variance(N: int, Y0: int) -> Fraction:
    return (
        Fraction((N + 1) * N * (N - 2), 45)
        + Y0 * Fraction((N + 1) * (3 * N + 2), 45)
        - Y0**2 * Fraction(4 * (N + 1), 45)
    )


def weighted_sum_expectation(N: int, Y0: int, P: Mapping[tuple[int, int], Fraction]) -> Fraction:
    """``E[sum_{i=0}^{N} P(i, H(i))]`` for ``P = {(a, b): coeff}`` meaning ``sum coeff x^a y^b``."""
    order = max((b for _, b in P), default=0)
    table = moment_table(N, Y0, order)
    total = Fraction(0)
    for i in range(N + 1):
        for (a, b), c in P.items():
            total += Fraction(c) * Fraction(i) ** a * table[i, b]
    return total


def fit_bivariate_polynomial(
    samples: Sequence[tuple[int, int, Fraction]], degree: int
) -> dict[tuple[int, int], Fraction] | None:
    """Exact interpolation of ``value = Q(u, v)`` with total degree <= ``degree``.

    Solves the (possibly overdetermined) linear system over the rationals and
    returns the coefficients ``{(i, j): c}`` of ``u^i v^j``. Returns None when
    the samples are inconsistent with any such polynomial or do not pin it
    down uniquely.
    """
    monos = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    rows = [
        [Fraction(u) ** i * Fraction(v) ** j for i, j in monos] + [Fraction(val)]
        for u, v, val in samples
    ]
    ncol = len(monos)
    r = 0
    pivots = []
    for col in range(ncol):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if r < ncol or any(row[-1] != 0 for row in rows[r:]):
        return None
    return {monos[c]: rows[i][-1] for i, c in enumerate(pivots) if rows[i][-1] != 0}
