"""The area random walk and its exact one-step distribution propagation.

The walk takes steps ``(1, +1)`` or ``(1, -1)``. From height ``Y`` at step
``X`` of a length-``N`` walk, the standard weights move it down with
probability ``Y / (N - X)``. Every trajectory therefore ends at height 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence, Union

import numpy as np

from ._rng import make_rng, randbelow

__all__ = [
    "PowerK",
    "QDeformed",
    "STANDARD",
    "WeightModel",
    "WalkConfig",
    "DistributionSlice",
    "step_probability",
    "simulate",
    "iter_heights",
    "evolve_distribution",
    "volume",
]


@dataclass(frozen=True)
class PowerK:
    """Down-step probability ``(Y / (N - X)) ** k``; ``k = 1`` is the tableau walk."""

    k: int = 1
    exact = True

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError("PowerK exponent must be an integer >= 1")

    def p_down(self, N: int, X: int, Y: int) -> Fraction:
        return Fraction(Y, N - X) ** self.k

    def p_down_array(self, N: int, X: int, Y: np.ndarray) -> np.ndarray:
        return (Y / (N - X)) ** self.k


@dataclass(frozen=True)
class QDeformed:
    """Down-step probability ``(1 - q**Y) / (1 - q**(N - X))`` for ``0 < q < 1``."""

    q: float
    exact = False

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise ValueError("q must lie strictly between 0 and 1")

    def p_down(self, N: int, X: int, Y: int) -> float:
        return float(-np.expm1(Y * np.log(self.q)) / -np.expm1((N - X) * np.log(self.q)))

    def p_down_array(self, N: int, X: int, Y: np.ndarray) -> np.ndarray:
        lq = np.log(self.q)
        return np.expm1(Y * lq) / np.expm1((N - X) * lq)


WeightModel = Union[PowerK, QDeformed]
STANDARD = PowerK(1)


@dataclass(frozen=True)
class WalkConfig:
    N: int
    Y0: int = 0
    weights: WeightModel = field(default=STANDARD)

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("walk length N must be >= 1")
        if not 0 <= self.Y0 <= self.N:
            raise ValueError("starting height must satisfy 0 <= Y0 <= N")
        if (self.N - self.Y0) % 2:
            raise ValueError("N and Y0 must have the same parity")


def step_probability(cfg: WalkConfig, X: int, Y: int):
    """``(p_up, p_down)`` for the step leaving height ``Y`` at step ``X``.

    Exact ``Fraction`` values for ``PowerK`` weights, floats for ``QDeformed``.
    """
    if not 0 <= X < cfg.N:
        raise ValueError(f"step index X={X} outside [0, {cfg.N})")
    if not 0 <= Y <= cfg.N - X:
        raise ValueError(f"height Y={Y} outside [0, {cfg.N - X}] at X={X}")
    down = cfg.weights.p_down(cfg.N, X, Y)
    return 1 - down, down


def _steps_down(cfg: WalkConfig, rng: np.random.Generator, X: int, Y: int) -> bool:
    w = cfg.weights
    M = cfg.N - X
    if isinstance(w, PowerK):
        return randbelow(rng, M**w.k) < Y**w.k
    return rng.random() < w.p_down(cfg.N, X, Y)


def simulate(cfg: WalkConfig, rng_seed=None) -> tuple[int, ...]:
    """One trajectory ``(H(0), ..., H(N))``.

    One draw per step. ``PowerK`` steps use an exact integer Bernoulli draw.
    """
    rng = make_rng(rng_seed)
    Y = cfg.Y0
    heights = [Y]
    for X in range(cfg.N):
        Y += -1 if _steps_down(cfg, rng, X, Y) else 1
        heights.append(Y)
    return tuple(heights)


def iter_heights(cfg: WalkConfig, samples: int, rng_seed=None) -> Iterator[tuple[int, np.ndarray]]:
    """Advance ``samples`` independent walks together, yielding ``(X, heights)``.

    The yielded array is reused between steps; copy it to keep it.
    """
    rng = make_rng(rng_seed)
    H = np.full(samples, cfg.Y0, dtype=np.int64)
    yield 0, H
    w = cfg.weights
    for X in range(cfg.N):
        M = cfg.N - X
        if w == STANDARD:
            down = rng.integers(0, M, size=samples) < H
        else:
            down = rng.random(samples) < w.p_down_array(cfg.N, X, H)
        H += 1 - 2 * down
        yield X + 1, H


@dataclass(frozen=True)
class DistributionSlice:
    """Law of ``H(X)`` as a map height -> probability."""

    X: int
    probs: dict

    def total(self):
        return sum(self.probs.values())

    def moment(self, n: int):
        return sum((Y**n) * p for Y, p in self.probs.items())

    def to_json(self) -> dict:
        return {str(Y): str(p) for Y, p in sorted(self.probs.items())}


def evolve_distribution(cfg: WalkConfig) -> list[DistributionSlice]:
    """Propagate the master equation from ``p(0, Y0) = 1`` to ``X = N``.

    ``p(X+1, Y) = (1 - (Y-1)/(N-X)) p(X, Y-1) + ((Y+1)/(N-X)) p(X, Y+1)``
    for the standard weights, with the general model's step probabilities in
    place of those ratios otherwise. Heights outside the support contribute
    nothing. Exact rationals for ``PowerK``, floats for ``QDeformed``.
    """
    one = Fraction(1) if cfg.weights.exact else 1.0
    cur = {cfg.Y0: one}
    slices = [DistributionSlice(0, cur)]
    for X in range(cfg.N):
        nxt: dict = {}
        for Y, p in cur.items():
            up, down = step_probability(cfg, X, Y)
            if down:
                nxt[Y - 1] = nxt.get(Y - 1, 0) + down * p
            if up:
                nxt[Y + 1] = nxt.get(Y + 1, 0) + up * p
        cur = dict(sorted(nxt.items()))
        slices.append(DistributionSlice(X + 1, cur))
    return slices


def volume(path: Sequence[int]) -> int:
    """Total area under a path: the sum of its heights."""
    return int(sum(path))
