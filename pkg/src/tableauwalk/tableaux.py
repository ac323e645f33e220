"""Oscillating tableaux: validation, counting, enumeration and uniform sampling.

An oscillating tableau of length N and shape lambda is a walk on Young's
lattice ``(empty, lambda1, ..., lambdaN = lambda)`` adding or removing one
corner cell per step.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from ._rng import choose_weighted, make_rng, randbelow
from .partitions import (
    Partition,
    addable_corners,
    apply_corner,
    removable_corners,
    syt_count,
)

__all__ = [
    "OscillatingTableau",
    "BoundExceededError",
    "EmptySetError",
    "DEFAULT_ENUMERATION_BOUND",
    "validate",
    "validation_error",
    "double_factorial",
    "count_formula",
    "enumerate_all",
    "sample_uniform",
    "area_sequence",
]

DEFAULT_ENUMERATION_BOUND = 10


class BoundExceededError(ValueError):
    pass


class EmptySetError(ValueError):
    pass


@dataclass(frozen=True)
class OscillatingTableau:
    steps: tuple[Partition, ...]

    def __init__(self, steps: Sequence):
        object.__setattr__(self, "steps", tuple(Partition(s) for s in steps))

    @property
    def shape(self) -> Partition:
        return self.steps[-1]

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    def to_list(self) -> list[list[int]]:
        return [list(s) for s in self.steps]


def _one_cell_apart(a: Partition, b: Partition) -> bool:
    if b.size == a.size + 1:
        return any(apply_corner(a, c) == b for c in addable_corners(a))
    if b.size == a.size - 1:
        return any(apply_corner(a, c) == b for c in removable_corners(a))
    return False


def validation_error(t: OscillatingTableau | Sequence) -> str | None:
    """Reason ``t`` is not an oscillating tableau, or None if it is one."""
    if not isinstance(t, OscillatingTableau):
        try:
            t = OscillatingTableau(t)
        except ValueError as exc:
            return str(exc)
    if not t.steps:
        return "no partitions"
    if t.steps[0] != Partition():
        return "first partition is not empty"
    for i, (a, b) in enumerate(zip(t.steps, t.steps[1:])):
        if not _one_cell_apart(a, b):
            return f"step {i}: {list(a)} -> {list(b)} is not a single corner move"
    return None


def validate(t: OscillatingTableau | Sequence) -> bool:
    return validation_error(t) is None


def double_factorial(m: int) -> int:
    """m!! with the convention (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def count_formula(shape: Partition, N: int) -> int:
    """Number of oscillating tableaux of the given shape and length.

    ``C(N, k) (N - k - 1)!! f^shape`` when ``N - k`` is even and
    nonnegative, where ``k = |shape|``; zero otherwise.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    shape = Partition(shape)
    k = shape.size
    if N < k or (N - k) % 2:
        return 0
    return comb(N, k) * double_factorial(N - k - 1) * syt_count(shape)


def _distance(a: Partition, b: Partition) -> int:
    """Minimal number of corner moves between two partitions."""
    rows = max(len(a), len(b))
    inter = sum(min(a.part(r), b.part(r)) for r in range(rows))
    return a.size + b.size - 2 * inter


def enumerate_all(
    shape: Partition, N: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[OscillatingTableau]:
    """Every oscillating tableau of ``shape`` and length ``N``, by depth-first search."""
    if N > bound:
        raise BoundExceededError(f"N={N} exceeds the enumeration bound {bound}")
    shape = Partition(shape)
    out: list[OscillatingTableau] = []

    def rec(path: list[Partition]) -> None:
        cur = path[-1]
        left = N - (len(path) - 1)
        if left == 0:
            if cur == shape:
                out.append(OscillatingTableau(path))
            return
        moves = removable_corners(cur) + addable_corners(cur)
        for c in moves:
            nxt = apply_corner(cur, c)
            if _distance(nxt, shape) <= left - 1:
                path.append(nxt)
                rec(path)
                path.pop()

    if _distance(Partition(), shape) <= N:
        rec([Partition()])
    return out


def sample_uniform(shape: Partition, N: int, rng_seed=None) -> OscillatingTableau:
    """Draw an oscillating tableau uniformly at random.

    Runs backwards from ``shape``: with ``Y`` cells left and ``N - X`` steps
    to go, a cell is removed with probability ``Y / (N - X)`` and added
    otherwise. Which corner is chosen is weighted by ``f^mu`` for removals and
    by ``f^mu / (Y + 1)`` for additions, so every tableau has the same
    probability. Each step makes the add/remove draw first, then the corner
    draw, both as exact integer draws.

    ``rng_seed`` may be an int or a ``numpy.random.Generator``.
    """
    shape = Partition(shape)
    if count_formula(shape, N) == 0:
        raise EmptySetError(f"no oscillating tableaux of shape {list(shape)} and length {N}")
    rng = make_rng(rng_seed)
    cur = shape
    backwards = [cur]
    for X in range(N):
        Y = cur.size
        if randbelow(rng, N - X) < Y:
            corners = removable_corners(cur)
        else:
            corners = addable_corners(cur)
        children = [apply_corner(cur, c) for c in corners]
        cur = children[choose_weighted(rng, [syt_count(mu) for mu in children])]
        backwards.append(cur)
    return OscillatingTableau(backwards[::-1])


def area_sequence(t: OscillatingTableau) -> tuple[int, ...]:
    """Heights of the area walk: ``H(X) = |lambda^(N - X)|``."""
    if not isinstance(t, OscillatingTableau):
        t = OscillatingTableau(t)
    return tuple(s.size for s in reversed(t.steps))
