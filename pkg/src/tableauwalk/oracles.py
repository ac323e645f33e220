"""Brute-force reference computations.

These share no code with the fast paths they check: corners come from trying
every one-cell edit, tableau counts from filling diagrams cell by cell, and
walk statistics from summing over every path with its product of step
weights.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterator

__all__ = [
    "is_partition",
    "brute_force_corners",
    "brute_force_syt_count",
    "walk_paths",
    "path_expectation",
]


def is_partition(parts) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def brute_force_corners(parts) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """(removable, addable) cells found by trying every single-cell edit."""
    parts = list(parts)
    removable, addable = [], []
    for r in range(len(parts)):
        trial = parts.copy()
        trial[r] -= 1
        if is_partition([p for p in trial if p]) and (trial[r] > 0 or r == len(parts) - 1):
            removable.append((r, parts[r] - 1))
    for r in range(len(parts) + 1):
        trial = parts + [0]
        trial[r] += 1
        if is_partition([p for p in trial if p]):
            addable.append((r, trial[r] - 1))
    return removable, addable


def brute_force_syt_count(parts) -> int:
    """Count standard fillings by checking every permutation of 1..n."""
    cells = [(r, c) for r, length in enumerate(parts) for c in range(length)]
    count = 0
    for perm in permutations(range(len(cells))):
        fill = dict(zip(cells, perm))
        if all(
            (c == 0 or fill[(r, c - 1)] < v) and (r == 0 or fill[(r - 1, c)] < v)
            for (r, c), v in fill.items()
        ):
            count += 1
    return count


def walk_paths(N: int, Y0: int, p_down: Callable[[int, int, int], Fraction] | None = None) -> Iterator[tuple[Fraction, tuple[int, ...]]]:
    """Every length-``N`` path from ``Y0`` with its probability.

    ``p_down(N, X, Y)`` defaults to ``Y / (N - X)``. Paths of probability
    zero are skipped.
    """
    if p_down is None:
        def p_down(N, X, Y):
            return Fraction(Y, N - X)

    def rec(X: int, path: list[int], prob: Fraction):
        if X == N:
            yield prob, tuple(path)
            return
        Y = path[-1]
        d = p_down(N, X, Y)
        for step, p in ((-1, d), (1, 1 - d)):
            if p:
                path.append(Y + step)
                yield from rec(X + 1, path, prob * p)
                path.pop()

    yield from rec(0, [Y0], Fraction(1))


def path_expectation(N: int, Y0: int, f: Callable[[tuple[int, ...]], Fraction]) -> Fraction:
    return sum((p * f(path) for p, path in walk_paths(N, Y0)), Fraction(0))
