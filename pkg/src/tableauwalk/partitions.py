"""Young diagrams: corner moves, hook lengths and standard tableau counts."""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, NamedTuple

__all__ = [
    "Partition",
    "Corner",
    "InvalidCornerError",
    "removable_corners",
    "addable_corners",
    "apply_corner",
    "hook_lengths",
    "syt_count",
    "partitions_of",
]

REMOVABLE = "removable"
ADDABLE = "addable"


class InvalidCornerError(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped, so ``Partition([2, 1, 0]) == Partition([2, 1])``.
    The empty partition is ``Partition()``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, row: int) -> int:
        """Length of ``row``, zero past the last row."""
        return self[row] if 0 <= row < len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


class Corner(NamedTuple):
    row: int
    col: int
    kind: str  # "removable" or "addable"


def removable_corners(p: Partition) -> list[Corner]:
    """Cells whose removal leaves a partition, ordered by row."""
    p = Partition(p)
    return [
        Corner(r, p[r] - 1, REMOVABLE)
        for r in range(len(p))
        if p[r] > p.part(r + 1)
    ]


def addable_corners(p: Partition) -> list[Corner]:
    """Cells whose addition gives a partition, ordered by row."""
    p = Partition(p)
    return [
        Corner(r, p.part(r), ADDABLE)
        for r in range(len(p) + 1)
        if r == 0 or p[r - 1] > p.part(r)
    ]


def apply_corner(p: Partition, c: Corner) -> Partition:
    p = Partition(p)
    valid = removable_corners(p) if c.kind == REMOVABLE else addable_corners(p)
    if c.kind not in (REMOVABLE, ADDABLE) or Corner(*c) not in valid:
        raise InvalidCornerError(f"{c} is not a valid corner of {list(p)}")
    parts = list(p)
    if c.kind == ADDABLE:
        if c.row == len(parts):
            parts.append(1)
        else:
            parts[c.row] += 1
    else:
        parts[c.row] -= 1
    return Partition(parts)


def conjugate(p: Partition) -> Partition:
    p = Partition(p)
    return Partition(sum(1 for part in p if part > j) for j in range(p.part(0)))


def hook_lengths(p: Partition) -> list[list[int]]:
    p = Partition(p)
    cols = conjugate(p)
    return [
        [p[i] - j + cols[j] - i - 1 for j in range(p[i])]
        for i in range(len(p))
    ]


@lru_cache(maxsize=None)
def _syt_count(parts: tuple[int, ...]) -> int:
    hooks = hook_lengths(Partition(parts))
    return factorial(sum(parts)) // prod(h for row in hooks for h in row)


def syt_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    return _syt_count(tuple(Partition(p)))


def partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k`` in reverse lexicographic order."""
    out: list[Partition] = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(acc))
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(k, k, [])
    return out
