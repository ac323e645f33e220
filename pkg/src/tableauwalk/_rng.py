"""Seeded generators and exact integer draws."""

from __future__ import annotations

import numpy as np

_INT64_SAFE = 1 << 62


def make_rng(seed=None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def randbelow(rng: np.random.Generator, n: int) -> int:
    """Uniform integer in ``[0, n)``; exact for arbitrarily large ``n``."""
    if n <= 0:
        raise ValueError("n must be positive")
    if n <= _INT64_SAFE:
        return int(rng.integers(n))
    nbits = n.bit_length()
    nbytes = (nbits + 7) // 8
    mask = (1 << nbits) - 1
    while True:
        v = int.from_bytes(rng.bytes(nbytes), "little") & mask
        if v < n:
            return v


def choose_weighted(rng: np.random.Generator, weights: list[int]) -> int:
    """Index ``i`` with probability ``weights[i] / sum(weights)``, integer weights."""
    u = randbelow(rng, sum(weights))
    acc = 0
    for i, w in enumerate(weights):
        acc += w
        if u < acc:
            return i
    raise AssertionError("unreachable")
