# Oscillating tableaux: counting, listing and uniform sampling.
# Run: python demos/01_tableaux_and_sampling.py

from collections import Counter

import numpy as np

from tableauwalk import Partition, area_sequence, count_formula, enumerate_all, sample_uniform

# %% how many tableaux end at a given shape
for shape in ([], [1], [2], [1, 1], [2, 1], [3, 2]):
    lam = Partition(shape)
    counts = [count_formula(lam, N) for N in range(9)]
    print(f"shape {shape!s:8} lengths 0..8: {counts}")

# %% list the 20 tableaux of shape (2,1) and length 5
tableaux = enumerate_all(Partition([2, 1]), 5)
for t in tableaux[:5]:
    print(t.to_list())
print("...", len(tableaux), "in total")

# %% each tableau read backwards gives a +-1 walk of box counts
t = tableaux[7]
print("tableau     ", t.to_list())
print("area walk   ", area_sequence(t))

# %% the sampler is uniform: draw many and tally
rng = np.random.default_rng(1)
tally = Counter(sample_uniform(Partition([2, 1]), 5, rng).steps for _ in range(10_000))
freqs = np.array(sorted(tally.values())) / 10_000
print("min/max frequency", freqs.min(), freqs.max(), "target", 1 / 20)

# %% long tableaux are cheap to sample
big = sample_uniform(Partition([3, 2, 1]), 40, rng)
print("length", big.length, "shape", list(big.shape))
print("walk", area_sequence(big))
