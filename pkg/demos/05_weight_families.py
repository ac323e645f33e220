# Other step weights: powers of the standard probability and a q-deformation.
# Run: python demos/05_weight_families.py

import numpy as np

from tableauwalk.continuum import surface_tension
from tableauwalk.walk import PowerK, QDeformed, STANDARD, WalkConfig, evolve_distribution, iter_heights

N = 400
families = {"standard": STANDARD, "power k=2": PowerK(2), "power k=4": PowerK(4), "q=0.99": QDeformed(0.99)}

# %% mean height profile by family
for name, w in families.items():
    means = {X: H.mean() for X, H in iter_heights(WalkConfig(N, 0, w), 2000, 0) if X % 100 == 0}
    print(f"{name:10}", "  ".join(f"{m / N:.3f}" for m in means.values()))

# %% exact law of H(N/2) for a short q-walk
s = evolve_distribution(WalkConfig(20, 0, QDeformed(0.8)))[10]
print({y: round(p, 4) for y, p in sorted(s.probs.items())})

# %% surface tension for equal and unequal step weights
for p, q in ((1, 1), (0.3, 0.7)):
    print(p, q, [round(surface_tension(v, p, q), 4) for v in np.linspace(-1, 1, 5)])
