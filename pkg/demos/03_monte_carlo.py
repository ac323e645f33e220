# Monte Carlo: midpoint fluctuations and the rescaled volume at N = 5000.
# Run: python demos/03_monte_carlo.py

import numpy as np

from tableauwalk import stats
from tableauwalk.walk import WalkConfig


def text_histogram(est, width=50):
    peak = max(c for _, _, c in est.histogram) or 1
    for left, right, count in est.histogram[::2]:
        print(f"{left:+.3f} {'#' * int(width * count / peak)}")


N = 5000
campaign = stats.Campaign(
    WalkConfig(N, 0),
    samples=5000,
    seed=3,
    observables=[stats.ScaledFluctuationAt(N // 2), stats.ScaledVolume(), stats.PairHeights(1250, 2500)],
)
report = stats.run_campaign(campaign)

# %% (H(N/2) - E H(N/2)) / sqrt(N): variance should be near 1/8
fl = report[f"scaled_fluctuation_at({N // 2})"]
print(f"mean {fl.mean:+.4f} +- {fl.mean_se:.4f}   variance {fl.variance:.4f} +- {fl.variance_se:.4f}  (1/8 = 0.125)")
print(stats.normality_check(fl.samples))
text_histogram(fl)

# %% (V - N^2/6) / N^1.5: variance near 1/45, mean carries a 1/(6 sqrt N) offset
vol = report["scaled_volume"]
print(f"mean {vol.mean:+.4f} +- {vol.mean_se:.4f} (offset {1 / (6 * np.sqrt(N)):.4f})")
print(f"variance {vol.variance:.5f} +- {vol.variance_se:.5f}  (1/45 = {1 / 45:.5f})")

# %% covariance between quarter and half points, exact vs sampled
pair = report["pair_heights(1250,2500)"]
print(f"Cov sampled {pair.covariance:.1f} +- {pair.covariance_se:.1f}   exact {pair.reference_covariance:.1f}")

# %% covariance profile against a fixed point
for X, cov, se in stats.covariance_profile(WalkConfig(N, 0), 2500, 2000, seed=4, stride=500):
    print(f"X={X:5}  Cov={cov / N:+.4f} +- {se / N:.4f}")
