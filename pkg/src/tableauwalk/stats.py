"""Monte Carlo campaigns over the area walk.

A campaign advances ``samples`` walks in lockstep and records the requested
observables. It reports sample means, variances, standard errors and
fixed-bin histograms. Results depend only on ``(cfg, samples, seed)``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from . import moments
from .walk import STANDARD, WalkConfig, iter_heights

__all__ = [
    "HeightAt",
    "ScaledFluctuationAt",
    "Volume",
    "ScaledVolume",
    "PairHeights",
    "Campaign",
    "ObservableEstimate",
    "PairEstimate",
    "EstimateReport",
    "NormalityReport",
    "TooFewSamplesError",
    "run_campaign",
    "covariance_profile",
    "normality_check",
    "parse_observable",
]


class TooFewSamplesError(ValueError):
    pass


@dataclass(frozen=True)
class HeightAt:
    X: int

    @property
    def name(self) -> str:
        return f"height_at({self.X})"


@dataclass(frozen=True)
class ScaledFluctuationAt:
    """``(H(X) - E[H(X)]) / sqrt(N)``."""

    X: int

    @property
    def name(self) -> str:
        return f"scaled_fluctuation_at({self.X})"


@dataclass(frozen=True)
class Volume:
    @property
    def name(self) -> str:
        return "volume"


@dataclass(frozen=True)
class ScaledVolume:
    """``(V - N^2 / 6) / N^(3/2)``."""

    @property
    def name(self) -> str:
        return "scaled_volume"


@dataclass(frozen=True)
class PairHeights:
    X1: int
    X2: int

    @property
    def name(self) -> str:
        return f"pair_heights({self.X1},{self.X2})"


ObservableSpec = Union[HeightAt, ScaledFluctuationAt, Volume, ScaledVolume, PairHeights]


def parse_observable(text: str) -> ObservableSpec:
    """Parse ``height_at(10)``, ``scaled_fluctuation_at(2500)``, ``volume``,
    ``scaled_volume`` or ``pair_heights(10,20)``."""
    text = text.strip().lower().replace(" ", "")
    if text in ("volume",):
        return Volume()
    if text in ("scaled_volume", "scaledvolume"):
        return ScaledVolume()
    name, _, rest = text.partition("(")
    if not rest.endswith(")"):
        raise ValueError(f"cannot parse observable {text!r}")
    args = [int(a) for a in rest[:-1].split(",") if a]
    kinds = {
        "height_at": (HeightAt, 1),
        "scaled_fluctuation_at": (ScaledFluctuationAt, 1),
        "pair_heights": (PairHeights, 2),
    }
    if name not in kinds or len(args) != kinds[name][1]:
        raise ValueError(f"cannot parse observable {text!r}")
    return kinds[name][0](*args)


@dataclass(frozen=True)
class Campaign:
    cfg: WalkConfig
    samples: int
    seed: int
    observables: tuple = ()
    bins: int = 50

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.bins < 1:
            raise ValueError("bins must be >= 1")
        object.__setattr__(self, "observables", tuple(self.observables))
        for obs in self.observables:
            for X in _indices(obs):
                if not 0 <= X <= self.cfg.N:
                    raise ValueError(f"{obs.name}: index {X} outside [0, {self.cfg.N}]")


@dataclass
class ObservableEstimate:
    name: str
    n: int
    mean: float
    variance: float
    mean_se: float
    variance_se: float
    reference_mean: float | None
    reference_variance: float | None
    histogram: list[tuple[float, float, int]]
    samples: np.ndarray = field(repr=False)

    def to_dict(self) -> dict:
        d = {k: v for k, v in self.__dict__.items() if k != "samples"}
        d["histogram"] = [list(row) for row in self.histogram]
        return d


@dataclass
class PairEstimate:
    name: str
    n: int
    means: tuple[float, float]
    covariance: float
    covariance_se: float
    correlation: float
    reference_covariance: float | None
    samples: np.ndarray = field(repr=False)

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if k != "samples"}


@dataclass
class EstimateReport:
    campaign: Campaign
    estimates: dict

    def __getitem__(self, name: str):
        return self.estimates[name]

    def to_json(self) -> str:
        c = self.campaign
        payload = {
            "n": c.cfg.N,
            "y0": c.cfg.Y0,
            "samples": c.samples,
            "seed": c.seed,
            "bins": c.bins,
            "estimates": {k: v.to_dict() for k, v in self.estimates.items()},
        }
        return json.dumps(payload, indent=2)

    def to_csv(self) -> str:
        """Summary rows ``observable,statistic,value`` followed by histogram rows."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["observable", "statistic", "value"])
        for name, est in self.estimates.items():
            for key, val in est.to_dict().items():
                if key in ("name", "histogram"):
                    continue
                w.writerow([name, key, val])
        w.writerow([])
        w.writerow(["observable", "bin_left", "bin_right", "count"])
        for name, est in self.estimates.items():
            for left, right, count in getattr(est, "histogram", []):
                w.writerow([name, left, right, count])
        return buf.getvalue()


def _indices(obs) -> tuple[int, ...]:
    if isinstance(obs, (HeightAt, ScaledFluctuationAt)):
        return (obs.X,)
    if isinstance(obs, PairHeights):
        return (obs.X1, obs.X2)
    return ()


def _exact_mean_var(cfg: WalkConfig, X: int):
    if cfg.weights != STANDARD or cfg.N < 4:
        return None, None
    return moments.closed_form_mean(cfg.N, cfg.Y0, X), moments.closed_form_variance(cfg.N, cfg.Y0, X)


def _reference(obs, cfg: WalkConfig):
    N = cfg.N
    if isinstance(obs, HeightAt):
        m, v = _exact_mean_var(cfg, obs.X)
        return (None, None) if m is None else (float(m), float(v))
    if isinstance(obs, ScaledFluctuationAt):
        m, v = _exact_mean_var(cfg, obs.X)
        return (None, None) if m is None else (0.0, float(v) / N)
    if cfg.weights != STANDARD:
        return None, None
    vm, vv = moments.volume_mean(N, cfg.Y0), moments.volume_variance(N, cfg.Y0)
    if isinstance(obs, Volume):
        return float(vm), float(vv)
    if isinstance(obs, ScaledVolume):
        return float((vm - Fraction(N * N, 6)) / N**1.5), float(vv) / N**3
    return None, None


def _variance_se(x: np.ndarray) -> float:
    n = x.size
    if n < 4:
        return math.nan
    d = x - x.mean()
    s2 = d.var(ddof=1)
    m4 = np.mean(d**4)
    return float(math.sqrt(max(m4 - s2**2 * (n - 3) / (n - 1), 0.0) / n))


def _histogram(x: np.ndarray, center: float, scale: float, bins: int):
    if not scale > 0:
        scale = float(x.std()) or 1.0
    edges = np.linspace(center - 4 * scale, center + 4 * scale, bins + 1)
    counts, _ = np.histogram(x, bins=edges)
    return [(float(a), float(b), int(c)) for a, b, c in zip(edges[:-1], edges[1:], counts)]


def _estimate(obs, values: np.ndarray, cfg: WalkConfig, bins: int) -> ObservableEstimate:
    n = values.size
    mean = float(values.mean())
    var = float(values.var(ddof=1)) if n > 1 else 0.0
    ref_mean, ref_var = _reference(obs, cfg)
    center = mean if ref_mean is None else ref_mean
    scale = math.sqrt(var if ref_var is None else ref_var)
    return ObservableEstimate(
        name=obs.name,
        n=n,
        mean=mean,
        variance=var,
        mean_se=math.sqrt(var / n),
        variance_se=_variance_se(values),
        reference_mean=ref_mean,
        reference_variance=ref_var,
        histogram=_histogram(values, center, scale, bins),
        samples=values,
    )


def _pair_estimate(obs: PairHeights, a: np.ndarray, b: np.ndarray, cfg: WalkConfig) -> PairEstimate:
    n = a.size
    da, db = a - a.mean(), b - b.mean()
    prod = da * db
    cov = float(prod.sum() / (n - 1)) if n > 1 else 0.0
    sd = float(a.std(ddof=1) * b.std(ddof=1)) if n > 1 else 0.0
    ref = None
    if cfg.weights == STANDARD:
        lo, hi = sorted((obs.X1, obs.X2))
        if lo == hi:
            ref = float(moments.closed_form_variance(cfg.N, cfg.Y0, lo)) if cfg.N >= 4 else None
        elif cfg.N >= 4:
            ref = float(moments.covariance(cfg.N, cfg.Y0, lo, hi))
    return PairEstimate(
        name=obs.name,
        n=n,
        means=(float(a.mean()), float(b.mean())),
        covariance=cov,
        covariance_se=float(prod.std(ddof=1) / math.sqrt(n)) if n > 1 else math.nan,
        correlation=cov / sd if sd > 0 else math.nan,
        reference_covariance=ref,
        samples=np.column_stack([a, b]),
    )


def _record(cfg: WalkConfig, samples: int, seed, points: Sequence[int]):
    """Heights at ``points`` and the volume of every sampled walk."""
    wanted = set(points)
    cols: dict[int, np.ndarray] = {}
    vol = np.zeros(samples, dtype=np.int64)
    for X, H in iter_heights(cfg, samples, seed):
        vol += H
        if X in wanted:
            cols[X] = H.copy()
    return cols, vol


def run_campaign(c: Campaign) -> EstimateReport:
    points = sorted({X for obs in c.observables for X in _indices(obs)})
    cols, vol = _record(c.cfg, c.samples, c.seed, points)
    N = c.cfg.N
    estimates: dict = {}
    for obs in c.observables:
        if isinstance(obs, PairHeights):
            estimates[obs.name] = _pair_estimate(obs, cols[obs.X1].astype(float), cols[obs.X2].astype(float), c.cfg)
            continue
        if isinstance(obs, HeightAt):
            values = cols[obs.X].astype(float)
        elif isinstance(obs, ScaledFluctuationAt):
            m, _ = _exact_mean_var(c.cfg, obs.X)
            centre = float(m) if m is not None else float(cols[obs.X].mean())
            values = (cols[obs.X] - centre) / math.sqrt(N)
        elif isinstance(obs, Volume):
            values = vol.astype(float)
        elif isinstance(obs, ScaledVolume):
            values = (vol - N * N / 6) / N**1.5
        else:
            raise TypeError(f"unknown observable {obs!r}")
        estimates[obs.name] = _estimate(obs, values, c.cfg, c.bins)
    return EstimateReport(c, estimates)


def covariance_profile(
    cfg: WalkConfig, X_fixed: int, samples: int, seed, stride: int | None = None
) -> list[tuple[int, float, float]]:
    """Sample ``Cov[H(X_fixed), H(X)]`` on ``X = 0, stride, 2*stride, ..., N``.

    Returns rows ``(X, covariance, standard_error)``; ``X_fixed`` is always included.
    """
    if not 0 <= X_fixed <= cfg.N:
        raise ValueError("X_fixed outside [0, N]")
    stride = stride or max(1, cfg.N // 100)
    grid = sorted(set(range(0, cfg.N + 1, stride)) | {cfg.N, X_fixed})
    cols, _ = _record(cfg, samples, seed, grid)
    ref = cols[X_fixed].astype(float)
    dref = ref - ref.mean()
    rows = []
    for X in grid:
        d = cols[X] - cols[X].mean()
        prod = dref * d
        cov = float(prod.sum() / (samples - 1))
        se = float(prod.std(ddof=1) / math.sqrt(samples))
        rows.append((X, cov, se))
    return rows


@dataclass(frozen=True)
class NormalityReport:
    n: int
    skewness: float
    skewness_se: float
    excess_kurtosis: float
    kurtosis_se: float
    passed: bool


def normality_check(samples, threshold: float = 4.0) -> NormalityReport:
    """Sample skewness and excess kurtosis against their standard errors.

    Passes when both lie within ``threshold`` standard errors of zero.
    Degenerate (constant) samples fail.
    """
    x = np.asarray(samples, dtype=float)
    n = x.size
    if n < 100:
        raise TooFewSamplesError(f"need at least 100 samples, got {n}")
    d = x - x.mean()
    m2 = np.mean(d**2)
    ses = math.sqrt(6.0 * n * (n - 1) / ((n - 2) * (n + 1) * (n + 3)))
    sek = 2 * ses * math.sqrt((n * n - 1) / ((n - 3) * (n + 5)))
    if np.all(x == x[0]) or m2 == 0:
        return NormalityReport(n, math.nan, ses, math.nan, sek, False)
    skew = float(np.mean(d**3) / m2**1.5)
    kurt = float(np.mean(d**4) / m2**2 - 3.0)
    passed = abs(skew) <= threshold * ses and abs(kurt) <= threshold * sek
    return NormalityReport(n, skew, ses, kurt, sek, bool(passed))
