import json

import numpy as np
import pytest

from tableauwalk import stats
from tableauwalk.walk import QDeformed, WalkConfig


def campaign(N, Y0, samples, seed, *names, **kw):
    return stats.Campaign(WalkConfig(N, Y0, **kw), samples, seed, [stats.parse_observable(n) for n in names])


def test_parse_observable():
    assert stats.parse_observable("volume") == stats.Volume()
    assert stats.parse_observable("Scaled_Volume") == stats.ScaledVolume()
    assert stats.parse_observable("height_at(7)") == stats.HeightAt(7)
    assert stats.parse_observable("pair_heights(3, 9)") == stats.PairHeights(3, 9)
    assert stats.parse_observable("scaled_fluctuation_at(5)").name == "scaled_fluctuation_at(5)"
    for bad in ("height_at", "height_at(1,2)", "mystery(3)", "pair_heights(1)"):
        with pytest.raises(ValueError):
            stats.parse_observable(bad)


def test_campaign_validation():
    with pytest.raises(ValueError):
        campaign(10, 0, 0, 1, "volume")
    with pytest.raises(ValueError):
        campaign(10, 0, 10, 1, "height_at(11)")


def test_length_two_volume_is_always_one():
    est = stats.run_campaign(campaign(2, 0, 500, 3, "volume"))["volume"]
    assert np.all(est.samples == 1)
    assert est.mean == 1 and est.variance == 0
    assert est.reference_mean == 1 and est.reference_variance == 0


def test_campaign_reproducible():
    a = stats.run_campaign(campaign(60, 4, 300, 17, "volume", "height_at(30)"))
    b = stats.run_campaign(campaign(60, 4, 300, 17, "volume", "height_at(30)"))
    assert np.array_equal(a["volume"].samples, b["volume"].samples)
    assert a.to_json() == b.to_json()
    c = stats.run_campaign(campaign(60, 4, 300, 18, "volume"))
    assert not np.array_equal(a["volume"].samples, c["volume"].samples)


def test_estimates_agree_with_exact_references():
    rep = stats.run_campaign(
        campaign(100, 10, 4000, 5, "height_at(40)", "volume", "scaled_fluctuation_at(50)", "pair_heights(30,70)")
    )
    for name in ("height_at(40)", "volume", "scaled_fluctuation_at(50)"):
        e = rep[name]
        assert abs(e.mean - e.reference_mean) < 4 * e.mean_se
        assert abs(e.variance - e.reference_variance) < 4 * e.variance_se
    p = rep["pair_heights(30,70)"]
    assert abs(p.covariance - p.reference_covariance) < 4 * p.covariance_se
    assert 0 < p.correlation < 1


def test_histogram_covers_samples():
    e = stats.run_campaign(campaign(200, 0, 2000, 9, "height_at(100)"))["height_at(100)"]
    assert len(e.histogram) == 50
    inside = sum(row[2] for row in e.histogram)
    assert inside >= 0.99 * e.n


def test_report_serialisation():
    rep = stats.run_campaign(campaign(30, 0, 200, 1, "volume", "pair_heights(10,20)"))
    payload = json.loads(rep.to_json())
    assert payload["n"] == 30 and payload["samples"] == 200
    assert set(payload["estimates"]) == {"volume", "pair_heights(10,20)"}
    text = rep.to_csv()
    assert text.startswith("observable,statistic,value\n")
    assert "volume,mean," in text and "bin_left" in text


def test_non_standard_weights_have_no_reference():
    rep = stats.run_campaign(campaign(40, 0, 200, 2, "volume", "height_at(20)", weights=QDeformed(0.9)))
    assert rep["volume"].reference_mean is None
    assert rep["height_at(20)"].reference_variance is None


def test_normality_of_binomial_sums_passes():
    rng = np.random.default_rng(0)
    x = rng.binomial(400, 0.5, size=5000)
    assert stats.normality_check(x).passed


def test_normality_rejects_skewed_and_constant_samples():
    rng = np.random.default_rng(1)
    assert not stats.normality_check(rng.exponential(size=5000)).passed
    r = stats.normality_check(np.full(500, 3.0))
    assert not r.passed


def test_normality_needs_enough_samples():
    with pytest.raises(stats.TooFewSamplesError):
        stats.normality_check(np.arange(99))


def test_covariance_profile():
    cfg = WalkConfig(200, 0)
    rows = stats.covariance_profile(cfg, 100, 3000, 4, stride=20)
    by_x = {X: (cov, se) for X, cov, se in rows}
    assert by_x[0] == (0.0, 0.0)
    assert by_x[200] == (0.0, 0.0)
    diag = stats.run_campaign(stats.Campaign(cfg, 3000, 4, [stats.HeightAt(100)]))["height_at(100)"]
    assert by_x[100][0] == pytest.approx(diag.variance)
    with pytest.raises(ValueError):
        stats.covariance_profile(cfg, 201, 10, 0)


def test_scaled_fluctuation_variance_moderate_n():
    # the limit value at x = 1/2 is 1/8; N = 200 sits within a few percent of it
    e = stats.run_campaign(campaign(200, 0, 6000, 12, "scaled_fluctuation_at(100)"))["scaled_fluctuation_at(100)"]
    assert abs(e.variance - 1 / 8) < 0.01 + 3 * e.variance_se
    assert abs(e.mean) < 4 * e.mean_se
