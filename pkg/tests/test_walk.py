from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats as sps

from tableauwalk import moments, oracles
from tableauwalk.export import slices_from_json, slices_to_json
from tableauwalk.walk import (
    PowerK,
    QDeformed,
    STANDARD,
    WalkConfig,
    evolve_distribution,
    iter_heights,
    simulate,
    step_probability,
    volume,
)


@st.composite
def configs(draw, max_n=30):
    N = draw(st.integers(1, max_n))
    Y0 = draw(st.sampled_from(range(N % 2, N + 1, 2)))
    return WalkConfig(N, Y0)


def test_config_validation():
    with pytest.raises(ValueError):
        WalkConfig(0, 0)
    with pytest.raises(ValueError):
        WalkConfig(5, 2)
    with pytest.raises(ValueError):
        WalkConfig(4, 6)
    with pytest.raises(ValueError):
        PowerK(0)
    with pytest.raises(ValueError):
        QDeformed(1.0)


def test_step_probability_examples():
    up, down = step_probability(WalkConfig(5, 3), 0, 3)
    assert (up, down) == (Fraction(2, 5), Fraction(3, 5))
    assert step_probability(WalkConfig(6, 0), 2, 0) == (1, 0)
    assert step_probability(WalkConfig(6, 0), 2, 4) == (0, 1)
    with pytest.raises(ValueError):
        step_probability(WalkConfig(6, 0), 2, 5)
    with pytest.raises(ValueError):
        step_probability(WalkConfig(6, 0), 6, 0)


def test_weight_families():
    cfg = WalkConfig(10, 4, PowerK(3))
    assert step_probability(cfg, 2, 4)[1] == Fraction(4, 8) ** 3
    q = WalkConfig(10, 4, QDeformed(0.9))
    up, down = step_probability(q, 2, 4)
    assert down == pytest.approx((1 - 0.9**4) / (1 - 0.9**8), rel=1e-14)
    assert up + down == pytest.approx(1.0)
    # boundary heights are forced for every family
    for w in (STANDARD, PowerK(2), QDeformed(0.5)):
        c = WalkConfig(10, 4, w)
        assert step_probability(c, 3, 7)[1] == pytest.approx(1.0)
        assert step_probability(c, 3, 0)[1] == 0


@given(configs(), st.data())
def test_probabilities_in_unit_interval(cfg, data):
    X = data.draw(st.integers(0, cfg.N - 1))
    Y = data.draw(st.integers(0, cfg.N - X))
    for w in (STANDARD, PowerK(3), QDeformed(0.95)):
        up, down = step_probability(WalkConfig(cfg.N, cfg.Y0, w), X, Y)
        assert 0 <= down <= 1 and 0 <= up <= 1
        assert up + down == pytest.approx(1)


def test_simulate_forced_paths():
    for seed in range(5):
        assert simulate(WalkConfig(2, 0), seed) == (0, 1, 0)
        assert simulate(WalkConfig(4, 4), seed) == (4, 3, 2, 1, 0)


def test_simulate_reproducible():
    cfg = WalkConfig(200, 10)
    assert simulate(cfg, 99) == simulate(cfg, 99)


def test_first_step_frequency():
    cfg = WalkConfig(5, 3)
    rng = np.random.default_rng(11)
    runs = 10_000
    hits = sum(simulate(cfg, rng)[1] == 2 for _ in range(runs))
    sigma = np.sqrt(0.6 * 0.4 / runs)
    assert abs(hits / runs - 0.6) < 3 * sigma


@settings(max_examples=40, deadline=None)
@given(configs(max_n=100), st.integers(0, 2**32))
def test_simulated_paths_stay_in_triangle(cfg, seed):
    for w in (STANDARD, PowerK(2), PowerK(4), QDeformed(0.9), QDeformed(0.2)):
        h = simulate(WalkConfig(cfg.N, cfg.Y0, w), seed)
        assert h[0] == cfg.Y0 and h[-1] == 0
        assert all(abs(a - b) == 1 for a, b in zip(h, h[1:]))
        assert all(0 <= y <= cfg.N - x for x, y in enumerate(h))


def test_batch_paths_terminate_for_all_families():
    for w in (STANDARD, PowerK(3), QDeformed(0.99), QDeformed(0.5)):
        cfg = WalkConfig(100, 50, w)
        for X, H in iter_heights(cfg, 500, 3):
            assert H.min() >= 0 and H.max() <= cfg.N - X
        assert np.all(H == 0)


def test_distribution_examples():
    s = evolve_distribution(WalkConfig(2, 0))
    assert s[1].probs == {1: 1} and s[2].probs == {0: 1}
    s = evolve_distribution(WalkConfig(4, 0))
    assert s[2].probs == {0: Fraction(1, 3), 2: Fraction(2, 3)}


def test_distribution_matches_path_enumeration():
    for N in range(1, 11):
        for Y0 in range(N % 2, N + 1, 2):
            slices = evolve_distribution(WalkConfig(N, Y0))
            paths = list(oracles.walk_paths(N, Y0))
            for X in range(N + 1):
                law = Counter()
                for p, path in paths:
                    law[path[X]] += p
                assert slices[X].probs == dict(law)


@given(configs(max_n=30))
def test_distribution_normalised_with_parity_support(cfg):
    slices = evolve_distribution(cfg)
    for s in slices:
        assert s.total() == 1
        for Y in s.probs:
            assert (Y - cfg.Y0 - s.X) % 2 == 0
            assert 0 <= Y <= min(cfg.Y0 + s.X, cfg.N - s.X)
    assert slices[-1].probs == {0: 1}


@given(configs(max_n=30))
def test_distribution_moments_equal_recursion(cfg):
    for s in evolve_distribution(cfg):
        for n in range(5):
            assert s.moment(n) == moments.moment(cfg.N, cfg.Y0, s.X, n)


def test_float_distribution_for_q_weights():
    slices = evolve_distribution(WalkConfig(40, 20, QDeformed(0.9)))
    for s in slices:
        assert s.total() == pytest.approx(1.0, abs=1e-12)
    assert slices[-1].probs[0] == pytest.approx(1.0)


def test_slice_json_round_trip():
    slices = evolve_distribution(WalkConfig(6, 2))
    back = slices_from_json(slices_to_json(slices))
    assert [s.probs for s in back] == [s.probs for s in slices]
    qs = evolve_distribution(WalkConfig(6, 2, QDeformed(0.7)))
    back = slices_from_json(slices_to_json(qs))
    assert all(isinstance(p, float) for s in back for p in s.probs.values())


@pytest.mark.parametrize("N, Y0", [(6, 0), (9, 3), (20, 0), (20, 8)])
def test_distribution_matches_simulation_histogram(N, Y0):
    cfg = WalkConfig(N, Y0)
    slices = evolve_distribution(cfg)
    runs = 50_000
    X = N // 2
    for step, H in iter_heights(cfg, runs, 5):
        if step == X:
            observed = Counter(H.tolist())
            break
    support = sorted(slices[X].probs)
    expected = np.array([float(slices[X].probs[y]) * runs for y in support])
    counts = np.array([observed.get(y, 0) for y in support])
    assert sum(counts) == runs
    # pool sparse cells so every expected count is at least 5
    keep = expected >= 5
    exp = np.append(expected[keep], expected[~keep].sum())
    obs = np.append(counts[keep], counts[~keep].sum())
    if exp[-1] == 0:
        exp, obs = exp[:-1], obs[:-1]
    stat = ((obs - exp) ** 2 / exp).sum()
    assert stat < sps.chi2.ppf(0.99, len(exp) - 1)


def test_volume_examples():
    assert volume((0, 1, 0)) == 1
    assert volume((4, 3, 2, 1, 0)) == 10
    assert volume((3, 2, 3, 2, 1, 0)) == 11
