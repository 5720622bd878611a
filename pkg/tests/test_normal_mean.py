"""Interval-null normal-mean model: closed form vs dense-grid oracle."""

import math

import numpy as np
import pytest

from pwreject.distributions import RngStream, t_cdf
from pwreject.models import normal_mean as nm


def sample(seed=0, n=20, mu=0.0):
    return nm.UnivariateSample(mu + RngStream(seed).standard_normal(n))


class TestPValue:
    def test_matches_direct_formula(self):
        s = sample()
        stat = abs(s.mean - 0.3) / (s.sd / math.sqrt(s.n))
        assert nm.t_p_value(s, 0.3) == pytest.approx(
            2.0 * (1.0 - t_cdf(stat, s.n - 1)), abs=1e-14
        )

    def test_p_is_one_at_mean(self):
        s = sample()
        assert nm.t_p_value(s, s.mean) == pytest.approx(1.0)

    def test_degenerate_sample(self):
        s = nm.UnivariateSample([1.0, 1.0, 1.0])
        with pytest.raises(nm.DegenerateSampleError):
            nm.t_p_value(s, 0.0)


class TestIntervalTest:
    def test_closed_form_matches_dense_grid(self):
        # The continuum decision must agree with an explicit fine grid of
        # simple nulls, each tested at alpha' = 2 * alpha.
        for seed in range(40):
            s = sample(seed=seed, n=12, mu=1.1)
            dec = nm.interval_null_test(s, 0.0, 1.0, 0.05)
            grid = np.linspace(0.0, 1.0, 2001)
            grid_max_p = max(nm.t_p_value(s, float(m)) for m in grid)
            # The grid undershoots the continuum maximum by at most the
            # p-value change across half a grid cell.
            assert grid_max_p <= dec.max_p + 1e-12
            assert dec.max_p == pytest.approx(grid_max_p, abs=5e-3)
            if abs(grid_max_p - 0.1) > 1e-2:
                assert dec.reject == (grid_max_p <= 2 * 0.05)

    def test_mean_inside_never_rejects(self):
        s = sample(mu=0.5)
        assert 0.0 <= s.mean <= 1.0
        dec = nm.interval_null_test(s, 0.0, 1.0, 0.05)
        assert dec.max_p == 1.0 and not dec.reject

    def test_halfwidth_characterization(self):
        # Reject iff the sample mean clears the interval endpoint by more
        # than t_{1-alpha, n-1} * s / sqrt(n).
        for seed in range(30):
            s = sample(seed=100 + seed, n=8, mu=1.4)
            h = nm.reject_region_halfwidth(s, 0.05)
            dec = nm.interval_null_test(s, 0.0, 1.0, 0.05)
            outside = s.mean < 0.0 - h or s.mean > 1.0 + h
            assert dec.reject == outside

    def test_point_interval(self):
        s = sample()
        dec = nm.interval_null_test(s, 0.2, 0.2, 0.05)
        assert dec.max_p == pytest.approx(nm.t_p_value(s, 0.2))

    def test_bad_endpoints(self):
        with pytest.raises(ValueError):
            nm.interval_null_test(sample(), 1.0, 0.0, 0.05)


class TestBonferroni:
    def test_one_sided_split(self):
        s = sample(mu=2.0)
        se = s.sd / math.sqrt(s.n)
        p_low = t_cdf((s.mean - 0.0) / se, s.n - 1)
        p_high = 1.0 - t_cdf((s.mean - 1.0) / se, s.n - 1)
        dec = nm.bonferroni_interval_test(s, 0.0, 1.0, 0.05)
        assert dec.max_p == pytest.approx(min(p_low, p_high), abs=1e-14)
        assert dec.alpha_prime_used == 0.025
        assert dec.reject == (dec.max_p <= 0.025)

    def test_more_conservative_than_pointwise(self):
        # Bonferroni can never reject when the pointwise test does not.
        hits = 0
        for seed in range(200):
            s = sample(seed=seed, n=10, mu=1.3)
            pw = nm.interval_null_test(s, 0.0, 1.0, 0.05).reject
            bf = nm.bonferroni_interval_test(s, 0.0, 1.0, 0.05).reject
            assert not (bf and not pw)
            hits += pw
        assert hits > 0  # the comparison actually exercised rejections
