"""5-d normal with ball-and-subspace null: projections, universal baselines."""

import itertools
import math

import numpy as np
import pytest

from pwreject.distributions import RngStream, chi2_cdf, chi2_quantile
from pwreject.models import mvn_ball as mb


def make_sample(seed=0, n=10, theta=(0, 0, 0, 0, 0)):
    g = RngStream(seed).generator
    return mb.MvnSample(np.asarray(theta, float) + g.standard_normal((n, mb.DIM)))


class TestProjection:
    def test_inside_ball_only_tail_zeroed(self):
        ybar = np.array([0.2, -0.3, 0.1, 0.9, -0.4])
        proj = mb.project_to_null(ybar)
        assert proj == pytest.approx([0.2, -0.3, 0.1, 0.0, 0.0])

    def test_outside_ball_rescaled_to_sphere(self):
        ybar = np.array([3.0, 0.0, 4.0, 1.0, 1.0])
        proj = mb.project_to_null(ybar)
        assert np.linalg.norm(proj[:3]) == pytest.approx(1.0)
        assert proj == pytest.approx([0.6, 0.0, 0.8, 0.0, 0.0])

    def test_projection_minimizes_distance_over_null_grid(self):
        # Grid search over the null region {||head|| <= 1, tail = 0}.
        g = RngStream(17).generator
        axes = np.linspace(-1.0, 1.0, 21)
        grid = [
            np.array([a, b, c, 0.0, 0.0])
            for a, b, c in itertools.product(axes, repeat=3)
            if a * a + b * b + c * c <= 1.0
        ]
        for _ in range(5):
            ybar = 2.0 * g.standard_normal(5)
            proj = mb.project_to_null(ybar)
            best = min(float(np.sum((ybar - t) ** 2)) for t in grid)
            ours = float(np.sum((ybar - proj) ** 2))
            assert ours <= best + 1e-6

    def test_subspace_projection(self):
        ybar = np.array([5.0, 1.0, -2.0, 0.3, 0.7])
        assert mb.project_to_subspace(ybar) == pytest.approx([5.0, 1.0, -2.0, 0.0, 0.0])


class TestSimplePValue:
    def test_closed_form(self):
        s = make_sample(n=7)
        theta = np.array([0.1, 0.0, -0.2, 0.0, 0.0])
        stat = 7 * float(np.sum((s.mean - theta) ** 2))
        assert mb.mvn_simple_p_value(s, theta) == pytest.approx(
            1.0 - chi2_cdf(stat, 5), abs=1e-12
        )


class TestBallTest:
    def test_mean_inside_null_gives_p_one(self):
        s = mb.MvnSample(np.zeros((4, 5)))
        dec = mb.ball_pointwise_test(s, 0.05)
        assert dec.max_p == 1.0 and not dec.reject

    def test_alpha_prime_value(self):
        dec = mb.ball_pointwise_test(make_sample(), 0.05)
        assert dec.alpha_prime_used == pytest.approx(0.2173, abs=5e-4)

    def test_far_mean_rejects(self):
        s = mb.MvnSample(np.tile([5.0, 0, 0, 0, 0], (20, 1)))
        assert mb.ball_pointwise_test(s, 0.05).reject


class TestUniversalBaselines:
    def _direct_log_u1(self, sample, theta_t):
        # Literal Gaussian log-likelihood difference on the first split.
        n1 = (sample.n + 1) // 2
        y1, y2 = sample.rows[:n1], sample.rows[n1:]
        theta_hat2 = y2.mean(axis=0)

        def loglik(rows, theta):
            return -0.5 * float(np.sum((rows - theta) ** 2))

        return loglik(y1, theta_hat2) - loglik(y1, np.asarray(theta_t, float))

    def test_split_ratio_matches_direct_loglik(self):
        for seed in (0, 1, 2):
            for n in (2, 5, 10, 11):
                s = make_sample(seed=seed, n=n, theta=(1, 0, 0, 0, 0))
                theta_t = mb.project_to_null(s.mean)
                log_u1, log_u2 = mb._split_log_ratios(s, theta_t)
                assert log_u1 == pytest.approx(self._direct_log_u1(s, theta_t), abs=1e-9)

    def test_split_decision_rule(self):
        s = make_sample(seed=4, n=10, theta=(2.5, 0, 0, 0, 0))
        dec = mb.split_lrt_test(s, 0.05)
        log_u1, _ = mb._split_log_ratios(s, mb.project_to_null(s.mean))
        assert dec.reject == (log_u1 > math.log(1.0 / 0.05))

    def test_cross_fit_averages_evalues(self):
        s = make_sample(seed=5, n=9, theta=(2.0, 0, 0, 0, 0))
        dec = mb.cross_fit_lrt_test(s, 0.05)
        log_u1, log_u2 = mb._split_log_ratios(s, mb.project_to_null(s.mean))
        avg = 0.5 * (math.exp(log_u1) + math.exp(log_u2))
        assert dec.reject == (avg > 1.0 / 0.05)

    def test_universal_more_conservative_than_pointwise(self):
        rejections = {"pw": 0, "split": 0}
        for seed in range(300):
            s = make_sample(seed=seed, n=10, theta=(1, 0, 0, 0, 0))
            pw = mb.ball_pointwise_test(s, 0.05).reject
            sp = mb.split_lrt_test(s, 0.05).reject
            rejections["pw"] += pw
            rejections["split"] += sp
        assert rejections["split"] < rejections["pw"]


class TestSubspace:
    def test_neg2_log_lambda(self):
        s = make_sample(seed=6, n=8)
        ybar = s.mean
        assert mb.subspace_neg2_log_lambda(s) == pytest.approx(
            8 * (ybar[3] ** 2 + ybar[4] ** 2), abs=1e-12
        )

    def test_pointwise_equals_traditional_lrt(self):
        # Equivalence of the pointwise decision at the projection with the
        # chi2_2 LRT; algebraically chi2q(1 - alpha', 5) = chi2q(1 - alpha, 2).
        agree = 0
        for seed in range(500):
            s = make_sample(seed=seed, n=6, theta=(0.3, 0, 0, 0.2, 0))
            a = mb.subspace_pointwise_test(s, 0.05).reject
            b = mb.subspace_lrt_test(s, 0.05).reject
            agree += a == b
        assert agree == 500

    def test_quantile_identity(self):
        from pwreject.alpha_prime import alpha_prime_no_boundary

        ap = alpha_prime_no_boundary(0.05, mb.SUBSPACE_SPEC)
        assert chi2_quantile(1.0 - ap, 5) == pytest.approx(
            chi2_quantile(0.95, 2), abs=1e-8
        )


def test_sample_validation():
    with pytest.raises(ValueError):
        mb.MvnSample(np.zeros((3, 4)))
    with pytest.raises(ValueError):
        mb.MvnSample(np.zeros((0, 5)))
