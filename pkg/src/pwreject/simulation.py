"""Seeded Monte Carlo harness for rejection-rate and coverage studies.

Each replicate r draws its own RNG stream from (master_seed, r), generates
one dataset under the configured truth, and applies every requested method
to that same dataset.  Aggregation is pure counting, so results do not
depend on execution order or on the worker count (set via the
PWREJECT_WORKERS environment variable).
"""

import concurrent.futures
import math
import os
import time
from dataclasses import dataclass

import numpy as np

from pwreject.distributions import RngStream
from pwreject.models import linear_or, mvn_ball, normal_mean, nuisance
from pwreject.models import MODEL_IDS

__all__ = ["ExperimentConfig", "ExperimentResult", "run_experiment", "run_suite", "SUITE_IDS"]

MODES = ("type1", "power", "coverage")

_MODEL_MIN_N = {"interval": 2, "or_null": 4, "nuisance": 3, "ball": 1}


@dataclass(frozen=True)
class ExperimentConfig:
    model: str
    mode: str
    truth: tuple
    n: int
    replicates: int
    alpha: float
    m: int
    master_seed: int
    methods: tuple
    a: float = 0.0  # interval-null lower endpoint
    b: float = 1.0  # interval-null upper endpoint
    psi0: float = 1.0  # tested psi value for the nuisance model
    sigma: float = 1.0  # noise standard deviation

    def __post_init__(self):
        if self.model not in MODEL_IDS:
            raise ValueError("unknown model %r" % (self.model,))
        if self.mode not in MODES:
            raise ValueError("unknown mode %r" % (self.mode,))
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        if self.n < _MODEL_MIN_N[self.model]:
            raise ValueError(
                "n=%d is below the %r model minimum %d"
                % (self.n, self.model, _MODEL_MIN_N[self.model])
            )
        if not self.methods:
            raise ValueError("at least one method is required")


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    rates: dict
    margins: dict
    flagged_replicates: int
    wall_time: float


def margin_of_error(rate, count):
    """1.96 * sqrt(rate * (1 - rate) / count)."""
    return 1.96 * math.sqrt(rate * (1.0 - rate) / count)


def _generate(config, stream):
    g = stream.generator
    if config.model == "interval":
        mu = config.truth[0]
        return normal_mean.UnivariateSample(
            mu + config.sigma * g.standard_normal(config.n)
        )
    if config.model == "or_null":
        b1, b2 = config.truth
        x = g.standard_normal((config.n, 2))
        eps = config.sigma * g.standard_normal(config.n)
        y = b1 * x[:, 0] + b2 * x[:, 1] + eps
        return linear_or.RegressionData(x[:, 0], x[:, 1], y)
    if config.model == "nuisance":
        psi, phi = config.truth
        x = g.standard_normal(config.n)
        eps = config.sigma * g.standard_normal(config.n)
        return nuisance.XYData(x, psi * phi * x + psi * phi * phi + eps)
    if config.model == "ball":
        theta = np.asarray(config.truth, dtype=float)
        return mvn_ball.MvnSample(theta + g.standard_normal((config.n, mvn_ball.DIM)))
    raise AssertionError(config.model)


def _method_fn(config, method):
    """Dataset -> bool (rejection, or region-contains-truth for coverage)."""
    model, mode, alpha, m = config.model, config.mode, config.alpha, config.m
    if model == "interval":
        if method == "pointwise":
            return lambda d: normal_mean.interval_null_test(d, config.a, config.b, alpha).reject
        if method == "bonferroni":
            return lambda d: normal_mean.bonferroni_interval_test(d, config.a, config.b, alpha).reject
    elif model == "or_null":
        if method == "pointwise":
            return lambda d: linear_or.or_null_test(d, alpha, max(1, m // 2)).reject
    elif model == "nuisance":
        if mode == "coverage":
            psi_true = config.truth[0]
            if method == "pointwise":
                return lambda d: nuisance.psi_region_F(d, alpha, m).contains(psi_true)
            if method == "lrt":
                return lambda d: nuisance.psi_region_LRT(d, alpha, m).contains(psi_true)
        else:
            if method == "pointwise":
                return lambda d: nuisance.psi_pointwise_test(d, config.psi0, alpha, m).reject
            if method == "lrt":
                return lambda d: nuisance.psi_lrt_test(d, config.psi0, alpha, m).reject
    elif model == "ball":
        if method == "pointwise":
            return lambda d: mvn_ball.ball_pointwise_test(d, alpha).reject
        if method == "split_lrt":
            return lambda d: mvn_ball.split_lrt_test(d, alpha).reject
        if method == "crossfit_lrt":
            return lambda d: mvn_ball.cross_fit_lrt_test(d, alpha).reject
    raise ValueError("method %r not available for model %r" % (method, model))


def _run_chunk(config, fns, start, stop):
    counts = [0] * len(fns)
    flagged = 0
    for r in range(start, stop):
        stream = RngStream(config.master_seed, r)
        data = _generate(config, stream)
        try:
            for i, fn in enumerate(fns):
                if fn(data):
                    counts[i] += 1
        except nuisance.DegenerateFitError:
            flagged += 1
    return counts, flagged


def run_experiment(config):
    """Run one Monte Carlo experiment; returns per-method rates and margins."""
    start_time = time.perf_counter()
    fns = [_method_fn(config, method) for method in config.methods]
    workers = int(os.environ.get("PWREJECT_WORKERS", "1"))
    reps = config.replicates
    if workers <= 1:
        chunks = [_run_chunk(config, fns, 0, reps)]
    else:
        bounds = np.linspace(0, reps, workers + 1).astype(int)
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_chunk, config, fns, int(lo), int(hi))
                for lo, hi in zip(bounds[:-1], bounds[1:])
            ]
            chunks = [f.result() for f in futures]
    counts = [sum(c[i] for c, _ in chunks) for i in range(len(fns))]
    flagged = sum(fl for _, fl in chunks)
    effective = reps - flagged
    if effective < 1:
        raise RuntimeError("all replicates were flagged as degenerate")
    rates = {m: counts[i] / effective for i, m in enumerate(config.methods)}
    margins = {m: margin_of_error(rates[m], effective) for m in config.methods}
    return ExperimentResult(
        config, rates, margins, flagged, time.perf_counter() - start_time
    )


# --- suite definitions ----------------------------------------------------

SUITE_IDS = ("table1", "table2", "fig1", "fig2", "fig3", "fig4", "fig5")

_BALL_BOUNDARY = (1.0, 0.0, 0.0, 0.0, 0.0)


def _suite_configs(suite, scale):
    def reps(base):
        r = round(base * scale)
        if r < 1:
            raise ValueError("scale %r leaves no replicates" % (scale,))
        return r

    out = []
    if suite == "table1":
        for m in (10, 100):
            for n in (5, 10, 20, 50, 100):
                out.append(dict(model="or_null", mode="type1", truth=(1.0, 0.0),
                                n=n, replicates=reps(10_000), alpha=0.05, m=m,
                                methods=("pointwise",)))
    elif suite == "table2":
        for n in (5, 10, 30, 100, 1000):
            out.append(dict(model="ball", mode="type1", truth=_BALL_BOUNDARY,
                            n=n, replicates=reps(40_000), alpha=0.05, m=1,
                            methods=("pointwise", "split_lrt", "crossfit_lrt")))
    elif suite == "fig1":
        for mu in np.linspace(-0.5, 1.5, 9):
            out.append(dict(model="interval", mode="type1", truth=(float(mu),),
                            n=20, replicates=reps(10_000), alpha=0.05, m=0,
                            methods=("pointwise", "bonferroni")))
    elif suite == "fig2":
        for n in (5, 10, 20, 50, 200):
            for mu in (0.0, 1.0):
                out.append(dict(model="interval", mode="type1", truth=(mu,),
                                n=n, replicates=reps(10_000), alpha=0.05, m=0,
                                methods=("pointwise", "bonferroni")))
    elif suite == "fig3":
        for n in (5, 15, 30, 50, 100, 200):
            out.append(dict(model="nuisance", mode="coverage", truth=(1.0, 2.0),
                            n=n, replicates=reps(10_000), alpha=0.05, m=50,
                            methods=("pointwise", "lrt")))
    elif suite == "fig4":
        for psi in (0.5, 1.0, 1.5):
            for phi in (1.0, 1.5, 2.0, 2.5, 3.0):
                for n in (5, 10):
                    out.append(dict(model="nuisance", mode="power", truth=(psi, phi),
                                    n=n, replicates=reps(10_000), alpha=0.05, m=100,
                                    psi0=1.0, methods=("pointwise", "lrt")))
    elif suite == "fig5":
        for mu in (1.05, 1.2, 1.5):
            for n in (5, 10, 30, 100, 200, 1000):
                out.append(dict(model="ball", mode="power",
                                truth=(mu, 0.0, 0.0, 0.0, 0.0),
                                n=n, replicates=reps(10_000), alpha=0.05, m=1,
                                methods=("pointwise", "split_lrt", "crossfit_lrt")))
    else:
        raise ValueError("unknown suite %r" % (suite,))
    return out


def _setting_seed(master_seed, index):
    seq = np.random.SeedSequence(int(master_seed), spawn_key=(1_000_000 + index,))
    return int(seq.generate_state(1, np.uint64)[0])


CSV_COLUMNS = (
    "suite", "model", "truth", "n", "m", "method",
    "rate", "margin", "replicates", "seed",
)


def run_suite(suite, master_seed, scale=1.0):
    """Run every setting of a named suite; yields one row dict per method."""
    if scale <= 0:
        raise ValueError("scale must be positive, got %r" % (scale,))
    rows = []
    for idx, kwargs in enumerate(_suite_configs(suite, scale)):
        config = ExperimentConfig(master_seed=_setting_seed(master_seed, idx), **kwargs)
        result = run_experiment(config)
        for method in config.methods:
            rows.append({
                "suite": suite,
                "model": config.model,
                "truth": "/".join(repr(t) for t in config.truth),
                "n": config.n,
                "m": config.m,
                "method": method,
                "rate": repr(result.rates[method]),
                "margin": repr(result.margins[method]),
                "replicates": config.replicates - result.flagged_replicates,
                "seed": config.master_seed,
            })
    return rows
