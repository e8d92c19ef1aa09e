"""Stochastic oracle: sample receiver statistics and estimate errors and ROCs.

RNG: numpy's counter-based Philox generator keyed by the batch seed. Each
operation draws with a fixed vectorized layout (hypothesis array first, then
the observation statistics), so identical (model, trials, seed) inputs give
bit-identical results regardless of how the batch is later partitioned.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .receivers import HomodyneModel, OpaModel
from .roc import GENERATOR_CI, GENERATOR_OPA, RocCurve


@dataclass(frozen=True)
class TrialBatch:
    """Outcome counts of a seeded batch of binary-hypothesis trials."""

    seed: int
    trials: int
    correct_reject: int  # decide H0, H0 true
    false_alarm: int     # decide H1, H0 true
    detect: int          # decide H1, H1 true
    miss: int            # decide H0, H1 true

    def __post_init__(self):
        total = self.correct_reject + self.false_alarm + self.detect + self.miss
        if total != self.trials:
            raise ValueError("outcome counts must sum to trials")

    @property
    def n_h0(self) -> int:
        return self.correct_reject + self.false_alarm

    @property
    def n_h1(self) -> int:
        return self.detect + self.miss

    @property
    def p_f(self) -> float:
        return self.false_alarm / self.n_h0 if self.n_h0 else math.nan

    @property
    def p_d(self) -> float:
        return self.detect / self.n_h1 if self.n_h1 else math.nan

    @property
    def p_e(self) -> float:
        return (self.false_alarm + self.miss) / self.trials

    @property
    def p_f_stderr(self) -> float:
        return _binom_se(self.p_f, self.n_h0)

    @property
    def p_d_stderr(self) -> float:
        return _binom_se(self.p_d, self.n_h1)

    @property
    def p_e_stderr(self) -> float:
        return _binom_se(self.p_e, self.trials)


def _binom_se(p: float, n: int) -> float:
    if not n:
        return math.nan
    return math.sqrt(p * (1.0 - p) / n)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _batch_from_decisions(seed, trials, h1_true, decide_h1) -> TrialBatch:
    fa = int(np.count_nonzero(~h1_true & decide_h1))
    cr = int(np.count_nonzero(~h1_true & ~decide_h1))
    det = int(np.count_nonzero(h1_true & decide_h1))
    miss = int(np.count_nonzero(h1_true & ~decide_h1))
    return TrialBatch(seed, trials, cr, fa, det, miss)


def _homodyne_statistic(model: HomodyneModel, rng, h1_true) -> np.ndarray:
    # Sum of M per-mode Gaussian homodyne outcomes; sampled from its exact
    # Gaussian law (mean M mu_H, variance M var) instead of M individual draws.
    mean = np.where(h1_true, model.m * model.mean1, model.m * model.mean0)
    return mean + math.sqrt(model.m * model.variance) * rng.standard_normal(h1_true.shape[0])


def _opa_counts(model: OpaModel, rng, h1_true) -> np.ndarray:
    # Gamma-Poisson mixture: shape M, scale N is exactly the M-copy
    # negative-binomial photon-count law.
    mean = np.where(h1_true, model.n1, model.n0)
    lam = rng.gamma(shape=float(model.m), scale=mean)
    return rng.poisson(lam)


def run_homodyne_trials(model: HomodyneModel, trials: int, seed: int) -> TrialBatch:
    """Threshold test on the summed homodyne statistic; H1 iff sum >= M sqrt(kappa n_s)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = _rng(seed)
    h1_true = rng.random(trials) < 0.5
    q = _homodyne_statistic(model, rng, h1_true)
    threshold = model.m * 0.5 * (model.mean0 + model.mean1)  # = M sqrt(kappa n_s)
    return _batch_from_decisions(seed, trials, h1_true, q >= threshold)


def run_opa_trials(model: OpaModel, trials: int, seed: int) -> TrialBatch:
    """Exact negative-binomial count sampling; H1 iff total count exceeds the threshold.

    Ties (count exactly at threshold) decide H0.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = _rng(seed)
    h1_true = rng.random(trials) < 0.5
    counts = _opa_counts(model, rng, h1_true)
    return _batch_from_decisions(seed, trials, h1_true, counts > model.threshold)


def empirical_roc(model, trials: int, thresholds, seed: int) -> RocCurve:
    """Empirical step-ROC from one sampling pass under each hypothesis.

    `thresholds` must be sorted ascending; the decision is H1 iff the
    statistic exceeds the threshold.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    thresholds = np.asarray(thresholds, dtype=float)
    if np.any(np.diff(thresholds) < 0):
        raise ValueError("thresholds must be sorted ascending")
    rng = _rng(seed)
    if isinstance(model, HomodyneModel):
        stat0 = _homodyne_statistic(model, rng, np.zeros(trials, dtype=bool))
        stat1 = _homodyne_statistic(model, rng, np.ones(trials, dtype=bool))
        generator = GENERATOR_CI
    elif isinstance(model, OpaModel):
        stat0 = _opa_counts(model, rng, np.zeros(trials, dtype=bool))
        stat1 = _opa_counts(model, rng, np.ones(trials, dtype=bool))
        generator = GENERATOR_OPA
    else:
        raise TypeError(f"unsupported model type {type(model).__name__}")
    # One vectorized pass: P(stat > t) for every threshold, via sorted counts.
    pf = 1.0 - np.searchsorted(np.sort(stat0), thresholds, side="right") / trials
    pd = 1.0 - np.searchsorted(np.sort(stat1), thresholds, side="right") / trials
    # Larger threshold -> smaller p_f; reverse so p_f is non-decreasing, then
    # collapse duplicate p_f points (keeping the best p_d of each run) so the
    # curve is strictly increasing.
    pf, pd = pf[::-1], pd[::-1]
    keep = np.concatenate([np.diff(pf) > 0, [True]])
    pf, pd = pf[keep], pd[keep]
    pf_se = np.sqrt(pf * (1.0 - pf) / trials)
    pd_se = np.sqrt(pd * (1.0 - pd) / trials)
    return RocCurve(
        pf, pd, generator,
        {"trials": trials, "seed": seed, "empirical": True},
        pf_stderr=pf_se, pd_stderr=pd_se,
    )
