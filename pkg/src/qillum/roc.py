"""Receiver operating characteristics and detection-probability-vs-SNR analysis."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import erfc, erfcinv

from .receivers import FfsfgModel, OpaModel

GENERATOR_CI = "ci_homodyne"
GENERATOR_OPA = "qi_opa"
GENERATOR_FFSFG = "qi_ffsfg"

# 512 points log-spaced in p_f over [1e-7, 1 - 1e-7]; interpolation between
# points is linear in (log p_f, p_d).
PF_GRID_POINTS = 512
PF_MIN = 1e-7
PF_MAX = 1.0 - 1e-7

# Minimum number of mode pairs for the central-limit Gaussian approximation
# of the OPA count statistic.
OPA_CLT_GATE = 1000

_BISECTION_TOL = 1e-4
_BISECTION_MAX_ITER = 200


def gaussian_tail(x):
    """Q(x): upper-tail probability of a standard normal."""
    return 0.5 * erfc(np.asarray(x, dtype=float) / math.sqrt(2.0))


def gaussian_tail_inv(p):
    """Inverse of Q."""
    return math.sqrt(2.0) * erfcinv(2.0 * np.asarray(p, dtype=float))


def pf_grid(points: int = PF_GRID_POINTS) -> np.ndarray:
    return np.logspace(math.log10(PF_MIN), math.log10(PF_MAX), points)


@dataclass(frozen=True)
class RocCurve:
    """Ordered (p_f, p_d) samples with generator metadata."""

    pf: np.ndarray
    pd: np.ndarray
    generator: str
    params: dict = field(default_factory=dict)
    degenerate: bool = False
    clt_warning: bool = False
    pf_stderr: np.ndarray | None = None
    pd_stderr: np.ndarray | None = None

    def __post_init__(self):
        pf = np.asarray(self.pf, dtype=float)
        pd = np.asarray(self.pd, dtype=float)
        if pf.shape != pd.shape:
            raise ValueError("pf and pd must have the same shape")
        if np.any(np.diff(pf) <= 0):
            raise ValueError("pf must be strictly increasing")
        object.__setattr__(self, "pf", pf)
        object.__setattr__(self, "pd", pd)


def detection_index_ci(scenario) -> float:
    """Deflection d = 2 sqrt(M kappa n_s) / sqrt(2 n_b + 1) of the CI homodyne test."""
    return 2.0 * math.sqrt(scenario.m * scenario.kappa * scenario.n_s) / math.sqrt(
        2.0 * scenario.n_b + 1.0
    )


def roc_ci_homodyne(scenario) -> RocCurve:
    """Equal-variance Gaussian ROC of the coherent-state homodyne receiver."""
    d = detection_index_ci(scenario)
    pf = pf_grid()
    params = {"n_s": scenario.n_s, "n_b": scenario.n_b, "kappa": scenario.kappa, "m": scenario.m}
    if d == 0.0:
        return RocCurve(pf, pf.copy(), GENERATOR_CI, params, degenerate=True)
    pd = gaussian_tail(gaussian_tail_inv(pf) - d)
    return RocCurve(pf, pd, GENERATOR_CI, params)


def roc_opa(model: OpaModel, thresholds: np.ndarray | None = None) -> RocCurve:
    """Unequal-variance Gaussian ROC of the OPA count test, by exact threshold sweep."""
    m = model.m
    s0 = math.sqrt(m * model.sigma0_sq)
    s1 = math.sqrt(m * model.sigma1_sq)
    if thresholds is None:
        thresholds = np.linspace(m * model.n0 - 6.0 * s0, m * model.n1 + 6.0 * s1, 2048)
    pf = np.asarray(gaussian_tail((thresholds - m * model.n0) / s0))
    pd = np.asarray(gaussian_tail((thresholds - m * model.n1) / s1))
    order = np.argsort(pf)
    pf, pd = pf[order], pd[order]
    keep = np.concatenate([[True], np.diff(pf) > 0])
    params = {"gain": model.gain, "m": m, "n0": model.n0, "n1": model.n1}
    return RocCurve(
        pf[keep], pd[keep], GENERATOR_OPA, params,
        degenerate=(model.n1 == model.n0),
        clt_warning=m < OPA_CLT_GATE,
    )


def roc_opa_at(model: OpaModel, pf: np.ndarray) -> np.ndarray:
    """OPA detection probability at given false-alarm probabilities.

    Equivalent to the threshold sweep: the threshold achieving each p_f is
    recovered in closed form from the H0 Gaussian.
    """
    pf = np.asarray(pf, dtype=float)
    m = model.m
    s0 = math.sqrt(m * model.sigma0_sq)
    s1 = math.sqrt(m * model.sigma1_sq)
    t = m * model.n0 + gaussian_tail_inv(pf) * s0
    return np.asarray(gaussian_tail((t - m * model.n1) / s1))


def roc_pure_state(h: float, pf: np.ndarray | None = None) -> RocCurve:
    """Neyman-Pearson ROC for discriminating two pure states with h = 1 - |overlap|^2."""
    if not (0.0 <= h <= 1.0):
        raise ValueError("h must lie in [0, 1]")
    if pf is None:
        pf = pf_grid()
    pd = pure_state_pd(h, pf)
    return RocCurve(pf, pd, GENERATOR_FFSFG, {"h": h}, degenerate=(h == 0.0))


def pure_state_pd(h: float, pf) -> np.ndarray:
    pf = np.asarray(pf, dtype=float)
    branch = (np.sqrt(pf * (1.0 - h)) + np.sqrt(np.clip(1.0 - pf, 0.0, 1.0) * h)) ** 2
    return np.where(pf >= 1.0 - h, 1.0, np.minimum(branch, 1.0))


def np_eigensystem(h: float, lam: float) -> tuple[float, float, float, float]:
    """Eigenvalues and operating point of the pure-state Neyman-Pearson test.

    Returns (eta_1, eta_0, p_f, p_d) for threshold lam. The positive root is
    evaluated in a cancellation-free form for lam > 1.
    """
    if not (0.0 < h < 1.0):
        raise ValueError("h must lie strictly in (0, 1); endpoints are degenerate")
    if lam < 0.0:
        raise ValueError("lam must be >= 0")
    half = 0.5 * (1.0 - lam)
    r = math.sqrt(half * half + lam * h)
    if lam <= 1.0:
        eta1 = half + r
    else:
        eta1 = lam * h / (r - half)  # = half + r, stable for large lam
    eta0 = half - r
    p_f = (eta1 - h) / (2.0 * r)
    p_d = (eta1 + lam * h) / (2.0 * r)
    return eta1, eta0, p_f, p_d


def pd_vs_snr(generator: str, p_f: float, snr_grid) -> np.ndarray:
    """Detection probability over an SNR grid at fixed false-alarm probability.

    CI: equal-variance Gaussian test with d = sqrt(2 snr). FF-SFG: pure-state
    ROC with h = 1 - exp(-snr).
    """
    if not (0.0 < p_f < 1.0):
        raise ValueError("p_f must lie in (0, 1)")
    snr = np.asarray(snr_grid, dtype=float)
    if np.any(snr < 0):
        raise ValueError("snr must be >= 0")
    if generator == GENERATOR_CI:
        d = np.sqrt(2.0 * snr)
        return np.asarray(gaussian_tail(gaussian_tail_inv(p_f) - d))
    if generator == GENERATOR_FFSFG:
        h = -np.expm1(-snr)
        branch = (np.sqrt(p_f * (1.0 - h)) + np.sqrt((1.0 - p_f) * h)) ** 2
        return np.where(p_f >= 1.0 - h, 1.0, np.minimum(branch, 1.0))
    raise ValueError(f"unknown generator {generator!r}")


def _pd_at(generator: str, p_f: float, snr: float) -> float:
    return float(pd_vs_snr(generator, p_f, np.array([snr]))[0])


def snr_required(generator: str, p_f: float, p_d_target: float) -> float:
    """Invert the monotone p_d(snr) curve by bisection (tolerance 1e-4 in SNR)."""
    if not (p_f < p_d_target < 1.0):
        raise ValueError("p_d_target must lie in (p_f, 1)")
    lo, hi = 0.0, 1.0
    it = 0
    while _pd_at(generator, p_f, hi) < p_d_target:
        hi *= 2.0
        it += 1
        if it > 60:
            raise ValueError("p_d_target unreachable")
    for _ in range(_BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if _pd_at(generator, p_f, mid) < p_d_target:
            lo = mid
        else:
            hi = mid
        if hi - lo < _BISECTION_TOL:
            break
    return 0.5 * (lo + hi)


def advantage_db(p_f: float, p_d_target: float) -> float:
    """10 log10 of the CI-to-QI ratio of SNRs required for (p_f, p_d_target)."""
    snr_ci = snr_required(GENERATOR_CI, p_f, p_d_target)
    snr_qi = snr_required(GENERATOR_FFSFG, p_f, p_d_target)
    return 10.0 * math.log10(snr_ci / snr_qi)


def roc_ffsfg(scenario) -> RocCurve:
    """FF-SFG ROC for a scenario, via its vacuum-vs-coherent-state approximation.

    Known limitation of the approximation, kept on purpose: as p_f -> 0 the
    curve tends to h instead of 0.
    """
    m = FfsfgModel(scenario.m * scenario.kappa * scenario.n_s / scenario.n_b)
    curve = roc_pure_state(m.h)
    params = dict(curve.params)
    params.update(
        {"n_s": scenario.n_s, "n_b": scenario.n_b, "kappa": scenario.kappa, "m": scenario.m}
    )
    return RocCurve(curve.pf, curve.pd, GENERATOR_FFSFG, params, degenerate=curve.degenerate)
