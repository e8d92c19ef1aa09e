"""Receiver models: coherent-state homodyne, OPA photon counting, FF-SFG approximation."""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import erfc, gammaln

from .bounds import BoundResult, BHATTACHARYYA_UPPER, NS_SMALL, NB_LARGE, KAPPA_SMALL
from .gaussian import IlluminationScenario


@dataclass(frozen=True)
class HomodyneModel:
    """Per-mode quadrature statistics of the coherent-state + homodyne receiver."""

    mean0: float  # per-mode mean under H0
    mean1: float  # per-mode mean under H1, 2 sqrt(kappa n_s)
    variance: float  # per-mode variance, 2 n_b + 1
    m: int

    def __post_init__(self):
        if self.variance <= 1.0:
            raise ValueError("variance must exceed the vacuum level (thermal background present)")
        if self.m < 1:
            raise ValueError("m must be >= 1")


def homodyne_model(scenario: IlluminationScenario) -> HomodyneModel:
    return HomodyneModel(
        mean0=0.0,
        mean1=2.0 * math.sqrt(scenario.kappa * scenario.n_s),
        variance=2.0 * scenario.n_b + 1.0,
        m=scenario.m,
    )


@dataclass(frozen=True)
class HomodyneError:
    p_e: float
    exponent: float      # xi_hom = kappa n_s / (4 n_b + 2)
    p_e_asymptotic: float


def homodyne_error_probability(model: HomodyneModel) -> HomodyneError:
    """Exact mean error probability (1/2) erfc(sqrt(kappa n_s M / (4 n_b + 2)))."""
    # (mean1 - mean0)^2 M / (8 var) reduces to kappa n_s M / (4 n_b + 2)
    arg = (model.mean1 - model.mean0) ** 2 * model.m / (8.0 * model.variance)
    xi = arg / model.m
    p_e = 0.5 * erfc(math.sqrt(arg))
    asym = math.exp(-arg) / (2.0 * math.sqrt(math.pi * arg)) if arg > 0 else 0.5
    return HomodyneError(float(p_e), xi, asym)


@dataclass(frozen=True)
class OpaModel:
    """OPA receiver: photon counting on the amplified idler of M mode pairs."""

    gain: float
    n0: float   # mean amplified-idler photons per mode under H0
    n1: float   # under H1
    sigma0_sq: float
    sigma1_sq: float
    m: int
    threshold: float
    scenario: IlluminationScenario

    def __post_init__(self):
        if self.n1 < self.n0:
            raise ValueError("n1 must be >= n0")


def opa_model(scenario: IlluminationScenario, gain: float) -> OpaModel:
    """Build the OPA receiver model for gain G = 1 + eps^2 (G = 1 is degenerate)."""
    if gain < 1.0:
        raise ValueError("gain must be >= 1")
    g = gain
    n_s, n_b, kappa = scenario.n_s, scenario.n_b, scenario.kappa
    n0 = g * n_s + (g - 1.0) * (1.0 + n_b)
    n1 = n0 + (g - 1.0) * kappa * n_s + 2.0 * math.sqrt(g * (g - 1.0)) * math.sqrt(
        kappa * n_s * (n_s + 1.0)
    )
    s0_sq = n0 * (n0 + 1.0)
    s1_sq = n1 * (n1 + 1.0)
    s0, s1 = math.sqrt(s0_sq), math.sqrt(s1_sq)
    if s0 + s1 > 0:
        threshold = scenario.m * (s1 * n0 + s0 * n1) / (s0 + s1)
    else:
        threshold = 0.0
    return OpaModel(g, n0, n1, s0_sq, s1_sq, scenario.m, threshold, scenario)


def optimal_gain(scenario: IlluminationScenario) -> float:
    """Paper rule eps^2 = n_s / sqrt(n_b), large enough that eps^2 n_b >> n_s."""
    return 1.0 + scenario.n_s / math.sqrt(scenario.n_b)


def negative_binomial_log_pmf(n: int, copies: int, mean_per_copy: float) -> float:
    """log of C(n+M-1, n) N^n / (1+N)^(n+M), the M-fold thermal photon-count law."""
    if n < 0 or int(n) != n:
        raise ValueError("n must be a non-negative integer")
    if mean_per_copy < 0:
        raise ValueError("mean photon number must be >= 0")
    if mean_per_copy == 0.0:
        return 0.0 if n == 0 else -math.inf
    nn = float(n)
    log_binom = gammaln(nn + copies) - gammaln(nn + 1.0) - gammaln(copies)
    return float(
        log_binom + nn * math.log(mean_per_copy) - (nn + copies) * math.log1p(mean_per_copy)
    )


def opa_count_pmf(model: OpaModel, n: int, hypothesis: int = 0) -> float:
    """Probability of `n` total photon counts under H0 or H1."""
    if hypothesis not in (0, 1):
        raise ValueError("hypothesis must be 0 or 1")
    mean = model.n0 if hypothesis == 0 else model.n1
    return math.exp(negative_binomial_log_pmf(n, model.m, mean))


def opa_error_bound(model: OpaModel) -> BoundResult:
    """Bhattacharyya bound p_e <= (1/2) Q_B^M for the OPA threshold test."""
    q_b = 1.0 / (
        math.sqrt((1.0 + model.n1) * (1.0 + model.n0)) - math.sqrt(model.n0 * model.n1)
    )
    xi = -math.log(q_b)
    sc = model.scenario
    validity = {
        "ns_small": sc.n_s < NS_SMALL,
        "nb_large": sc.n_b > NB_LARGE,
        "kappa_small": sc.kappa < KAPPA_SMALL,
    }
    p_e = min(0.5, 0.5 * q_b**model.m)
    ceiling = sc.kappa * sc.n_s / (2.0 * sc.n_b)
    return BoundResult(xi, 0.5, p_e, BHATTACHARYYA_UPPER, validity, approx_exponent=ceiling)


def opa_taylor_exponent(scenario: IlluminationScenario, eps_sq: float) -> float:
    """Low-gain expansion xi_B of the OPA error exponent at pump strength eps^2."""
    if eps_sq < 0:
        raise ValueError("eps_sq must be >= 0")
    n_s, n_b, kappa = scenario.n_s, scenario.n_b, scenario.kappa
    num = eps_sq * kappa * n_s * (n_s + 1.0)
    den = 2.0 * n_s * (n_s + 1.0) + 2.0 * eps_sq * (2.0 * n_s + 1.0) * (n_b + n_s + 1.0)
    return num / den


def opa_optimal_exponent(scenario: IlluminationScenario) -> float:
    """Supremum of xi_B over the pump strength (the large-eps^2 plateau)."""
    n_s, n_b, kappa = scenario.n_s, scenario.n_b, scenario.kappa
    return kappa * n_s * (n_s + 1.0) / (2.0 * (2.0 * n_s + 1.0) * (n_b + n_s + 1.0))


@dataclass(frozen=True)
class FfsfgModel:
    """FF-SFG receiver approximated as vacuum vs coherent-state discrimination."""

    snr: float  # M kappa n_s / n_b

    def __post_init__(self):
        if self.snr < 0:
            raise ValueError("snr must be >= 0")

    @property
    def h(self) -> float:
        """1 - |<0|sqrt(snr)>|^2 = 1 - exp(-snr)."""
        return -math.expm1(-self.snr)

    @property
    def overlap(self) -> float:
        """State overlap nu = exp(-snr / 2)."""
        return math.exp(-0.5 * self.snr)


def ffsfg_model(scenario: IlluminationScenario) -> FfsfgModel:
    return FfsfgModel(scenario.m * scenario.kappa * scenario.n_s / scenario.n_b)
