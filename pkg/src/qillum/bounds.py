"""Analytic error-probability bounds for classical and quantum illumination.

Classical Chernoff/Bhattacharyya exponents for scalar Gaussian models, the
coherent-state (classical) upper and lower bounds, and the quantum-illumination
upper bound in its small-signal / strong-background closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.optimize import minimize_scalar

CHERNOFF_UPPER = "chernoff_upper"
BHATTACHARYYA_UPPER = "bhattacharyya_upper"
LOWER = "lower"

# Documented convention for the asymptotic-regime validity flags:
# "much less than" means below 0.1, "much greater than" means above 10.
NS_SMALL = 0.1
NB_LARGE = 10.0
KAPPA_SMALL = 0.1


@dataclass(frozen=True)
class BoundResult:
    """Error-probability bound: p_e = prefactor * exp(-m * exponent), clipped to [0, 1/2]."""

    exponent: float
    prefactor: float
    p_e: float
    kind: str
    validity: dict = field(default_factory=dict)
    approx_exponent: float | None = None


@dataclass(frozen=True)
class ScalarGaussianPair:
    """Two scalar Gaussian observation models p_0 = N(mean0, var0), p_1 = N(mean1, var1)."""

    mean0: float
    mean1: float
    var0: float
    var1: float

    def __post_init__(self):
        if self.var0 <= 0 or self.var1 <= 0:
            raise ValueError("variances must be strictly positive")


def chernoff_integrand_exponent(pair: ScalarGaussianPair, s: float) -> float:
    """-log integral of p_0^s p_1^(1-s) for the Gaussian pair (closed form)."""
    v0, v1 = pair.var0, pair.var1
    m0, m1 = pair.mean0, pair.mean1
    a = s / v0 + (1.0 - s) / v1
    b = s * m0 / v0 + (1.0 - s) * m1 / v1
    c = s * m0 * m0 / v0 + (1.0 - s) * m1 * m1 / v1
    return 0.5 * (s * math.log(v0) + (1.0 - s) * math.log(v1) + math.log(a) + c - b * b / a)


def chernoff_exponent_gaussian(pair: ScalarGaussianPair) -> tuple[float, float]:
    """Chernoff exponent: maximize -log integral p_0^s p_1^(1-s) over s in [0, 1].

    Returns (s_star, exponent). The integrand is smooth and unimodal for
    Gaussians, so a bracketed scalar minimization suffices.
    """
    res = minimize_scalar(
        lambda s: -chernoff_integrand_exponent(pair, s),
        bounds=(0.0, 1.0),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(res.x), max(0.0, float(-res.fun))


def bhattacharyya_exponent_gaussian(pair: ScalarGaussianPair) -> float:
    """Bhattacharyya exponent: the s = 1/2 evaluation of the Chernoff integrand."""
    return max(0.0, chernoff_integrand_exponent(pair, 0.5))


def _clip_upper(p: float) -> float:
    return min(0.5, max(0.0, p))


def cs_exact_exponent(n_s: float, n_b: float, kappa: float) -> float:
    """Exact coherent-state Chernoff exponent kappa n_s (sqrt(n_b+1) - sqrt(n_b))^2."""
    return kappa * n_s * (math.sqrt(n_b + 1.0) - math.sqrt(n_b)) ** 2


def cs_chernoff_bound(scenario) -> BoundResult:
    """Coherent-state upper bound (Chernoff = Bhattacharyya for this case)."""
    xi = cs_exact_exponent(scenario.n_s, scenario.n_b, scenario.kappa)
    xi_approx = scenario.kappa * scenario.n_s / (4.0 * scenario.n_b)
    rel = abs(xi - xi_approx) / xi if xi > 0 else 0.0
    validity = {
        "nb_large": scenario.n_b > NB_LARGE,
        "nb_large_approx_ok": rel <= 0.05,
    }
    p_e = _clip_upper(0.5 * math.exp(-scenario.m * xi))
    return BoundResult(xi, 0.5, p_e, CHERNOFF_UPPER, validity, approx_exponent=xi_approx)


def classical_lower_bound(scenario) -> BoundResult:
    """Lower bound on p_e for every classical (correlations <= C_c) transmitter state."""
    xi = cs_exact_exponent(scenario.n_s, scenario.n_b, scenario.kappa)
    p_e = 0.5 * (1.0 - math.sqrt(-math.expm1(-scenario.m * xi)))
    # Large-M form 1/4 exp(-M kappa n_s / 2 n_b): exponent xi/2, prefactor 1/4.
    xi_large_m = scenario.kappa * scenario.n_s / (2.0 * scenario.n_b)
    validity = {"nb_large": scenario.n_b > NB_LARGE}
    return BoundResult(0.5 * xi, 0.25, p_e, LOWER, validity, approx_exponent=xi_large_m)


def qi_upper_bound(scenario) -> BoundResult:
    """Quantum-illumination upper bound, exponent kappa n_s / n_b.

    The closed form is the small-signal, weak-reflection, strong-background
    limit; validity flags report when the scenario leaves that regime.
    """
    if scenario.n_b == 0:
        raise ValueError("n_b must be > 0 (formula diverges without background)")
    xi = scenario.kappa * scenario.n_s / scenario.n_b
    validity = {
        "ns_small": scenario.n_s < NS_SMALL,
        "nb_large": scenario.n_b > NB_LARGE,
        "kappa_small": scenario.kappa < KAPPA_SMALL,
    }
    p_e = _clip_upper(0.5 * math.exp(-scenario.m * xi))
    return BoundResult(xi, 0.5, p_e, BHATTACHARYYA_UPPER, validity)


def quantum_lower_from_bhattacharyya(xi_qb: float, m: int) -> float:
    """Lower bound (1/2)(1 - sqrt(1 - exp(-m xi_qb))) implied by a Bhattacharyya exponent."""
    if xi_qb < 0:
        raise ValueError("xi_qb must be >= 0")
    return 0.5 * (1.0 - math.sqrt(-math.expm1(-m * xi_qb)))
