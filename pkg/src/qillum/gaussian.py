"""Gaussian states in phase space: constructors, physicality checks, Wigner evaluation.

Conventions: quadratures q = a + a^dag, p = i(a^dag - a), so the vacuum
covariance matrix is the identity and a coherent state |alpha> has mean
vector (2 Re alpha, 2 Im alpha).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .constants import HBAR, K_B

# Relative tolerance for covariance symmetry.
SYMMETRY_RTOL = 1e-12
# Minimum eigenvalue of V + i*Omega accepted as physical (absorbs eigensolver noise).
PSD_TOL = -1e-9

_OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def symplectic_form(num_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form for `num_modes` modes."""
    if num_modes < 1:
        raise ValueError("num_modes must be positive")
    return np.kron(np.eye(num_modes), _OMEGA_1)


@dataclass(frozen=True, eq=False)
class GaussianState:
    """Mean vector and covariance matrix of an N-mode Gaussian state."""

    num_modes: int
    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        if self.num_modes < 1:
            raise ValueError("num_modes must be positive")
        mean = np.atleast_1d(np.asarray(self.mean, dtype=float))
        cov = np.asarray(self.cov, dtype=float)
        d = 2 * self.num_modes
        if mean.shape != (d,):
            raise ValueError(f"mean must have length {d}")
        if cov.shape != (d, d):
            raise ValueError(f"cov must be {d}x{d}")
        scale = max(1.0, float(np.max(np.abs(cov))))
        if np.max(np.abs(cov - cov.T)) > SYMMETRY_RTOL * scale:
            raise ValueError("covariance matrix is not symmetric")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", 0.5 * (cov + cov.T))


@dataclass(frozen=True)
class MarginalDensity:
    """Proper (classical) Gaussian probability density over selected quadratures."""

    mean: np.ndarray
    cov: np.ndarray


@dataclass(frozen=True)
class TwoModeCovariance:
    """Symmetric two-mode covariance with diagonals (A, B) and cross term C."""

    a_diag: float
    b_diag: float
    c_offdiag: float

    def __post_init__(self):
        if self.a_diag < 1.0 or self.b_diag < 1.0:
            raise ValueError("diagonal variances must be >= 1 (vacuum level)")

    def as_state(self) -> GaussianState:
        a, b, c = self.a_diag, self.b_diag, self.c_offdiag
        cov = np.array(
            [
                [a, 0.0, c, 0.0],
                [0.0, a, 0.0, -c],
                [c, 0.0, b, 0.0],
                [0.0, -c, 0.0, b],
            ]
        )
        return GaussianState(2, np.zeros(4), cov)


@dataclass(frozen=True)
class IlluminationScenario:
    """Parameters of one target-detection problem.

    n_s: mean signal photons per mode, n_b: mean background photons per mode,
    kappa: round-trip transmissivity, m: number of signal-idler mode pairs,
    w0/w1: prior probabilities of target absent/present.
    """

    n_s: float
    n_b: float
    kappa: float
    m: int
    w0: float = 0.5
    w1: float = 0.5

    def __post_init__(self):
        if not self.n_s > 0:
            raise ValueError("n_s must be > 0")
        if not self.n_b > 0:
            raise ValueError("n_b must be > 0")
        if not (0.0 < self.kappa <= 1.0):
            raise ValueError("kappa must be in (0, 1]")
        if int(self.m) != self.m or self.m < 1:
            raise ValueError("m must be a positive integer")
        if not (0.0 <= self.w0 <= 1.0 and 0.0 <= self.w1 <= 1.0):
            raise ValueError("priors must lie in [0, 1]")
        if self.w0 + self.w1 != 1.0:
            raise ValueError("priors must sum to 1")


def thermal_occupation(frequency: float, temperature: float) -> float:
    """Bose-Einstein mean photon number of a mode at `frequency` (Hz) and `temperature` (K)."""
    if frequency <= 0:
        raise ValueError("frequency must be > 0")
    if temperature <= 0:
        raise ValueError("temperature must be > 0")
    x = HBAR * 2.0 * math.pi * frequency / (K_B * temperature)
    return 1.0 / math.expm1(x)


def coherent_state(alpha: complex) -> GaussianState:
    """Coherent state |alpha>: vacuum covariance, mean (2 Re alpha, 2 Im alpha)."""
    alpha = complex(alpha)
    mean = np.array([2.0 * alpha.real, 2.0 * alpha.imag])
    return GaussianState(1, mean, np.eye(2))


def thermal_state(n_t: float) -> GaussianState:
    """Single-mode thermal state with mean photon number `n_t`."""
    if n_t < 0:
        raise ValueError("n_t must be >= 0")
    return GaussianState(1, np.zeros(2), (2.0 * n_t + 1.0) * np.eye(2))


def tmsv_state(n_s: float) -> GaussianState:
    """Two-mode squeezed vacuum with `n_s` mean photons per mode."""
    if n_s < 0:
        raise ValueError("n_s must be >= 0")
    s = 2.0 * n_s + 1.0
    c_q = 2.0 * math.sqrt(n_s * (n_s + 1.0))
    return TwoModeCovariance(s, s, c_q).as_state()


def tmsv_cross_correlation(n_s: float) -> float:
    """Cross-correlation C_q = 2 sqrt(n_s (n_s + 1)) of the two-mode squeezed vacuum."""
    if n_s < 0:
        raise ValueError("n_s must be >= 0")
    return 2.0 * math.sqrt(n_s * (n_s + 1.0))


def return_idler_states(scenario: IlluminationScenario) -> tuple[GaussianState, GaussianState]:
    """Joint return-idler states under H0 (target absent) and H1 (target present).

    Mode ordering: (return, idler). The H0 covariance is diag(B, B, S, S); the
    H1 covariance adds the surviving cross-correlation +-sqrt(kappa) C_q.
    """
    s = 2.0 * scenario.n_s + 1.0
    b = 2.0 * scenario.n_b + 1.0
    a = 2.0 * scenario.kappa * scenario.n_s + b
    c = math.sqrt(scenario.kappa) * tmsv_cross_correlation(scenario.n_s)
    v0 = GaussianState(2, np.zeros(4), np.diag([b, b, s, s]))
    v1 = TwoModeCovariance(a, s, c).as_state()
    return v0, v1


def uncertainty_check(state: GaussianState) -> tuple[bool, float]:
    """Test V + i*Omega >= 0; returns (physical, minimum eigenvalue)."""
    omega = symplectic_form(state.num_modes)
    herm = state.cov + 1j * omega
    min_eig = float(np.linalg.eigvalsh(herm)[0])
    return min_eig >= PSD_TOL, min_eig


def entanglement_check(cov: TwoModeCovariance) -> bool:
    """Duan-Simon criterion for covariances of the symmetric two-mode form.

    True iff C > sqrt(1 - A - B + AB), i.e. the state is entangled.
    """
    physical, _ = uncertainty_check(cov.as_state())
    if not physical:
        raise ValueError("covariance violates the uncertainty relation")
    a, b = cov.a_diag, cov.b_diag
    return abs(cov.c_offdiag) > math.sqrt((a - 1.0) * (b - 1.0))


def wigner_eval(state: GaussianState, point) -> np.ndarray | float:
    """Evaluate the Gaussian Wigner function at `point` (shape (..., 2N))."""
    pts = np.asarray(point, dtype=float)
    d = 2 * state.num_modes
    if pts.shape[-1] != d:
        raise ValueError(f"point must have trailing dimension {d}")
    det = np.linalg.det(state.cov)
    if det <= 0:
        raise np.linalg.LinAlgError("singular covariance matrix")
    delta = pts - state.mean
    mahal = np.einsum("...i,ij,...j->...", delta, np.linalg.inv(state.cov), delta)
    w = np.exp(-0.5 * mahal) / ((2.0 * math.pi) ** state.num_modes * math.sqrt(det))
    return w if w.ndim else float(w)


def marginal(state: GaussianState, kept_indices: Sequence[int]):
    """Marginal over the quadratures indexed by `kept_indices`.

    Returns a GaussianState when the kept indices form whole (q, p) mode pairs
    in order; otherwise returns a MarginalDensity describing the (proper)
    probability density of the selected quadratures.
    """
    idx = list(kept_indices)
    d = 2 * state.num_modes
    if len(idx) == 0:
        raise ValueError("kept_indices must be non-empty")
    if any(i < 0 or i >= d for i in idx):
        raise IndexError("quadrature index out of range")
    if len(set(idx)) != len(idx):
        raise ValueError("kept_indices must be distinct")
    mean = state.mean[idx]
    cov = state.cov[np.ix_(idx, idx)]
    whole_pairs = (
        len(idx) % 2 == 0
        and all(idx[k + 1] == idx[k] + 1 and idx[k] % 2 == 0 for k in range(0, len(idx), 2))
    )
    if whole_pairs:
        return GaussianState(len(idx) // 2, mean, cov)
    return MarginalDensity(mean, cov)


def marginal_density_eval(density: MarginalDensity, point) -> np.ndarray | float:
    """Evaluate a MarginalDensity (ordinary multivariate normal) at `point`."""
    pts = np.asarray(point, dtype=float)
    k = density.mean.shape[0]
    if pts.shape[-1] != k:
        raise ValueError(f"point must have trailing dimension {k}")
    det = np.linalg.det(density.cov)
    if det <= 0:
        raise np.linalg.LinAlgError("singular covariance matrix")
    delta = pts - density.mean
    mahal = np.einsum("...i,ij,...j->...", delta, np.linalg.inv(density.cov), delta)
    w = np.exp(-0.5 * mahal) / ((2.0 * math.pi) ** (k / 2.0) * math.sqrt(det))
    return w if w.ndim else float(w)


def wigner_grid(
    state: GaussianState,
    axes: tuple[int, int] = (0, 1),
    half_range: float | None = None,
    points: int = 101,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Tabulate the 2-D marginal density over two quadratures on a square grid.

    For a single-mode state with axes (0, 1) this is the Wigner function
    itself. Returns (x, y, w) arrays of length points**2 in row-major order.
    """
    i, j = axes
    sub = marginal(state, [i, j])
    if isinstance(sub, GaussianState):
        mean, cov = sub.mean, sub.cov
        eval_fn = lambda p: wigner_eval(sub, p)
    else:
        mean, cov = sub.mean, sub.cov
        eval_fn = lambda p: marginal_density_eval(sub, p)
    if half_range is None:
        half_range = 8.0 * math.sqrt(float(np.max(np.diag(cov))))
    ax0 = np.linspace(mean[0] - half_range, mean[0] + half_range, points)
    ax1 = np.linspace(mean[1] - half_range, mean[1] + half_range, points)
    g0, g1 = np.meshgrid(ax0, ax1, indexing="ij")
    pts = np.stack([g0.ravel(), g1.ravel()], axis=-1)
    return pts[:, 0], pts[:, 1], np.asarray(eval_fn(pts))
