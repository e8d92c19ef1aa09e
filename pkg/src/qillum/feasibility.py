"""Practicality arithmetic: time-bandwidth products, pulse power, idler penalties."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import HBAR


@dataclass(frozen=True)
class FeasibilityParams:
    """Source and storage parameters of one illumination pulse.

    signal_frequency is an ordinary frequency in Hz; the angular frequency
    2*pi*f is used internally wherever an energy per photon is needed.
    """

    signal_frequency: float
    bandwidth: float
    pulse_duration: float
    n_s: float
    kappa_i: float = 1.0  # idler storage transmissivity
    kappa_m: float = 1.0  # range/Doppler mismatch overlap

    def __post_init__(self):
        if self.signal_frequency <= 0:
            raise ValueError("signal_frequency must be > 0")
        if self.bandwidth <= 0:
            raise ValueError("bandwidth must be > 0")
        if self.pulse_duration <= 0:
            raise ValueError("pulse_duration must be > 0")
        if self.n_s <= 0:
            raise ValueError("n_s must be > 0")
        if not (0.0 < self.kappa_i <= 1.0):
            raise ValueError("kappa_i must be in (0, 1]")
        if not (0.0 < self.kappa_m <= 1.0):
            raise ValueError("kappa_m must be in (0, 1]")


def time_bandwidth(params: FeasibilityParams) -> float:
    """Number of independent signal-idler mode pairs M = T * W."""
    return params.pulse_duration * params.bandwidth


def pulse_power(params: FeasibilityParams, angular: bool = True) -> float:
    """Pulse power hbar * omega_s * n_s * W.

    With angular=True (default) omega_s = 2*pi*f; angular=False uses the
    plain-frequency reading hbar * f * n_s * W, reported for comparison since
    the two conventions differ by 2*pi.
    """
    omega = 2.0 * math.pi * params.signal_frequency if angular else params.signal_frequency
    return HBAR * omega * params.n_s * params.bandwidth


def effective_exponent(base: float, params: FeasibilityParams) -> float:
    """Error exponent after idler-storage loss and mode-mismatch penalties."""
    if base < 0:
        raise ValueError("base exponent must be >= 0")
    return base * params.kappa_i * params.kappa_m
