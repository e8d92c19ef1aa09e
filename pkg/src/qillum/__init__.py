"""Numerical toolkit for Gaussian quantum-illumination target detection."""

from .gaussian import (
    GaussianState,
    IlluminationScenario,
    MarginalDensity,
    TwoModeCovariance,
    coherent_state,
    entanglement_check,
    marginal,
    return_idler_states,
    symplectic_form,
    thermal_occupation,
    thermal_state,
    tmsv_state,
    uncertainty_check,
    wigner_eval,
)
from .bounds import (
    BoundResult,
    ScalarGaussianPair,
    bhattacharyya_exponent_gaussian,
    chernoff_exponent_gaussian,
    classical_lower_bound,
    cs_chernoff_bound,
    qi_upper_bound,
    quantum_lower_from_bhattacharyya,
)
from .receivers import (
    FfsfgModel,
    HomodyneModel,
    OpaModel,
    ffsfg_model,
    homodyne_error_probability,
    homodyne_model,
    opa_count_pmf,
    opa_error_bound,
    opa_model,
    opa_optimal_exponent,
    optimal_gain,
)
from .roc import (
    RocCurve,
    advantage_db,
    np_eigensystem,
    pd_vs_snr,
    roc_ci_homodyne,
    roc_ffsfg,
    roc_opa,
    roc_pure_state,
)
from .montecarlo import TrialBatch, empirical_roc, run_homodyne_trials, run_opa_trials
from .feasibility import FeasibilityParams, effective_exponent, pulse_power, time_bandwidth

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
