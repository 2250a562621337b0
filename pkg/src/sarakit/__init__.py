"""Compressive imaging reconstruction with sparsity averaging over
concatenated wavelet frames and reweighted-l1 analysis solves."""

from .dictionary import FrameId, SaraDictionary, make_dictionary
from .errors import (ConfigError, ConvergenceError, DimensionError, KindError,
                     NonPositiveGamma, SarakitError, ZeroSignalError)
from .harness import ExperimentSpec, run_experiment, run_radio_demo, snr_db
from .measurement import (FourierMaskConfig, MeasurementOperator, NoiseModel,
                          SpreadSpectrumConfig, apply_noise, dirty_image,
                          make_fourier_mask, make_spread_spectrum)
from .reweighting import (SaraConfig, SaraTrace, sara_reconstruct, sigma_alpha,
                          update_weights)
from .solver import (SolverConfig, SolverResult, epsilon_for_noise,
                     operator_norm, project_l2_ball, project_positive,
                     prox_weighted_l1, solve_weighted_l1)
from .wavelets import WaveletFilter, dwt2_forward, dwt2_inverse, filter_taps

__version__ = "0.1.0"

__all__ = [
    "FrameId", "SaraDictionary", "make_dictionary",
    "ConfigError", "ConvergenceError", "DimensionError", "KindError",
    "NonPositiveGamma", "SarakitError", "ZeroSignalError",
    "ExperimentSpec", "run_experiment", "run_radio_demo", "snr_db",
    "FourierMaskConfig", "MeasurementOperator", "NoiseModel",
    "SpreadSpectrumConfig", "apply_noise", "dirty_image",
    "make_fourier_mask", "make_spread_spectrum",
    "SaraConfig", "SaraTrace", "sara_reconstruct", "sigma_alpha",
    "update_weights",
    "SolverConfig", "SolverResult", "epsilon_for_noise", "operator_norm",
    "project_l2_ball", "project_positive", "prox_weighted_l1",
    "solve_weighted_l1",
    "WaveletFilter", "dwt2_forward", "dwt2_inverse", "filter_taps",
]
