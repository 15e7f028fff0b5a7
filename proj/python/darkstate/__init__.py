"""Dark-state survival simulator: Python face of the C++ core."""
from ._core import (
    AmplitudeState,
    CrossingEvent,
    DressedSpectrum,
    IntegrationReport,
    Kind,
    LzPrediction,
    PhysicalParams,
    PulseShape,
    RunResult,
    SurvivalMode,
    ThresholdReport,
    Trajectory,
    TrapFrequencies,
    VelocityDistribution,
    adiabatic_threshold_check,
    adiabaticity_f,
    alpha,
    alpha_dot,
    bright_state,
    chi,
    chi_1d,
    coupling_K,
    dark_state,
    default_params,
    dressed_energies,
    emit_config,
    ensemble_survival,
    find_node_crossings,
    integrate,
    linearization_error,
    lz_h,
    normalization_A,
    parse_params,
    predict,
    run_scenario,
    scenario_names,
    small_term_S,
    small_term_peak_x,
    speed_threshold,
    survival_single,
    to_natural,
    to_si,
    trap_frequencies,
    validate_params,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
