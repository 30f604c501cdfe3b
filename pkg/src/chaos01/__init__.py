"""Chaos detection for scalar time series via diffusion of translation
variables, with reference signal generators, spectral helpers, file
ingestion, and batch tooling."""

__version__ = "0.1.0"

from .errors import (
    AliasingError,
    AllDegenerateError,
    Chaos01Error,
    DivergenceError,
    InvalidParameterError,
    MissingSampleRateError,
    NonUniformSamplingError,
    SeriesFormatError,
    SeriesTooShortError,
)
from .core import (
    DEFAULT_N0_FRACTION,
    SHORT_SERIES_LIMIT,
    TWO_PI,
    Aggregator,
    ClassificationBands,
    GrowthRate,
    Method,
    MsdCurve,
    MsdVariant,
    Regime,
    TestConfig,
    TestResult,
    TimeSeries,
    TranslationTrajectory,
    aggregate_k,
    classify,
    growth_rate_correlation,
    growth_rate_regression,
    lag_window,
    msd,
    oscillation_correction,
    run_test,
    translation_variables,
)
from .signals import (
    GeneratorKind,
    GeneratorSpec,
    HenonState,
    gen_chirp,
    gen_henon,
    gen_quasiperiodic,
    gen_sawtooth,
    gen_sine,
    gen_uniform_random,
    henon_step,
    make_series,
)
from .spectral import PsdEstimate, normalize_amplitude, psd
from .seriesio import (
    SeriesFile,
    SeriesFormat,
    WindowPlan,
    export_psd,
    export_result,
    export_scatter,
    export_trajectory,
    load_series,
    recompute_k_m,
    segment,
    write_series,
)

__all__ = [
    "__version__",
    "AliasingError",
    "AllDegenerateError",
    "Chaos01Error",
    "DivergenceError",
    "InvalidParameterError",
    "MissingSampleRateError",
    "NonUniformSamplingError",
    "SeriesFormatError",
    "SeriesTooShortError",
    "DEFAULT_N0_FRACTION",
    "SHORT_SERIES_LIMIT",
    "TWO_PI",
    "Aggregator",
    "ClassificationBands",
    "GrowthRate",
    "Method",
    "MsdCurve",
    "MsdVariant",
    "Regime",
    "TestConfig",
    "TestResult",
    "TimeSeries",
    "TranslationTrajectory",
    "aggregate_k",
    "classify",
    "growth_rate_correlation",
    "growth_rate_regression",
    "lag_window",
    "msd",
    "oscillation_correction",
    "run_test",
    "translation_variables",
    "GeneratorKind",
    "GeneratorSpec",
    "HenonState",
    "gen_chirp",
    "gen_henon",
    "gen_quasiperiodic",
    "gen_sawtooth",
    "gen_sine",
    "gen_uniform_random",
    "henon_step",
    "make_series",
    "PsdEstimate",
    "normalize_amplitude",
    "psd",
    "SeriesFile",
    "SeriesFormat",
    "WindowPlan",
    "export_psd",
    "export_result",
    "export_scatter",
    "export_trajectory",
    "load_series",
    "recompute_k_m",
    "segment",
    "write_series",
]
