from gaedit.harness.config import (
    ConcentrationError,
    ConfigError,
    ExperimentConfig,
    MalformedConfigError,
    PatternLengthError,
    UnknownPresetError,
    UnknownProblemError,
    load_config,
    parse_config,
)
from gaedit.harness.presets import CATALOG, PRESETS, list_presets
from gaedit.harness.runner import ExperimentResult, OutputError, run_experiment

__all__ = [
    "CATALOG",
    "PRESETS",
    "ConcentrationError",
    "ConfigError",
    "ExperimentConfig",
    "ExperimentResult",
    "MalformedConfigError",
    "OutputError",
    "PatternLengthError",
    "UnknownPresetError",
    "UnknownProblemError",
    "list_presets",
    "load_config",
    "parse_config",
    "run_experiment",
]
