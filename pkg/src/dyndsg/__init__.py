"""Dynamic approximate densest subgraph via locally optimal orientations."""

from .amortized import AmortizedMaintainer
from .config import Config, ConfigError
from .core import GraphError, InternalError, Structure, new_structure
from .fractional import DensityEstimator
from .hypergraph import HyperDensityEstimator, HyperMaintainer, hyper_violations
from .invariants import violations
from .oracle import (
    OracleResult,
    OracleSizeError,
    exact_density_bruteforce,
    exact_density_flow,
    exact_hyper_density,
    exact_minmax_orientation,
    exact_oracle,
    fractional_orientation,
)
from .stream import RunReport, StreamError, UpdateEvent, parse_stream, run
from .worstcase import ThresholdMaintainer, WorstCaseMaintainer

__all__ = [
    "AmortizedMaintainer", "Config", "ConfigError", "DensityEstimator", "GraphError",
    "HyperDensityEstimator", "HyperMaintainer", "InternalError", "OracleResult",
    "OracleSizeError", "RunReport", "Structure", "StreamError", "ThresholdMaintainer",
    "UpdateEvent", "WorstCaseMaintainer", "exact_density_bruteforce", "exact_density_flow",
    "exact_hyper_density", "exact_minmax_orientation", "exact_oracle",
    "fractional_orientation", "hyper_violations", "new_structure", "parse_stream", "run",
    "violations",
]
