# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Configuration management for pmmeas."""

import dataclasses
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import yaml

from .delta_ops import PI_M, TRIANGLE_FUNCTIONS, DeltaOp, tau_T
from .errors import ConfigError, PMMeasError, SuiteUnknownError
from .logger import logger
from .scalar_ops import M


ALL_SUITES = (
    "ddf",
    "scalar",
    "triangle-axioms",
    "dominance",
    "measures",
    "characterization",
    "constructions",
    "ppm",
    "semilattice",
    "product",
    "hausdorff",
    "measurable",
)

DEFAULT_SEED = 20140101

DEFAULT_INSTANCES = {
    "dirac_pairs": 100,
    "oracle_pairs": 20,
    "oracle_points": 50,
    "measures": 10,
    "characterization": 10,
    "constructions": 5,
    "ppm": 5,
    "semilattice": 3,
    "hausdorff": 10,
    "measurable": 10,
}
"""Seeded instance counts per suite family"""

DEFAULT_PATHS = (
    os.path.expanduser("~/.pmmeas/pmmeas_config.yaml"),
    "./pmmeas_config.yaml",
    "./config/pmmeas_config.yaml",
)


@dataclass
class SuiteConfig:
    """Settings of a verification run."""

    seed: int = DEFAULT_SEED
    """Fixes all randomness"""

    tolerance: float = 1e-9
    """Comparison tolerance for DDF values and atom locations"""

    universe_sizes: List[int] = field(default_factory=lambda: [5])
    """Universe sizes for the measure-family suites"""

    delta_ops: List[DeltaOp] = field(default_factory=lambda: list(TRIANGLE_FUNCTIONS))
    """Triangle functions for the axiom and dominance suites"""

    measurable_ops: List[DeltaOp] = field(default_factory=lambda: [tau_T(M), PI_M])
    """Triangle functions for the measurability suites"""

    suites: List[str] = field(default_factory=lambda: list(ALL_SUITES))
    """Suites to run, in report order"""

    oracle_grid_step: float = 1e-3
    """Grid step of the brute-force oracles"""

    negative_tests: bool = True
    """Run the planted-violation detectors"""

    dominance_samples: int = 200
    """Random quadruples per sampled dominance premise"""

    random_samples: int = 20
    """Random DDFs per axiom check"""

    instances: Dict[str, int] = field(default_factory=lambda: dict(DEFAULT_INSTANCES))
    """Seeded instance counts per suite family"""

    threads: Optional[int] = None
    """Worker threads for suites (None: one per suite)"""

    def instance_count(self, key: str) -> int:
        return int(self.instances.get(key, DEFAULT_INSTANCES.get(key, 1)))

    def validate(self) -> "SuiteConfig":
        """Raise ConfigError listing every bad field."""
        unknown = [s for s in self.suites if s not in ALL_SUITES]
        if unknown:
            raise SuiteUnknownError(
                f"Unknown suite(s): {', '.join(unknown)}. Known suites: {', '.join(ALL_SUITES)}"
            )
        problems = []
        if not self.tolerance > 0:
            problems.append(f"tolerance must be positive (got {self.tolerance!r})")
        if not 0 < self.oracle_grid_step <= 0.5:
            problems.append(f"oracle_grid_step must lie in (0, 0.5] (got {self.oracle_grid_step!r})")
        if any(not 0 <= n <= 16 for n in self.universe_sizes):
            problems.append(f"universe_sizes must lie in [0, 16] (got {self.universe_sizes!r})")
        if self.dominance_samples < 1 or self.random_samples < 3:
            problems.append("dominance_samples must be >= 1 and random_samples >= 3")
        if self.threads is not None and self.threads < 1:
            problems.append(f"threads must be >= 1 (got {self.threads!r})")
        if any(v < 0 for v in self.instances.values()):
            problems.append("instance counts must be non-negative")
        if problems:
            raise ConfigError("Invalid configuration: " + "; ".join(problems))
        return self

    def with_overrides(self, **overrides) -> "SuiteConfig":
        """Copy with the non-None overrides applied, validated."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return dataclasses.replace(self, **values).validate()

    def to_dict(self) -> Dict[str, Any]:
        """Echo for reports (threads excluded: it never changes a verdict)."""
        return {
            "seed": self.seed,
            "tolerance": self.tolerance,
            "universe_sizes": list(self.universe_sizes),
            "delta_ops": [op.to_dict() for op in self.delta_ops],
            "measurable_ops": [op.to_dict() for op in self.measurable_ops],
            "suites": list(self.suites),
            "oracle_grid_step": self.oracle_grid_step,
            "negative_tests": self.negative_tests,
            "dominance_samples": self.dominance_samples,
            "random_samples": self.random_samples,
            "instances": dict(sorted(self.instances.items())),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuiteConfig":
        if not isinstance(data, dict):
            raise ConfigError(f"'verify' section must be a mapping, got {type(data).__name__}")
        known = {f.name for f in dataclasses.fields(cls)}
        extra = sorted(set(data) - known)
        if extra:
            raise ConfigError(f"Unknown configuration key(s): {', '.join(extra)}")
        values: Dict[str, Any] = {}
        try:
            if "seed" in data:
                values["seed"] = int(data["seed"])
            if "tolerance" in data:
                values["tolerance"] = float(data["tolerance"])
            if "universe_sizes" in data:
                values["universe_sizes"] = [int(n) for n in data["universe_sizes"]]
            if "delta_ops" in data:
                values["delta_ops"] = [DeltaOp.from_dict(d) for d in data["delta_ops"]]
            if "measurable_ops" in data:
                values["measurable_ops"] = [DeltaOp.from_dict(d) for d in data["measurable_ops"]]
            if "suites" in data:
                values["suites"] = [str(s) for s in (data["suites"] or [])]
            if "oracle_grid_step" in data:
                values["oracle_grid_step"] = float(data["oracle_grid_step"])
            if "negative_tests" in data:
                values["negative_tests"] = bool(data["negative_tests"])
            if "dominance_samples" in data:
                values["dominance_samples"] = int(data["dominance_samples"])
            if "random_samples" in data:
                values["random_samples"] = int(data["random_samples"])
            if "instances" in data:
                values["instances"] = {**DEFAULT_INSTANCES, **{str(k): int(v) for k, v in data["instances"].items()}}
            if data.get("threads") is not None:
                values["threads"] = int(data["threads"])
        except PMMeasError:
            raise
        except (TypeError, ValueError, AttributeError) as e:
            raise ConfigError(f"Invalid configuration value: {e}")
        return cls(**values)


@dataclass
class ExploreConfig:
    """Settings of the randomised searches."""

    budget: int = 500
    """Maximum number of random trials"""

    oracle_grid_step: float = 0.01
    """Oracle grid step for non-left-continuous operations"""

    census_sizes: List[int] = field(default_factory=lambda: [3])
    """Space sizes tabulated by the S_tau census"""

    census_spaces: int = 10
    """Random spaces per size in the census"""


@dataclass
class ExportConfig:
    """Settings of plot-data export."""

    x_max: float = 10.0
    """Right end of the sampling grid"""

    step: float = 0.1
    """Sampling grid step"""


class Config:
    """
    Application configuration manager.

    Loads a YAML (or JSON) file, falling back to the default locations, and
    applies PMMEAS_* environment overrides.
    """

    def __init__(self, config_path: Optional[str] = None):
        self._data: Dict[str, Any] = {}
        self.source: Optional[str] = None

        if config_path:
            if not os.path.exists(config_path):
                raise ConfigError(f"Config file not found: {config_path}")
            self._load_from_file(config_path)
        else:
            self._try_default_locations()

        self._apply_env()
        # fail early on a malformed file
        self._suite = self._build_suite()

    def _load_from_file(self, config_path: str):
        """Load configuration from a YAML or JSON file."""
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                file_config = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Could not parse config file {config_path}: {e}")
        if file_config is None:
            file_config = {}
        if not isinstance(file_config, dict):
            raise ConfigError(f"Config file {config_path} must contain a mapping")
        self._data.update(file_config)
        self.source = config_path
        logger.debug(f"Loaded configuration from {config_path}")

    def _try_default_locations(self):
        for path in DEFAULT_PATHS:
            if os.path.exists(path):
                self._load_from_file(path)
                break

    def _apply_env(self):
        verify = dict(self._data.get("verify") or {})
        try:
            if os.environ.get("PMMEAS_SEED"):
                verify["seed"] = int(os.environ["PMMEAS_SEED"])
            if os.environ.get("PMMEAS_TOL"):
                verify["tolerance"] = float(os.environ["PMMEAS_TOL"])
        except ValueError as e:
            raise ConfigError(f"Invalid PMMEAS_* environment value: {e}")
        self._data["verify"] = verify

    def _build_suite(self) -> SuiteConfig:
        suite = SuiteConfig.from_dict(self._data.get("verify") or {})
        return suite.validate()

    @property
    def suite(self) -> SuiteConfig:
        """The verification settings."""
        return self._suite

    @property
    def explore(self) -> ExploreConfig:
        data = self._data.get("explore") or {}
        try:
            return ExploreConfig(
                budget=int(data.get("budget", 500)),
                oracle_grid_step=float(data.get("oracle_grid_step", 0.01)),
                census_sizes=[int(n) for n in data.get("census_sizes", [3])],
                census_spaces=int(data.get("census_spaces", 10)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid 'explore' section: {e}")

    @property
    def export(self) -> ExportConfig:
        data = self._data.get("export") or {}
        try:
            return ExportConfig(x_max=float(data.get("x_max", 10.0)), step=float(data.get("step", 0.1)))
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid 'export' section: {e}")

    def get(self, key: str, default: Any = None) -> Any:
        """Get a raw configuration section by key."""
        return self._data.get(key, default)


def thread_cap(requested: Optional[int], jobs: int) -> int:
    """
    Number of worker threads: min(jobs, requested, PMMEAS_THREADS).
    """
    cap = max(jobs, 1)
    if requested is not None:
        cap = min(cap, requested)
    env = os.environ.get("PMMEAS_THREADS")
    if env:
        try:
            cap = min(cap, max(int(env), 1))
        except ValueError:
            logger.warning(f"Ignoring invalid PMMEAS_THREADS={env!r}")
    return max(cap, 1)
