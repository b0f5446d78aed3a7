# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Enumerations and report models shared across pmmeas."""

from enum import Enum
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional


class ScalarKind(Enum):
    """Kinds of binary operations on [0,1]."""
    TNORM_M = "tnorm-M"
    TNORM_PI = "tnorm-Pi"
    TNORM_W = "tnorm-W"
    TNORM_D = "tnorm-D"
    AGG_AM = "agg-AM"
    QUASICOPULA_DUAL = "quasicopula-dual"
    CUSTOM = "custom"


class LKind(Enum):
    """Kinds of operations L on the extended non-negative reals."""
    K_ALPHA = "K_alpha"
    K_INFINITY = "K_infinity"
    ORDINAL_SUM = "ordinal-sum"
    PLUS = "plus"


class DeltaKind(Enum):
    """Kinds of binary operations on distance distribution functions."""
    TAU_T = "tau_T"
    TAU_LA = "tau_LA"
    PI_TOP = "pi_top"
    RHO_LQ = "rho_LQ"
    CONVOLUTION = "convolution"


class AggregationKind(Enum):
    """Pointwise n-ary aggregation operators on distance distribution functions."""
    MIN = "min"
    MEAN = "mean"
    PRODUCT = "product"
    IDENTITY = "identity"


class EvalMethod(Enum):
    """How a sup/inf-convolution is evaluated."""
    EXACT = "exact"
    ORACLE = "oracle"


class TransformKind(Enum):
    """Construction of new set functions from decomposable measures."""
    SCALE = "scale"
    COMBINE_TAU = "combine_tau"
    COMBINE_THETA = "combine_theta"


class ExploreMode(Enum):
    """Randomised searches offered by the explore command."""
    FIND_NONASSOC = "find-nonassoc"
    FIND_PI_TOP_VIOLATION = "find-pi-top-violation"
    S_TAU_CENSUS = "s-tau-census"


class CheckStatus(Enum):
    """Outcome of a single check."""
    PASS = "pass"
    FAIL = "fail"
    PRECONDITION_UNMET = "precondition_unmet"


@dataclass
class CheckReport:
    """Result of verifying one law on a finite instance."""

    name: str
    """Short identifier of the verified law"""

    passed: bool
    """True when no violation was found (for detectors: when the planted violation was found)"""

    checked: int = 0
    """Number of cases examined"""

    witness: Optional[Dict[str, Any]] = None
    """First failing case, JSON-able"""

    details: Dict[str, Any] = field(default_factory=dict)
    """Extra numbers (margins, counts, notes)"""

    sampled: bool = False
    """True when a universally quantified premise was checked on samples only"""

    expected_failure: bool = False
    """True for planted-violation detectors"""

    status: Optional[CheckStatus] = None
    """Explicit status; derived from passed when not set"""

    def __post_init__(self):
        self.passed = bool(self.passed)
        self.checked = int(self.checked)
        if self.status is None:
            self.status = CheckStatus.PASS if self.passed else CheckStatus.FAIL

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "passed": self.passed,
            "status": self.status.value,
            "checked": self.checked,
            "sampled": self.sampled,
            "expected_failure": self.expected_failure,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        if self.details:
            data["details"] = self.details
        return data

    @classmethod
    def combine(cls, name: str, reports: Iterable["CheckReport"]) -> "CheckReport":
        """
        Merge partial reports of the same law (e.g. from partitioned scans).

        The merged witness is the first witness in iteration order.
        """
        reports = list(reports)
        passed = all(r.passed for r in reports)
        witness = next((r.witness for r in reports if r.witness is not None), None)
        return cls(
            name=name,
            passed=passed,
            checked=sum(r.checked for r in reports),
            witness=witness,
            sampled=any(r.sampled for r in reports),
        )


@dataclass
class ClassificationReport:
    """Classification of a probabilistic-valued set function."""

    is_measure: bool
    """Equality on all disjoint pairs"""

    is_submeasure: bool
    """Inequality on all disjoint pairs"""

    is_antimonotone: bool
    """Values decrease pointwise as sets grow"""

    witnesses: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    """One witness per failed property"""

    checked_pairs: int = 0
    """Number of disjoint pairs scanned"""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_measure": self.is_measure,
            "is_submeasure": self.is_submeasure,
            "is_antimonotone": self.is_antimonotone,
            "witnesses": self.witnesses,
            "checked_pairs": self.checked_pairs,
        }


@dataclass
class SuiteResult:
    """All checks of one theorem suite."""

    name: str
    """Suite name (as used on the command line)"""

    claim: str
    """The statement the suite verifies"""

    checks: List[CheckReport] = field(default_factory=list)
    """Individual check reports"""

    error: Optional[Dict[str, Any]] = None
    """Error payload when the suite crashed"""

    elapsed: float = 0.0
    """Wall-clock seconds (timing field, excluded from determinism)"""

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "claim": self.claim,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.error is not None:
            data["error"] = self.error
        return data
