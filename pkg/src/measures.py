# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Probabilistic-valued set functions on the power set of a finite universe.

Subsets are bitmasks in [0, 2^n); a set function is the tuple of its
values indexed by mask. Every check is an exhaustive scan.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .ddf_core import DEFAULT_TOL, EPSILON_0, DiscreteDDF, ddf_eq, ddf_leq, epsilon, scalar_multiply
from .delta_ops import (
    ApplyCache,
    Aggregator,
    DeltaOp,
    check_delta_order,
    check_distributive,
    check_dominance_delta,
    check_dominance_nary,
)
from .errors import (
    DOMINANCE_UNVERIFIED,
    ConfigError,
    InputNotMeasureError,
    NotDistributiveError,
    NotLDecomposableError,
    UniverseTooLargeError,
)
from .generators import additive_values, l_fold_values, max_values
from .logger import logger
from .models import CheckReport, ClassificationReport, TransformKind
from .scalar_ops import LOp
from .utils import format_mask, iter_disjoint_pairs, iter_subset_pairs

MAX_UNIVERSE = 16


@dataclass(frozen=True)
class FiniteUniverse:
    """A finite set Omega; its power set is the ring of the set functions."""

    labels: Tuple[str, ...]
    """Element labels, in bit order"""

    def __post_init__(self):
        if len(self.labels) > MAX_UNIVERSE:
            raise UniverseTooLargeError(f"Universe of size {len(self.labels)} exceeds the cap of {MAX_UNIVERSE}")

    @classmethod
    def of_size(cls, n: int) -> "FiniteUniverse":
        if n > MAX_UNIVERSE:
            raise UniverseTooLargeError(f"Universe of size {n} exceeds the cap of {MAX_UNIVERSE}")
        return cls(tuple(chr(ord("a") + i) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def size(self) -> int:
        """Number of subsets."""
        return 1 << self.n

    def complement(self, mask: int) -> int:
        return self.full & ~mask

    def format(self, mask: int) -> str:
        return format_mask(mask, self.labels)


@dataclass(frozen=True)
class NumericSetFunction:
    """A set function mu: subsets -> [0, +inf] with mu(empty) = 0."""

    universe: FiniteUniverse
    values: Tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != self.universe.size:
            raise ConfigError(f"Expected {self.universe.size} values, got {len(self.values)}")
        if self.values and self.values[0] != 0.0:
            raise ConfigError(f"mu(empty) must be 0, got {self.values[0]!r}")

    def __getitem__(self, mask: int) -> float:
        return self.values[mask]

    @classmethod
    def from_weights(cls, weights: Sequence[float], L: Optional[LOp] = None,
                     universe: Optional[FiniteUniverse] = None) -> "NumericSetFunction":
        """L-fold of per-element weights (additive when L is None)."""
        universe = universe or FiniteUniverse.of_size(len(weights))
        values = additive_values(weights) if L is None else l_fold_values(weights, L)
        return cls(universe, tuple(values))

    @classmethod
    def max_of_weights(cls, weights: Sequence[float]) -> "NumericSetFunction":
        return cls(FiniteUniverse.of_size(len(weights)), tuple(max_values(weights)))


@dataclass(frozen=True)
class FiniteSetFunction:
    """A set function gamma: subsets -> DDFs with gamma(empty) = eps_0."""

    universe: FiniteUniverse
    values: Tuple[DiscreteDDF, ...]

    def __post_init__(self):
        if len(self.values) != self.universe.size:
            raise ConfigError(f"Expected {self.universe.size} values, got {len(self.values)}")
        if self.values[0] != EPSILON_0:
            raise ConfigError(f"gamma(empty) must be eps_0, got {self.values[0]!r}")

    def __getitem__(self, mask: int) -> DiscreteDDF:
        return self.values[mask]

    @classmethod
    def constant_eps0(cls, universe: FiniteUniverse) -> "FiniteSetFunction":
        return cls(universe, (EPSILON_0,) * universe.size)

    def replace(self, mask: int, value: DiscreteDDF) -> "FiniteSetFunction":
        values = list(self.values)
        values[mask] = value
        return FiniteSetFunction(self.universe, tuple(values))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "universe": list(self.universe.labels),
            "values": {str(mask): F.to_dict() for mask, F in enumerate(self.values)},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FiniteSetFunction":
        """
        Explicit table keyed by bitmask string, or a generator form
        {"type": "dirac-additive" | "dirac-max", "weights": [...]}.
        """
        try:
            universe = FiniteUniverse(tuple(data["universe"]))
            generator = data.get("generator")
            if generator is not None:
                weights = [float(w) for w in generator["weights"]]
                if len(weights) != universe.n:
                    raise ConfigError("Generator weights must match the universe size")
                kind = generator.get("type", "dirac-additive")
                if kind == "dirac-additive":
                    mu = NumericSetFunction(universe, tuple(additive_values(weights)))
                elif kind == "dirac-max":
                    mu = NumericSetFunction(universe, tuple(max_values(weights)))
                else:
                    raise ConfigError(f"Unknown set-function generator '{kind}'")
                return build_dirac(mu)
            table = data["values"]
            values = tuple(DiscreteDDF.from_dict(table[str(mask)]) for mask in range(universe.size))
            return cls(universe, values)
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"Invalid set-function description: {e}")


def _pair_witness(universe: FiniteUniverse, e: int, f: int, **extra) -> Dict[str, Any]:
    return {"E": universe.format(e), "F": universe.format(f), "E_mask": e, "F_mask": f, **extra}


def classify(
    gamma: FiniteSetFunction,
    tau: DeltaOp,
    tol: float = DEFAULT_TOL,
    ring: Optional[Iterable[int]] = None,
) -> ClassificationReport:
    """
    Classify gamma as tau-decomposable measure / submeasure and as
    antimonotone.

    With `ring`, only sets of that sub-ring (closed under union and
    difference) are scanned.
    """
    universe = gamma.universe
    cached = ApplyCache(tau)
    members = None if ring is None else set(ring)

    if members is None:
        disjoint = iter_disjoint_pairs(universe.n)
        nested = iter_subset_pairs(universe.n)
    else:
        ordered = sorted(members)
        disjoint = [(e, f) for e in ordered for f in ordered if e & f == 0]
        nested = [(e, f) for e in ordered for f in ordered if e & ~f == 0]

    witnesses: Dict[str, Dict[str, Any]] = {}
    is_measure = True
    is_submeasure = True
    checked = 0
    for e, f in disjoint:
        checked += 1
        composed = cached(gamma[e], gamma[f])
        union = gamma[e | f]
        if is_measure and not ddf_eq(union, composed, tol, tol):
            is_measure = False
            witnesses["measure"] = _pair_witness(universe, e, f, union=union.to_dict(), composed=composed.to_dict())
        if is_submeasure and not ddf_leq(composed, union, tol, tol):
            is_submeasure = False
            witnesses["submeasure"] = _pair_witness(universe, e, f, union=union.to_dict(), composed=composed.to_dict())

    is_antimonotone = True
    for e, f in nested:
        if not ddf_leq(gamma[f], gamma[e], tol, tol):
            is_antimonotone = False
            witnesses["antimonotone"] = _pair_witness(universe, e, f)
            break

    logger.debug(
        f"classify under {tau.label}: measure={is_measure} submeasure={is_submeasure} "
        f"antimonotone={is_antimonotone} ({checked} disjoint pairs)"
    )
    return ClassificationReport(
        is_measure=is_measure,
        is_submeasure=is_submeasure,
        is_antimonotone=is_antimonotone,
        witnesses=witnesses,
        checked_pairs=checked,
    )


def check_characterization(gamma: FiniteSetFunction, tau: DeltaOp, tol: float = DEFAULT_TOL) -> CheckReport:
    """
    The valuation identity tau(gamma(E u F), gamma(E n F)) = tau(gamma(E), gamma(F))
    on all pairs, cross-checked against classify().

    `passed` is the verdict of the identity; details record whether it
    agrees with the measure verdict of classify().
    """
    universe = gamma.universe
    cached = ApplyCache(tau)
    witness = None
    checked = 0
    for e in range(universe.size):
        for f in range(e, universe.size):
            checked += 1
            lhs = cached(gamma[e | f], gamma[e & f])
            rhs = cached(gamma[e], gamma[f])
            if not ddf_eq(lhs, rhs, tol, tol):
                witness = _pair_witness(universe, e, f)
                break
        if witness is not None:
            break

    holds = witness is None
    is_measure = classify(gamma, tau, tol).is_measure
    return CheckReport(
        name=f"valuation identity under {tau.label}",
        passed=holds,
        checked=checked,
        witness=witness,
        details={"classify_is_measure": is_measure, "agrees_with_classify": holds == is_measure},
    )


def check_arbitrary_unions(gamma: FiniteSetFunction, tau: DeltaOp, tol: float = DEFAULT_TOL) -> CheckReport:
    """gamma(E u F) >= tau(gamma(E), gamma(F)) for all pairs, disjoint or not."""
    universe = gamma.universe
    cached = ApplyCache(tau)
    witness = None
    checked = 0
    for e in range(universe.size):
        for f in range(e, universe.size):
            checked += 1
            if not ddf_leq(cached(gamma[e], gamma[f]), gamma[e | f], tol, tol):
                witness = _pair_witness(universe, e, f)
                break
        if witness is not None:
            break
    return CheckReport(f"arbitrary-union inequality under {tau.label}", witness is None, checked, witness)


def build_dirac(mu: NumericSetFunction) -> FiniteSetFunction:
    """gamma(E) = eps_{mu(E)}."""
    return FiniteSetFunction(mu.universe, tuple(epsilon(v) for v in mu.values))


def check_l_decomposable(m: NumericSetFunction, L: LOp, tol: float = DEFAULT_TOL) -> Optional[Dict[str, Any]]:
    """First disjoint pair with m(E u F) != L(m(E), m(F)) (relative tol), or None."""
    universe = m.universe
    for e, f in iter_disjoint_pairs(universe.n):
        expected = float(L(m[e], m[f]))
        actual = m[e | f]
        if math.isinf(expected) and math.isinf(actual):
            continue
        if abs(actual - expected) > tol * max(1.0, abs(expected)):
            return _pair_witness(universe, e, f, expected=expected, actual=actual)
    return None


def build_scaled_profile(m: NumericSetFunction, L: LOp, Phi: DiscreteDDF, tol: float = DEFAULT_TOL) -> FiniteSetFunction:
    """gamma(E) = m(E) (.) Phi, for an L-decomposable m."""
    witness = check_l_decomposable(m, L, tol)
    if witness is not None:
        raise NotLDecomposableError(f"Set function is not {L.label}-decomposable", witness=witness)
    return FiniteSetFunction(m.universe, tuple(scalar_multiply(v, Phi) for v in m.values))


@dataclass
class TransformResult:
    """A constructed set function with its classification."""

    gamma: FiniteSetFunction
    classification: ClassificationReport
    verdict: bool
    """The claim of the construction (measure, or submeasure for combine_theta)"""

    premises: List[CheckReport] = field(default_factory=list)
    """Premise checks run before the construction"""

    error_code: Optional[str] = None
    """Set when a sampled premise failed; the result is still returned"""


def _distinct_values(gammas: Iterable[FiniteSetFunction]) -> List[DiscreteDDF]:
    seen = {}
    for gamma in gammas:
        for F in gamma.values:
            seen.setdefault(F, None)
    return list(seen)


def transform(
    mode: TransformKind,
    inputs: Sequence[FiniteSetFunction],
    tau: DeltaOp,
    c: Optional[float] = None,
    theta: Optional[DeltaOp] = None,
    tol: float = DEFAULT_TOL,
) -> TransformResult:
    """
    Construct a new set function from tau-decomposable measures.

    - SCALE: c (.) gamma; tau must be distributive.
    - COMBINE_TAU: tau(gamma1, gamma2); a measure again.
    - COMBINE_THETA: theta(gamma1, gamma2); a tau-submeasure iff theta >> tau.
    """
    universe = inputs[0].universe
    needs_measure = mode != TransformKind.COMBINE_THETA
    for k, gamma in enumerate(inputs):
        report = classify(gamma, tau, tol)
        ok = report.is_measure if needs_measure else report.is_submeasure
        if not ok:
            kind = "measure" if needs_measure else "submeasure"
            raise InputNotMeasureError(
                f"Input {k} is not a {tau.label}-decomposable {kind}",
                witness=report.witnesses.get(kind),
            )

    premises: List[CheckReport] = []
    if mode == TransformKind.SCALE:
        if c is None:
            raise ConfigError("scale needs a constant c")
        gamma = inputs[0]
        if 0 < c < math.inf:
            distributive = check_distributive(tau, _distinct_values([gamma]), [c], tol)
            premises.append(distributive)
            if not distributive.passed:
                raise NotDistributiveError(f"{tau.label} is not distributive at c={c}", witness=distributive.witness)
        result = FiniteSetFunction(universe, tuple(scalar_multiply(c, F) for F in gamma.values))
    elif mode == TransformKind.COMBINE_TAU:
        g1, g2 = inputs
        result = FiniteSetFunction(universe, tuple(tau(F, G) for F, G in zip(g1.values, g2.values)))
    else:
        if theta is None:
            raise ConfigError("combine_theta needs theta")
        g1, g2 = inputs
        quads = [(g1[e], g1[f], g2[e], g2[f]) for e, f in iter_disjoint_pairs(universe.n)]
        premises.append(check_dominance_delta(theta, tau, quads, tol))
        result = FiniteSetFunction(universe, tuple(theta(F, G) for F, G in zip(g1.values, g2.values)))

    classification = classify(result, tau, tol)
    verdict = classification.is_measure if needs_measure else classification.is_submeasure
    return TransformResult(result, classification, verdict, premises)


def aggregate(
    alpha: Aggregator,
    gammas: Sequence[FiniteSetFunction],
    tau: DeltaOp,
    taus_i: Sequence[DeltaOp],
    tol: float = DEFAULT_TOL,
) -> TransformResult:
    """
    gamma(E) = alpha(gamma1(E), ..., gamman(E)), a tau-submeasure when every
    gammai is a taui-submeasure, tau <= taui and alpha >> tau.

    The premises quantify over all DDFs; they are checked on the values the
    inputs induce, and a failure yields DOMINANCE_UNVERIFIED with a false
    verdict instead of an exception.
    """
    universe = gammas[0].universe
    for k, (gamma, tau_k) in enumerate(zip(gammas, taus_i)):
        report = classify(gamma, tau_k, tol)
        if not report.is_submeasure:
            raise InputNotMeasureError(
                f"Input {k} is not a {tau_k.label}-decomposable submeasure",
                witness=report.witnesses.get("submeasure"),
            )

    premises: List[CheckReport] = []
    pairs = list(iter_disjoint_pairs(universe.n))
    for gamma, tau_k in zip(gammas, taus_i):
        if tau_k != tau:
            premises.append(check_delta_order(tau, tau_k, [(gamma[e], gamma[f]) for e, f in pairs], tol))
    tuples = [([g[e] for g in gammas], [g[f] for g in gammas]) for e, f in pairs]
    premises.append(check_dominance_nary(alpha, tau, tuples, tol))

    boundary = alpha([EPSILON_0] * len(gammas))
    premises.append(CheckReport(f"{alpha.label}(eps_0, ..., eps_0) = eps_0", boundary == EPSILON_0, 1))

    result = FiniteSetFunction(universe, tuple(alpha([g[m] for g in gammas]) for m in range(universe.size)))
    classification = classify(result, tau, tol)
    error_code = None
    verdict = classification.is_submeasure
    if not all(p.passed for p in premises):
        error_code = DOMINANCE_UNVERIFIED
        verdict = False
        logger.warning(f"aggregate with {alpha.label}: premise not verified on the sampled values")
    return TransformResult(result, classification, verdict, premises, error_code)
