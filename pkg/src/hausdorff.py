# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Probabilistic diameter, distances and Hausdorff distance on a finite
PM-space, the induced set function Lambda(E) = H(E^c, Omega) and its class
of measurable sets.

All distances of a space are step functions jumping on one global grid
(the union of their atom locations and 0), so every quantity is computed
from the tensor of right limits R[p, q, k] = dist(p, q)(grid[k]+). A finite
inf/sup of left-continuous step functions is again a left-continuous step
function, hence sup_{s<t} of it equals its value at t.

Empty-set conventions: inf over no points is 1 and sup over no points is 0.
"""

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .ddf_core import (
    DEFAULT_TOL,
    EPSILON_0,
    NORMALIZATION_TOL,
    DiscreteDDF,
    ddf_eq,
    ddf_leq,
    epsilon,
    evaluate,
    from_right_limits,
    pointwise_min,
    right_limit,
    union_locations,
)
from .delta_ops import ApplyCache, DeltaOp
from .errors import EmptySetError, NotProbBoundedError
from .logger import logger
from .measures import FiniteSetFunction, FiniteUniverse, classify
from .models import CheckReport, CheckStatus
from .oracles import DEFAULT_ORACLE_STEP, check_band_agreement, left_sup_oracle
from .ppm import FinitePpMSpace, check_ppm_axioms
from .utils import iter_subset_pairs, mask_elements


@dataclass
class HausdorffContext:
    """A finite PM-space with the power set of its points as the ring."""

    space: FinitePpMSpace
    """The underlying space"""

    enforce_pm: bool = True
    """Require dist(p, q) = eps_0 only for p = q among the preconditions"""

    universe: FiniteUniverse = field(init=False)
    """The points as a universe; subsets are bitmasks over it"""

    def __post_init__(self):
        self.universe = FiniteUniverse(self.space.points)

    @property
    def n(self) -> int:
        return self.space.size

    @property
    def omega(self) -> int:
        return self.universe.full

    @cached_property
    def grid(self) -> np.ndarray:
        ddfs = [F for row in self.space.dist for F in row]
        return union_locations(ddfs, include_zero=True)

    @cached_property
    def right_limits(self) -> np.ndarray:
        n = self.n
        R = np.empty((n, n, self.grid.size))
        for p in range(n):
            for q in range(n):
                R[p, q] = right_limit(self.space.dist[p][q], self.grid)
        return R

    @cached_property
    def lambda_table(self) -> List[DiscreteDDF]:
        return [lambda_H(self, mask) for mask in range(self.universe.size)]

    def to_dict(self) -> Dict[str, Any]:
        return self.space.to_dict()


def dirac_context(d: np.ndarray, tau: DeltaOp, labels: Optional[Sequence[str]] = None) -> HausdorffContext:
    """The PM-space with dist(p, q) = eps_{d(p, q)} for a numeric metric d."""
    n = d.shape[0]
    labels = tuple(labels) if labels is not None else tuple(f"p{i}" for i in range(n))
    dist = tuple(tuple(epsilon(float(d[i, j])) for j in range(n)) for i in range(n))
    return HausdorffContext(FinitePpMSpace(labels, dist, tau, "dirac-metric"))


def _directed_values(ctx: HausdorffContext, e: int, f: int) -> np.ndarray:
    E = mask_elements(e)
    F = mask_elements(f)
    size = ctx.grid.size
    if not E:
        return np.ones(size)
    if not F:
        return np.zeros(size)
    block = ctx.right_limits[np.ix_(E, F)]
    return block.max(axis=1).min(axis=0)


def prob_diameter(ctx: HausdorffContext, e: int) -> DiscreteDDF:
    """D_E(t) = sup_{s<t} inf_{p,q in E} dist(p,q)(s)."""
    E = mask_elements(e)
    if not E:
        raise EmptySetError("The probabilistic diameter needs a non-empty set")
    block = ctx.right_limits[np.ix_(E, E)]
    return from_right_limits(ctx.grid, block.min(axis=(0, 1)))


def is_prob_bounded(ctx: HausdorffContext, e: int) -> bool:
    """sup_t D_E(t) = 1; the empty set counts as bounded."""
    if e == 0:
        return True
    return prob_diameter(ctx, e).inf_mass <= NORMALIZATION_TOL


def prob_bounded_sets(ctx: HausdorffContext) -> List[int]:
    """Masks of all probabilistic bounded subsets."""
    return [m for m in range(ctx.universe.size) if is_prob_bounded(ctx, m)]


def prob_distance(ctx: HausdorffContext, e: int, f: int) -> DiscreteDDF:
    """
    d_{E,F}(t) = sup_{s<t} inf_{p in E} sup_{q in F} dist(p,q)(s).

    d_{empty,F} = eps_0 and d_{E,empty} has all its mass at +inf.
    """
    return from_right_limits(ctx.grid, _directed_values(ctx, e, f))


def prob_distance_point(ctx: HausdorffContext, p: int, f: int) -> DiscreteDDF:
    """d_{p,F} = d_{{p},F}."""
    return prob_distance(ctx, 1 << p, f)


def hausdorff_distance(ctx: HausdorffContext, e: int, f: int) -> DiscreteDDF:
    """
    H_{E,F}: the pointwise minimum of the two directed distances.
    """
    for mask in (e, f):
        if not is_prob_bounded(ctx, mask):
            raise NotProbBoundedError(
                f"Set {ctx.universe.format(mask)} is not probabilistic bounded",
                witness={"set": ctx.universe.format(mask), "mask": mask},
            )
    values = np.minimum(_directed_values(ctx, e, f), _directed_values(ctx, f, e))
    return from_right_limits(ctx.grid, values)


def lambda_H(ctx: HausdorffContext, e: int) -> DiscreteDDF:
    """Lambda(E) = H(E^c, Omega); Lambda(empty) = eps_0."""
    return hausdorff_distance(ctx, ctx.universe.complement(e), ctx.omega)


def _precondition_reports(ctx: HausdorffContext, tol: float) -> List[CheckReport]:
    reports = check_ppm_axioms(ctx.space, tol)
    if ctx.enforce_pm:
        n = ctx.n
        bad = next(((p, q) for p, q in itertools.combinations(range(n), 2)
                    if ctx.space.dist[p][q] == EPSILON_0), None)
        reports.append(CheckReport(
            "dist(p,q) = eps_0 only for p = q", bad is None, n * (n - 1) // 2,
            None if bad is None else {"p": ctx.space.points[bad[0]], "q": ctx.space.points[bad[1]]},
        ))
    return reports


def check_lambda_theorem(ctx: HausdorffContext, tol: float = DEFAULT_TOL) -> List[CheckReport]:
    """
    Lambda(empty) = eps_0, Lambda antimonotone, and
    Lambda(E u F) <= Pi_M(Lambda(E), Lambda(F)) for all pairs.

    A space failing the PM axioms yields a single PRECONDITION_UNMET report.
    """
    failed = [r for r in _precondition_reports(ctx, tol) if not r.passed]
    if failed:
        logger.debug(f"Lambda theorem skipped: {failed[0].name} fails")
        return [CheckReport(
            name="PM-space precondition",
            passed=False,
            checked=len(failed),
            witness={"axiom": failed[0].name, **(failed[0].witness or {})},
            status=CheckStatus.PRECONDITION_UNMET,
        )]

    lam = ctx.lambda_table
    size = ctx.universe.size
    reports = [CheckReport("Lambda(empty) = eps_0", lam[0] == EPSILON_0, 1,
                           None if lam[0] == EPSILON_0 else {"Lambda_empty": lam[0].to_dict()})]

    witness = None
    checked = 0
    for e, f in iter_subset_pairs(ctx.n):
        checked += 1
        if not ddf_leq(lam[f], lam[e], tol, tol):
            witness = {"E": ctx.universe.format(e), "F": ctx.universe.format(f)}
            break
    reports.append(CheckReport("Lambda antimonotone", witness is None, checked, witness))

    witness = None
    checked = 0
    for e in range(size):
        for f in range(e, size):
            checked += 1
            if not ddf_leq(lam[e | f], pointwise_min(lam[e], lam[f]), tol, tol):
                witness = {"E": ctx.universe.format(e), "F": ctx.universe.format(f)}
                break
        if witness is not None:
            break
    reports.append(CheckReport("Lambda(E u F) <= Pi_M(Lambda(E), Lambda(F))", witness is None, checked, witness))
    return reports


@dataclass
class MeasurableReport:
    """The class S_tau with its structure checks."""

    members: List[int]
    """Sorted masks of the measurable sets"""

    checks: List[CheckReport] = field(default_factory=list)
    """Contains empty set and Omega, complement- and union-closed"""

    notes: Dict[str, Any] = field(default_factory=dict)
    """The H(empty, Omega) value next to the eps_0 it is sometimes taken to be"""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "members": [format(m, "b") for m in self.members],
            "size": len(self.members),
            "checks": [c.to_dict() for c in self.checks],
            "notes": self.notes,
        }


def is_measurable(ctx: HausdorffContext, tau: DeltaOp, e: int, tol: float = DEFAULT_TOL,
                  cached: Optional[ApplyCache] = None) -> bool:
    """Lambda(G) = tau(Lambda(G n E), Lambda(G n E^c)) for every G."""
    lam = ctx.lambda_table
    cached = cached or ApplyCache(tau)
    comp = ctx.universe.complement(e)
    return all(ddf_eq(lam[g], cached(lam[g & e], lam[g & comp]), tol, tol)
               for g in range(ctx.universe.size))


def enumerate_measurable(ctx: HausdorffContext, tau: DeltaOp, tol: float = DEFAULT_TOL) -> MeasurableReport:
    """S_tau with exhaustive structure checks."""
    cached = ApplyCache(tau)
    members = [e for e in range(ctx.universe.size) if is_measurable(ctx, tau, e, tol, cached)]
    found = set(members)
    omega = ctx.omega

    checks = [CheckReport("empty set and Omega measurable", 0 in found and omega in found, 2,
                          None if (0 in found and omega in found) else {"members": len(members)})]

    bad = next((e for e in members if ctx.universe.complement(e) not in found), None)
    checks.append(CheckReport("closed under complement", bad is None, len(members),
                              None if bad is None else {"E": ctx.universe.format(bad)}))

    witness = None
    checked = 0
    for e, f in itertools.combinations_with_replacement(members, 2):
        checked += 1
        if e | f not in found:
            witness = {"E": ctx.universe.format(e), "F": ctx.universe.format(f)}
            break
    checks.append(CheckReport("closed under union", witness is None, checked, witness))

    h_empty_omega = hausdorff_distance(ctx, 0, omega)
    notes = {
        "H_empty_Omega": h_empty_omega.to_dict(),
        "H_empty_Omega_is_eps0": h_empty_omega == EPSILON_0,
        "Lambda_Omega": ctx.lambda_table[omega].to_dict(),
    }
    if ctx.n and h_empty_omega != EPSILON_0:
        logger.debug("H(empty, Omega) is not eps_0 under the empty-set conventions; Omega stays measurable")
    return MeasurableReport(members, checks, notes)


def check_restriction_measure(
    ctx: HausdorffContext,
    tau: DeltaOp,
    tol: float = DEFAULT_TOL,
    measurable: Optional[MeasurableReport] = None,
) -> List[CheckReport]:
    """
    Lambda restricted to S_tau is tau-decomposable: the pair scan and
    measures.classify on the sub-ring S_tau.
    """
    measurable = measurable or enumerate_measurable(ctx, tau, tol)
    lam = ctx.lambda_table
    cached = ApplyCache(tau)
    members = measurable.members

    witness = None
    checked = 0
    for e in members:
        for f in members:
            if e & f:
                continue
            checked += 1
            if not ddf_eq(lam[e | f], cached(lam[e], lam[f]), tol, tol):
                witness = {"E": ctx.universe.format(e), "F": ctx.universe.format(f)}
                break
        if witness is not None:
            break
    reports = [CheckReport(f"Lambda additive on S_tau under {tau.label}", witness is None, checked, witness)]

    gamma = FiniteSetFunction(ctx.universe, tuple(lam))
    verdict = classify(gamma, tau, tol, ring=members)
    reports.append(CheckReport(
        f"Lambda on S_tau classifies as {tau.label}-measure",
        verdict.is_measure,
        verdict.checked_pairs,
        verdict.witnesses.get("measure"),
    ))
    return reports


def check_closed_forms(
    ctx: HausdorffContext,
    e: int,
    f: int,
    step: float = DEFAULT_ORACLE_STEP,
    ts: Optional[np.ndarray] = None,
    tol: float = DEFAULT_TOL,
) -> List[CheckReport]:
    """
    Compare the closed forms of D_E, d_{E,F} and H_{E,F} with a literal
    sup_{s<t} grid oracle at the points ts (default: a grid over the support).
    """
    dist = ctx.space.dist
    E = mask_elements(e)
    F = mask_elements(f)
    if ts is None:
        top = float(ctx.grid.max()) + 1.0
        ts = np.linspace(step, top, 64)

    def values(s, rows, cols):
        return np.array([[evaluate(dist[p][q], s) for q in cols] for p in rows])

    def inf_sup(s, rows, cols):
        if not rows:
            return np.ones_like(s)
        if not cols:
            return np.zeros_like(s)
        return values(s, rows, cols).max(axis=1).min(axis=0)

    reports = []
    if E:
        oracle = left_sup_oracle(lambda s: values(s, E, E).min(axis=(0, 1)), ts, step)
        reports.append(check_band_agreement("diameter vs oracle", prob_diameter(ctx, e), ts, oracle, step, tol))
    oracle = left_sup_oracle(lambda s: inf_sup(s, E, F), ts, step)
    reports.append(check_band_agreement("distance vs oracle", prob_distance(ctx, e, f), ts, oracle, step, tol))
    if is_prob_bounded(ctx, e) and is_prob_bounded(ctx, f):
        oracle = left_sup_oracle(lambda s: np.minimum(inf_sup(s, E, F), inf_sup(s, F, E)), ts, step)
        reports.append(check_band_agreement("Hausdorff distance vs oracle", hausdorff_distance(ctx, e, f),
                                            ts, oracle, step, tol))
    return reports
