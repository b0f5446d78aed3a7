# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Suites on the probabilistic Hausdorff distance and the class S_tau."""

import itertools
from typing import List

import numpy as np

from ..config import SuiteConfig
from ..ddf_core import EPSILON_0, ddf_eq, make_ddf, scalar_multiply
from ..delta_ops import tau_T
from ..errors import NotProbBoundedError
from ..generators import random_metric, violating_metric
from ..hausdorff import (
    HausdorffContext,
    check_closed_forms,
    check_lambda_theorem,
    check_restriction_measure,
    dirac_context,
    enumerate_measurable,
    hausdorff_distance,
    is_prob_bounded,
    prob_diameter,
)
from ..logger import logger
from ..models import CheckReport, CheckStatus
from ..ppm import FinitePpMSpace
from ..scalar_ops import M
from .common import all_of, detector, expect_error, merge_by_name

MAX_HAUSDORFF_N = 6


def _sizes(config: SuiteConfig) -> List[int]:
    return sorted({min(max(n, 1), MAX_HAUSDORFF_N) for n in config.universe_sizes}) or [5]


def _profile_context(d: np.ndarray, rng: np.random.Generator) -> HausdorffContext:
    """dist(p, q) = d(p, q) (.) Phi for a two-atom Phi: a PM-space under tau_M."""
    p = float(np.round(rng.uniform(0.2, 0.8), 3))
    profile = make_ddf([(1.0, p), (2.0, 1.0 - p)])
    n = d.shape[0]
    dist = tuple(tuple(scalar_multiply(float(d[i, j]), profile) for j in range(n)) for i in range(n))
    return HausdorffContext(FinitePpMSpace(tuple(f"p{i}" for i in range(n)), dist, tau_T(M), "profile-metric"))


def _contexts(config: SuiteConfig, rng: np.random.Generator, n: int, key: str) -> List[HausdorffContext]:
    contexts = []
    for k in range(config.instance_count(key)):
        d = random_metric(rng, n)
        contexts.append(dirac_context(d, tau_T(M)) if k % 2 == 0 else _profile_context(d, rng))
    return contexts


def run_hausdorff(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    reports = []
    for n in _sizes(config):
        contexts = _contexts(config, rng, n, "hausdorff")
        reports.extend(merge_by_name((check_lambda_theorem(ctx, tol) for ctx in contexts), prefix=f"n={n}: "))

        singles = (None if prob_diameter(ctx, 1 << p) == EPSILON_0 else {"p": p}
                   for ctx in contexts for p in range(n))
        reports.append(all_of(f"n={n}: diameter of a singleton is eps_0", singles))

        def symmetric(ctx):
            size = ctx.universe.size
            for e, f in itertools.combinations(range(1, size), 2):
                if not ddf_eq(hausdorff_distance(ctx, e, f), hausdorff_distance(ctx, f, e), tol, tol):
                    return {"E": ctx.universe.format(e), "F": ctx.universe.format(f)}
            return None
        reports.append(all_of(f"n={n}: H symmetric", (symmetric(ctx) for ctx in contexts)))
        reports.append(all_of(f"n={n}: H(E, E) = eps_0", (
            next(({"E": ctx.universe.format(e)} for e in range(1, ctx.universe.size)
                  if hausdorff_distance(ctx, e, e) != EPSILON_0), None)
            for ctx in contexts
        )))
        reports.append(all_of(f"n={n}: finite sets are probabilistically bounded", (
            next(({"E": ctx.universe.format(e)} for e in range(1, ctx.universe.size)
                  if not is_prob_bounded(ctx, e)), None)
            for ctx in contexts
        )))

        if contexts:
            ctx = contexts[0]
            size = ctx.universe.size
            batches = []
            for _ in range(3):
                e, f = (int(v) for v in rng.integers(1, size, size=2))
                batches.append(check_closed_forms(ctx, e, f, config.oracle_grid_step, tol=tol))
            reports.extend(merge_by_name(batches, prefix=f"n={n}: "))

        if config.negative_tests and n >= 3:
            broken = dirac_context(violating_metric(rng, n), tau_T(M))
            outcome = check_lambda_theorem(broken, tol)[0]
            reports.append(CheckReport(
                f"n={n}: detects a space that is not a PM-space",
                outcome.status == CheckStatus.PRECONDITION_UNMET, 1, outcome.witness, expected_failure=True,
            ))

    if config.negative_tests:
        far = make_ddf([(1.0, 0.5)], 0.5)
        dist = ((EPSILON_0, far), (far, EPSILON_0))
        unbounded = HausdorffContext(FinitePpMSpace(("p0", "p1"), dist, tau_T(M), "defective"))
        reports.append(expect_error("rejects H on a set that is not probabilistically bounded",
                                    lambda: hausdorff_distance(unbounded, 0b11, 0b01), NotProbBoundedError))
    return reports


def run_measurable(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    reports = []
    for n in _sizes(config):
        contexts = _contexts(config, rng, n, "measurable")
        for tau in config.measurable_ops:
            batches = []
            sizes = []
            empty_omega_eps0 = 0
            for ctx in contexts:
                measurable = enumerate_measurable(ctx, tau, tol)
                sizes.append(len(measurable.members))
                empty_omega_eps0 += int(measurable.notes["H_empty_Omega_is_eps0"])
                batches.append(measurable.checks + check_restriction_measure(ctx, tau, tol, measurable))
            merged = merge_by_name(batches, prefix=f"n={n}, {tau.label}: ")
            if merged:
                merged[0].details = {
                    "S_tau_sizes": sizes,
                    "H_empty_Omega_is_eps0": empty_omega_eps0,
                    "spaces": len(contexts),
                }
            reports.extend(merged)
            logger.debug(f"S_tau sizes under {tau.label} at n={n}: {sizes}")

    if config.negative_tests:
        ctx = dirac_context(random_metric(rng, 3), tau_T(M))
        measurable = enumerate_measurable(ctx, tau_T(M), tol)
        shrunk = [m for m in measurable.members if m != ctx.omega]
        ring_check = CheckReport("closed under complement", all(ctx.universe.complement(m) in shrunk for m in shrunk),
                                 len(shrunk))
        reports.append(detector(ring_check, "detects a class missing Omega"))
    return reports
