# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Suites on generated PpM spaces, their semilattice and their products."""

from typing import List

import numpy as np

from ..config import SuiteConfig
from ..ddf_core import EPSILON_0, epsilon, make_ddf
from ..delta_ops import AGG_MEAN, AGG_MIN, PI_M, tau_LA, tau_T
from ..errors import InputNotAntimonotoneSubmeasureError, PointSetMismatchError, ProductTooLargeError
from ..generators import random_weights
from ..logger import logger
from ..measures import FiniteSetFunction, NumericSetFunction, build_dirac, build_scaled_profile
from ..models import CheckReport
from ..ppm import (
    FinitePpMSpace,
    PseudoMetricFamily,
    check_members,
    check_menger_inequality,
    check_ppm_axioms,
    check_semigroup,
    check_semilattice,
    check_translation_invariance,
    from_submeasure,
    nu_like,
    oplus,
    product_space,
)
from ..scalar_ops import K_1, M, PI, W
from .common import detector, expect_error, merge_by_name

MAX_GENERATED_N = 4
"""Generated spaces have 2^n points"""

WIDE_TRIPLE_SAMPLES = 2000
"""Sampled triples for the three-factor product above the exhaustive limit"""


def _generated_sizes(config: SuiteConfig) -> List[int]:
    return sorted({min(n, MAX_GENERATED_N) for n in config.universe_sizes}) or [2]


def _dirac_gamma(rng: np.random.Generator, n: int) -> FiniteSetFunction:
    return build_dirac(NumericSetFunction.from_weights(random_weights(rng, n)))


def _break_triangle(space: FinitePpMSpace) -> FinitePpMSpace:
    """Move the distance between the first and last point far out."""
    dist = [list(row) for row in space.dist]
    far = epsilon(1000.0)
    last = space.size - 1
    dist[0][last] = dist[last][0] = far
    return space.with_dist(tuple(tuple(row) for row in dist), f"{space.tag}-broken")


def run_ppm(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    reports = []
    for n in _generated_sizes(config):
        batches = []
        for k in range(config.instance_count("ppm")):
            if k % 2 == 0:
                gamma, tau, A = _dirac_gamma(rng, n), tau_T(PI), PI
            else:
                p = float(np.round(rng.uniform(0.2, 0.8), 3))
                profile = make_ddf([(1.0, p), (2.0, 1.0 - p)])
                gamma = build_scaled_profile(NumericSetFunction.from_weights(random_weights(rng, n)), K_1, profile)
                tau, A = tau_LA(K_1, M), M
            space = from_submeasure(gamma, tau, tol, tag=f"gamma{k}")
            batch = check_ppm_axioms(space, tol, rng)
            batch.append(check_translation_invariance(space, rng))
            menger = check_menger_inequality(space, K_1, A, tol, rng)
            menger.name = "Menger inequality"
            batch.append(menger)
            batches.append(batch)
        reports.extend(merge_by_name(batches, prefix=f"n={n}: "))

        nu_gamma = FiniteSetFunction.constant_eps0(_dirac_gamma(rng, n).universe)
        nu = from_submeasure(nu_gamma, tau_T(W), tol, tag="nu")
        reports.append(CheckReport(f"n={n}: constant eps_0 generates nu",
                                   nu.dist == nu_like(nu).dist, nu.size * nu.size))

        if config.negative_tests and n >= 1:
            gamma = _dirac_gamma(rng, n)
            bad = gamma.replace(gamma.universe.full, EPSILON_0)
            reports.append(expect_error(f"n={n}: rejects a generator that is not antimonotone",
                                        lambda: from_submeasure(bad, tau_T(PI), tol), InputNotAntimonotoneSubmeasureError))
            if n >= 2:
                broken = _break_triangle(from_submeasure(gamma, tau_T(PI), tol))
                reports.append(detector(check_ppm_axioms(broken, tol)[2], f"n={n}: detects a broken triangle"))
    return reports


def run_semilattice(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    tau = tau_T(W)
    n = max(_generated_sizes(config))
    members = [from_submeasure(_dirac_gamma(rng, n), tau, tol, tag=f"rho{k}")
               for k in range(max(config.instance_count("semilattice"), 1))]
    family = PseudoMetricFamily(members, tau)
    samples = config.dominance_samples

    reports = [check_members(family, tol, rng)]
    reports.extend(check_semilattice(family, PI_M, tol, samples, config.seed))
    reports.extend(check_semigroup(family, PI_M, tol, samples, config.seed))

    if len(members) >= 2:
        joined = oplus(PI_M, members[0], members[1], tau, samples, config.seed)
        reports.extend(merge_by_name([check_ppm_axioms(joined, tol, rng)], prefix="rho0 (+) rho1: "))

    if config.negative_tests and n >= 2:
        corrupted = PseudoMetricFamily([_break_triangle(members[0])] + members[1:], tau)
        reports.append(detector(check_members(corrupted, tol, rng), "detects a corrupted family member"))
        other = from_submeasure(_dirac_gamma(rng, max(n - 1, 0)), tau, tol)
        reports.append(expect_error("rejects spaces on different point sets",
                                    lambda: oplus(PI_M, members[0], other, tau, samples, config.seed),
                                    PointSetMismatchError))
    logger.debug(f"Semilattice checked on {len(members)} generators over {2 ** n} points")
    return reports


def run_product(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    tau = tau_T(W)
    samples = config.dominance_samples
    factors = [from_submeasure(_dirac_gamma(rng, 2), tau, tol, tag=f"rho{k}") for k in range(2)]
    reports = []
    for alpha in (AGG_MIN, AGG_MEAN):
        product = product_space(factors, alpha, tau, samples, config.seed, tol)
        batch = check_ppm_axioms(product, tol, rng)
        reports.extend(merge_by_name([batch], prefix=f"{alpha.label} product of {product.size} points: "))

    wide = factors + [from_submeasure(_dirac_gamma(rng, 3), tau, tol, tag="rho2")]
    product = product_space(wide, AGG_MIN, tau, samples, config.seed, tol)
    batch = check_ppm_axioms(product, tol, rng, WIDE_TRIPLE_SAMPLES)
    reports.extend(merge_by_name([batch], prefix=f"{AGG_MIN.label} product of {product.size} points (sampled): "))

    single = product_space(factors[:1], AGG_MIN, tau, samples, config.seed, tol)
    reports.append(CheckReport("single-factor product reproduces the factor", single.dist == factors[0].dist,
                               single.size * single.size))

    if config.negative_tests:
        big = nu_like(FinitePpMSpace(tuple(f"q{i}" for i in range(65)), ((EPSILON_0,),), tau))
        reports.append(expect_error("rejects products above the point cap",
                                    lambda: product_space([big, big], AGG_MIN, tau, samples, config.seed, tol),
                                    ProductTooLargeError))
    return reports
