# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Suites on tau-decomposable set functions and their constructions."""

from typing import List

import numpy as np

from ..config import SuiteConfig
from ..ddf_core import make_ddf
from ..delta_ops import AGG_IDENTITY, AGG_MEAN, PI_M, pi_top, tau_LA, tau_T
from ..errors import InputNotMeasureError, NotLDecomposableError
from ..generators import corrupt_values, distinct_weights, random_weights
from ..logger import logger
from ..measures import (
    FiniteSetFunction,
    FiniteUniverse,
    NumericSetFunction,
    aggregate,
    build_dirac,
    build_scaled_profile,
    check_arbitrary_unions,
    check_characterization,
    classify,
    transform,
)
from ..models import CheckReport, TransformKind
from ..scalar_ops import D, K_1, K_INF, M, PI, W
from .common import all_of, expect_error


def _random_profile(rng: np.random.Generator):
    """A two-atom DDF {(1, p), (2, 1 - p)}."""
    p = float(np.round(rng.uniform(0.2, 0.8), 3))
    return make_ddf([(1.0, p), (2.0, 1.0 - p)])


def _dirac_additive(rng: np.random.Generator, n: int) -> FiniteSetFunction:
    return build_dirac(NumericSetFunction.from_weights(random_weights(rng, n)))


def run_measures(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    count = config.instance_count("measures")
    reports = []
    for n in config.universe_sizes:
        dirac = [_dirac_additive(rng, n) for _ in range(count)]
        maxed = [build_dirac(NumericSetFunction.max_of_weights(random_weights(rng, n))) for _ in range(count)]
        profiles = [build_scaled_profile(NumericSetFunction.from_weights(random_weights(rng, n)), K_1,
                                         _random_profile(rng)) for _ in range(count)]

        for T in (M, PI, W):
            verdicts = [classify(g, tau_T(T), tol) for g in dirac]
            reports.append(all_of(f"n={n}: eps_mu of additive mu is a {tau_T(T).label}-measure",
                                  (None if v.is_measure else v.witnesses.get("measure") for v in verdicts)))
            verdicts = [classify(g, pi_top(T), tol) for g in maxed]
            reports.append(all_of(f"n={n}: eps_mu of maxitive mu is a {pi_top(T).label}-measure",
                                  (None if v.is_measure else v.witnesses.get("measure") for v in verdicts)))

        verdicts = [classify(g, tau_T(PI), tol) for g in dirac]
        reports.append(all_of(f"n={n}: measures are antimonotone submeasures", (
            None if v.is_submeasure and v.is_antimonotone else v.witnesses for v in verdicts
        )))
        reports.append(CheckReport.combine(f"n={n}: measures satisfy the arbitrary-union inequality",
                                           [check_arbitrary_unions(g, tau_T(PI), tol) for g in dirac]))

        # the D exact path is admissible for {0,1}-valued arguments
        verdicts = [classify(g, tau_T(D), tol) for g in dirac]
        reports.append(all_of(f"n={n}: eps_mu of additive mu is a {tau_T(D).label}-measure",
                              (None if v.is_measure else v.witnesses.get("measure") for v in verdicts)))

        tau_plus_m = tau_LA(K_1, M)
        verdicts = [classify(g, tau_plus_m, tol) for g in profiles]
        reports.append(all_of(f"n={n}: m (.) Phi is a {tau_plus_m.label}-measure",
                              (None if v.is_measure else v.witnesses.get("measure") for v in verdicts)))

        if config.negative_tests and n >= 2:
            distinct = build_dirac(NumericSetFunction.from_weights(distinct_weights(n)))
            v = classify(distinct, PI_M, tol)
            reports.append(CheckReport(f"n={n}: detects distinct values failing {PI_M.label}", not v.is_measure, 1,
                                       v.witnesses.get("measure"), expected_failure=True))
            failing = [classify(g, tau_LA(K_1, PI), tol) for g in profiles]
            reports.append(CheckReport(
                f"n={n}: detects m (.) Phi failing {tau_LA(K_1, PI).label}",
                any(not v.is_measure for v in failing), len(failing),
                next((v.witnesses.get("measure") for v in failing if not v.is_measure), None),
                expected_failure=True,
            ))
            reports.append(expect_error(
                f"n={n}: rejects a maxitive m for the K_1 profile",
                lambda: build_scaled_profile(NumericSetFunction.from_weights(distinct_weights(n), K_INF), K_1,
                                             _random_profile(rng)),
                NotLDecomposableError,
            ))
    return reports


def run_characterization(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    tau = tau_T(PI)
    reports = []
    for n in config.universe_sizes:
        parts = []
        agreements = []
        for _ in range(config.instance_count("characterization")):
            gamma = _dirac_additive(rng, n)
            report = check_characterization(gamma, tau, tol)
            parts.append(report)
            agreements.append(report.details["agrees_with_classify"])
            if config.negative_tests and n >= 2:
                values, mask = corrupt_values(rng, gamma.values)
                corrupted = FiniteSetFunction(gamma.universe, tuple(values))
                bad = check_characterization(corrupted, tau, tol)
                parts.append(CheckReport(f"detects corrupted value at {gamma.universe.format(mask)}",
                                         not bad.passed, bad.checked, bad.witness, expected_failure=True))
                agreements.append(bad.details["agrees_with_classify"])
        if parts:
            reports.append(CheckReport.combine(f"n={n}: valuation identity iff measure", parts))
        reports.append(CheckReport(f"n={n}: identity verdict agrees with classify", all(agreements),
                                   len(agreements)))
    vacuous = FiniteSetFunction.constant_eps0(FiniteUniverse.of_size(0))
    reports.append(CheckReport("empty universe: identity holds vacuously",
                               check_characterization(vacuous, tau, tol).passed, 1))
    return reports


def run_constructions(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    n = min(config.universe_sizes) if config.universe_sizes else 3
    reports = []
    scale, combine, theta, agg = [], [], [], []
    for _ in range(config.instance_count("constructions")):
        g1 = _dirac_additive(rng, n)
        g2 = _dirac_additive(rng, n)
        for c in (0.5, 2.0, 7.0):
            result = transform(TransformKind.SCALE, [g1], tau_T(M), c=c, tol=tol)
            scale.append(None if result.verdict else {"c": c, **result.classification.witnesses})
        result = transform(TransformKind.COMBINE_TAU, [g1, g2], tau_T(PI), tol=tol)
        combine.append(None if result.verdict else result.classification.witnesses)
        result = transform(TransformKind.COMBINE_THETA, [g1, g2], tau_T(W), theta=PI_M, tol=tol)
        theta.append(None if result.verdict and all(p.passed for p in result.premises)
                     else result.classification.witnesses or {"premise": "failed"})
        profile = build_scaled_profile(NumericSetFunction.from_weights(random_weights(rng, n)), K_1,
                                       _random_profile(rng))
        result = aggregate(AGG_MEAN, [g1, profile], tau_T(W), [tau_T(W), tau_T(W)], tol)
        agg.append(None if result.verdict else {"error_code": result.error_code, **result.classification.witnesses})

    reports.append(all_of(f"n={n}: c (.) gamma is a {tau_T(M).label}-measure", scale))
    reports.append(all_of(f"n={n}: {tau_T(PI).label}(gamma1, gamma2) is a measure", combine))
    reports.append(all_of(f"n={n}: {PI_M.label}(gamma1, gamma2) is a {tau_T(W).label}-submeasure", theta,
                          sampled=True))
    reports.append(all_of(f"n={n}: {AGG_MEAN.label} aggregate is a {tau_T(W).label}-submeasure", agg, sampled=True))

    g = _dirac_additive(rng, n)
    same = aggregate(AGG_IDENTITY, [g], tau_T(PI), [tau_T(PI)], tol)
    reports.append(CheckReport("identity aggregation returns its input", same.gamma == g, 1))

    if config.negative_tests and n >= 2:
        values, _ = corrupt_values(rng, g.values)
        corrupted = FiniteSetFunction(g.universe, tuple(values))
        reports.append(expect_error("scale rejects an input that is not a measure",
                                    lambda: transform(TransformKind.SCALE, [corrupted], tau_T(M), c=2.0, tol=tol),
                                    InputNotMeasureError))
    logger.debug(f"Constructions checked on n={n}")
    return reports
