# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Suites on DDFs, scalar operations, triangle functions and dominance."""

import itertools
from typing import List

import numpy as np

from ..config import SuiteConfig
from ..ddf_core import (
    EPSILON_0,
    ddf_eq,
    ddf_from_json,
    ddf_leq,
    ddf_to_json,
    epsilon,
    evaluate,
    grid_sample,
    make_ddf,
    pointwise_min,
    right_limit,
    scalar_multiply,
)
from ..delta_ops import (
    AGG_MEAN,
    AGG_MIN,
    AGG_PRODUCT,
    CONVOLUTION,
    PI_AM,
    PI_M,
    apply,
    check_delta_order,
    check_distributive,
    check_dominance_delta,
    check_dominance_nary,
    check_scaling_law,
    check_specialization,
    check_triangle_axioms,
    pi_top,
    rho_LQ,
    tau_LA,
    tau_T,
)
from ..errors import NegativeLocationError, NonLeftContinuousScalarError, NonNormalizedError
from ..generators import random_ddf, random_ddfs, random_pairs, random_quadruples
from ..logger import logger
from ..models import CheckReport, EvalMethod
from ..oracles import check_band_agreement, inf_oracle, sup_oracle
from ..scalar_ops import (
    AM,
    D,
    K_1,
    K_2,
    K_INF,
    M,
    PI,
    TNORMS,
    W,
    check_associative,
    check_dual_involution,
    check_L_axioms,
    check_pointwise_order,
    check_scalar_class,
    check_scalar_dominance,
    check_tnorm_axioms,
    dual,
    k_alpha,
    ordinal_sum,
)
from .common import all_of, detector, expect_error

SCALING_CONSTANTS = (0.5, 1.0, 2.0, 3.7)


def run_ddf(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    reports = []

    points = rng.uniform(0.0, 10.0, size=config.instance_count("dirac_pairs"))
    reports.append(all_of("eps_a(a) = 0 and eps_a(a+) = 1", (
        None if evaluate(epsilon(a), a) == 0.0 and right_limit(epsilon(a), a) == 1.0 else {"a": float(a)}
        for a in points
    )))

    samples = random_ddfs(rng, config.random_samples, inf_mass_prob=0.2)
    reports.append(all_of("F(x) is the mass strictly below x", (
        None if all(abs(evaluate(F, float(x)) - sum(m for a, m in F.atoms if a < x)) <= tol
                    for x in list(F.locations) + [0.0, 5.0, 11.0]) else {"F": F.to_dict()}
        for F in samples
    )))

    def shuffled(F):
        split = [(a, m / 2) for a, m in F.atoms] * 2
        order = rng.permutation(len(split))
        return make_ddf([split[k] for k in order], F.inf_mass)
    reports.append(all_of("make_ddf canonical under reordering and splitting", (
        None if ddf_eq(shuffled(F), F, tol, tol) else {"F": F.to_dict()} for F in samples
    )))

    reports.append(all_of("c (.) eps_a = eps_{ca}", (
        None if ddf_eq(scalar_multiply(c, epsilon(a)), epsilon(c * a), tol, tol) else {"a": float(a), "c": c}
        for a in points[:20] for c in SCALING_CONSTANTS
    )))
    reports.append(all_of("(c1 c2) (.) G = c1 (.) (c2 (.) G)", (
        None if ddf_eq(scalar_multiply(c1 * c2, G), scalar_multiply(c1, scalar_multiply(c2, G)), tol, 10 * tol)
        else {"G": G.to_dict(), "c1": c1, "c2": c2}
        for G in samples for c1, c2 in itertools.product(SCALING_CONSTANTS, repeat=2)
    )))
    reports.append(all_of("0 (.) G = eps_0", (
        None if scalar_multiply(0.0, G) == EPSILON_0 else {"G": G.to_dict()} for G in samples
    )))
    reports.append(all_of("min(G, H) <= G", (
        None if ddf_leq(pointwise_min(G, H), G, tol) else {"G": G.to_dict(), "H": H.to_dict()}
        for G, H in zip(samples, samples[1:])
    )))
    reports.append(all_of("JSON form reproduces the DDF", (
        None if ddf_from_json(ddf_to_json(F)) == F else {"F": F.to_dict()} for F in samples
    )))

    rows = grid_sample(epsilon(1.0), 2.0, 0.1)
    reports.append(CheckReport("grid sample of eps_1", len(rows) == 21 and rows[10][1] == 0.0 and rows[11][1] == 1.0,
                               len(rows)))

    if config.negative_tests:
        reports.append(expect_error("rejects masses not summing to 1",
                                    lambda: make_ddf([(1.0, 0.5), (2.0, 0.4)]), NonNormalizedError))
        reports.append(expect_error("rejects negative locations",
                                    lambda: make_ddf([(-1.0, 1.0)]), NegativeLocationError))
    return reports


def run_scalar(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    reports = []
    for T in TNORMS:
        reports.extend(check_tnorm_axioms(T))
    reports.append(check_pointwise_order((D, W, PI, M)))
    for Q in (M, PI, W):
        reports.append(check_dual_involution(Q))
        reports.append(check_associative(dual(Q)))

    reports.append(CheckReport("W(0.7, 0.6) = 0.3", abs(W(0.7, 0.6) - 0.3) <= 1e-12, 1))
    reports.append(CheckReport("D(0.7, 0.6) = 0", D(0.7, 0.6) == 0.0, 1))
    reports.append(CheckReport("dual(W)(0.7, 0.6) = 1", dual(W)(0.7, 0.6) == 1.0, 1))

    am_class = check_scalar_class(AM)
    reports.append(CheckReport("AM is an aggregation function but not a semi-copula",
                               am_class["aggregation"] and not am_class["semi_copula"], 1, details=am_class))
    w_class = check_scalar_class(W)
    reports.append(CheckReport("W is a left-continuous t-norm", w_class["t_norm"] and w_class["left_continuous"],
                               1, details=w_class))

    samples = np.concatenate(([0.0], np.round(rng.uniform(0.0, 10.0, size=config.random_samples), 3)))
    ordinal = ordinal_sum([(1.0, 4.0)], [[(1.0, 0.0), (2.0, 1.0), (3.0, 3.0)]])
    for L in (K_1, K_2, k_alpha(3.0), K_INF, ordinal):
        reports.extend(check_L_axioms(L, samples))
    reports.append(CheckReport("K_2(3, 4) = 5", abs(K_2(3.0, 4.0) - 5.0) <= 1e-12, 1))
    reports.append(CheckReport("K_inf(2, 7) = 7", K_INF(2.0, 7.0) == 7.0, 1))

    if config.negative_tests:
        reports.append(detector(check_associative(AM), "detects non-associativity of AM"))
    return reports


def _dirac_law_reports(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    pairs = rng.uniform(0.0, 10.0, size=(config.instance_count("dirac_pairs"), 2))

    def law(name, op, combine):
        return all_of(name, (
            None if ddf_eq(apply(op, epsilon(a), epsilon(b)), epsilon(combine(a, b)), tol, tol)
            else {"a": float(a), "b": float(b)}
            for a, b in pairs
        ))

    reports = [law(f"{tau_T(T).label}(eps_a, eps_b) = eps_(a+b)", tau_T(T), lambda a, b: a + b) for T in TNORMS]
    reports += [law(f"{pi_top(T).label}(eps_a, eps_b) = eps_max(a,b)", pi_top(T), max) for T in TNORMS]
    reports += [law(f"{tau_LA(L, T).label}(eps_a, eps_b) = eps_L(a,b)", tau_LA(L, T), lambda a, b, L=L: float(L(a, b)))
                for L in (K_2, K_INF) for T in (M, PI)]
    reports.append(law("convolution(eps_a, eps_b) = eps_(a+b)", CONVOLUTION, lambda a, b: a + b))
    return reports


def _oracle_reports(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    step = config.oracle_grid_step
    tol = config.tolerance
    reports = []
    pairs = random_pairs(rng, config.instance_count("oracle_pairs"), max_atoms=4, x_max=5.0)
    n_points = config.instance_count("oracle_points")
    for L in (K_1, K_2, K_INF):
        for A in (M, PI, W):
            op = tau_LA(L, A)
            parts = []
            for G, H in pairs:
                top = float(L(G.locations.max(), H.locations.max())) + 1.0
                xs = np.sort(rng.uniform(0.0, top, size=n_points))
                parts.append(check_band_agreement(op.label, apply(op, G, H), xs,
                                                  sup_oracle(L, A, G, H, xs, step), step, tol))
            reports.append(CheckReport.combine(f"{op.label} exact vs grid oracle", parts))
        op = rho_LQ(L, W)
        parts = []
        for G, H in pairs:
            top = float(L(G.locations.max(), H.locations.max())) + 1.0
            xs = np.sort(rng.uniform(0.0, top, size=n_points))
            parts.append(check_band_agreement(op.label, apply(op, G, H), xs,
                                              inf_oracle(L, dual(W), G, H, xs, step), step, tol))
        reports.append(CheckReport.combine(f"{op.label} exact vs grid oracle", parts))
    logger.debug(f"Oracle agreement: {len(pairs)} pairs x {n_points} points at step {step}")
    return reports


def run_triangle_axioms(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    samples = random_ddfs(rng, config.random_samples, x_max=5.0)
    reports = []
    for op in config.delta_ops:
        reports.extend(check_triangle_axioms(op, samples, tol))

    reports.extend(_dirac_law_reports(config, rng))
    reports.extend(_oracle_reports(config, rng))

    pairs = list(zip(samples, samples[1:]))
    for T in (M, PI, W):
        reports.append(check_specialization(tau_LA(K_1, T), tau_T(T), pairs, tol))
        reports.append(check_specialization(tau_LA(K_INF, T), pi_top(T), pairs, tol))
    constants = [c for c in SCALING_CONSTANTS if c != 1.0]
    for L in (K_1, K_2, K_INF):
        reports.append(check_scaling_law(L, samples[:5], constants, tol))
    for op in (tau_T(M), PI_M, tau_LA(K_2, M)):
        reports.append(check_distributive(op, samples[:8], constants, tol))

    if config.negative_tests:
        G, H = samples[0], samples[1]
        reports.append(expect_error("exact path refuses a non-left-continuous t-norm",
                                    lambda: apply(tau_T(D), G, H), NonLeftContinuousScalarError))
        am_axioms = check_triangle_axioms(PI_AM, samples[:8], tol)
        reports.append(detector(am_axioms[1], f"detects non-associativity of {PI_AM.label}"))
        oracle_d = apply(tau_T(D), G, H, EvalMethod.ORACLE, step=0.01)
        reports.append(CheckReport(f"{tau_T(D).label} oracle path below {tau_T(W).label}",
                                   ddf_leq(oracle_d, apply(tau_T(W), G, H), tol, 0.04), 1))
    return reports


def run_dominance(config: SuiteConfig, rng: np.random.Generator) -> List[CheckReport]:
    tol = config.tolerance
    reports = [
        check_scalar_dominance(AM, W, grid_step=0.01),
        check_scalar_dominance(M, M, grid_step=0.05),
        check_scalar_dominance(M, W, grid_step=0.05),
    ]

    quads = random_quadruples(rng, config.dominance_samples, x_max=5.0)
    for tau in (tau_T(W), tau_T(PI), pi_top(W), CONVOLUTION):
        reports.append(check_dominance_delta(PI_M, tau, quads, tol))
    reports.append(check_dominance_delta(PI_AM, tau_T(W), quads, tol))

    tuples = [([G1, G2], [H1, H2]) for G1, H1, G2, H2 in quads]
    for alpha in (AGG_MIN, AGG_MEAN):
        reports.append(check_dominance_nary(alpha, tau_T(W), tuples, tol))
    reports.append(check_dominance_nary(AGG_PRODUCT, tau_T(PI), tuples, tol))

    pairs = random_pairs(rng, config.random_samples, x_max=5.0)
    reports.append(check_delta_order(tau_T(W), tau_T(PI), pairs, tol))
    reports.append(check_delta_order(tau_T(PI), tau_T(M), pairs, tol))
    reports.append(check_delta_order(tau_T(M), PI_M, pairs, tol))

    if config.negative_tests:
        reports.append(detector(check_scalar_dominance(W, AM, grid_step=0.1), "detects W >> AM failing"))
        reports.append(detector(check_delta_order(tau_T(M), tau_T(W), pairs, tol),
                                f"detects {tau_T(M).label} <= {tau_T(W).label} failing"))
    return reports
