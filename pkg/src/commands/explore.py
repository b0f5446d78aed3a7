# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Handler for `pmmeas explore`: seeded counterexample searches and the
S_tau census.
"""

import time
from argparse import Namespace
from collections import Counter
from typing import Any, Dict, Optional, Sequence

import numpy as np

from ..config import Config
from ..ddf_core import ddf_eq
from ..delta_ops import ApplyCache, PI_M, apply, tau_LA, tau_T
from ..errors import BudgetExhaustedError, ConfigError, error_payload
from ..generators import random_ddf, random_metric
from ..hausdorff import dirac_context, enumerate_measurable
from ..logger import logger
from ..measures import FiniteUniverse, NumericSetFunction, build_dirac
from ..models import EvalMethod, ExploreMode
from ..scalar_ops import D, K_1, K_INF, PI, W
from ..utils import rng_for
from ..views import build_explore_report, write_json

DEFAULT_WEIGHTS = (1.0, 2.0, 4.0)


def find_pi_top_violation(rng: np.random.Generator, budget: int, weights: Sequence[float] = DEFAULT_WEIGHTS,
                          tol: float = 1e-9) -> Dict[str, Any]:
    """
    Random disjoint pairs (E, F) until Pi_M(eps_mu(E), eps_mu(F)) differs
    from eps_mu(E u F) for the additive mu of the weights.
    """
    mu = NumericSetFunction.from_weights(list(weights))
    gamma = build_dirac(mu)
    universe = gamma.universe
    for trial in range(1, budget + 1):
        e, f = (int(v) for v in rng.integers(0, universe.size, size=2))
        if e & f:
            continue
        composed = apply(PI_M, gamma[e], gamma[f])
        if not ddf_eq(composed, gamma[e | f], tol, tol):
            logger.ok(f"Pi_M violation after {trial} trial(s): E={universe.format(e)} F={universe.format(f)}")
            return {
                "found": True,
                "trials": trial,
                "witness": {
                    "E": universe.format(e), "F": universe.format(f),
                    "mu_E": mu[e], "mu_F": mu[f], "mu_union": mu[e | f],
                    "composed": composed.to_dict(), "union": gamma[e | f].to_dict(),
                },
            }
    error = BudgetExhaustedError(f"No Pi_M violation found in {budget} trials")
    return {"found": False, "trials": budget, "error": error_payload(error)}


def find_nonassoc(rng: np.random.Generator, budget: int, step: float = 0.01, tol: float = 1e-9) -> Dict[str, Any]:
    """
    Associativity probe of tau_{K_1,D} on random DDF triples, evaluated on
    the grid oracle. Violations must exceed the oracle's location band.
    """
    op = tau_LA(K_1, D)
    cached = ApplyCache(op, EvalMethod.ORACLE, step)
    band = 6.0 * step
    for trial in range(1, budget + 1):
        G, H, K = (random_ddf(rng, max_atoms=2, x_max=3.0, decimals=2) for _ in range(3))
        left = cached(cached(G, H), K)
        right = cached(G, cached(H, K))
        if not ddf_eq(left, right, tol, band):
            logger.ok(f"{op.label} associativity violation after {trial} trial(s)")
            return {
                "found": True,
                "trials": trial,
                "band": band,
                "witness": {"G": G.to_dict(), "H": H.to_dict(), "K": K.to_dict(),
                            "left": left.to_dict(), "right": right.to_dict()},
            }
    logger.info(f"No {op.label} associativity violation in {budget} trial(s)")
    error = BudgetExhaustedError(f"none found in {budget} trials")
    return {"found": False, "trials": budget, "band": band, "error": error_payload(error)}


def s_tau_census(rng: np.random.Generator, sizes: Sequence[int], spaces: int, taus=None,
                 tol: float = 1e-9) -> Dict[str, Any]:
    """|S_tau| across random Dirac metric and ultrametric spaces."""
    taus = list(taus) if taus else [tau_T(W), tau_T(PI), PI_M]
    rows = []
    for n in sizes:
        if n > 6:
            raise ConfigError(f"Census size {n} exceeds 6 points")
        for kind, L in (("metric", K_1), ("ultrametric", K_INF)):
            contexts = [dirac_context(random_metric(rng, n, L), tau_T(W)) for _ in range(spaces)]
            for tau in taus:
                counts = [len(enumerate_measurable(ctx, tau, tol).members) for ctx in contexts]
                rows.append({
                    "n": n,
                    "metric": kind,
                    "tau": tau.label,
                    "sizes": counts,
                    "histogram": {str(k): v for k, v in sorted(Counter(counts).items())},
                    "power_set": FiniteUniverse.of_size(n).size,
                })
                logger.debug(f"census n={n} {kind} {tau.label}: {counts}")
    return {"found": True, "rows": rows}


def handle_explore(args: Namespace, config: Config) -> int:
    """
    Run one search mode and write its report.

    find-pi-top-violation must find a witness within the budget (exit 1
    otherwise); the other modes are exploratory.
    """
    try:
        mode = ExploreMode(args.mode)
    except ValueError:
        raise ConfigError(f"Unknown explore mode '{args.mode}'. Known modes: "
                          f"{', '.join(m.value for m in ExploreMode)}")
    settings = config.explore
    seed = args.seed if getattr(args, "seed", None) is not None else config.suite.seed
    budget = args.budget if getattr(args, "budget", None) is not None else settings.budget
    if budget < 1:
        raise ConfigError(f"budget must be >= 1 (got {budget})")
    rng = rng_for(seed, f"explore:{mode.value}")
    tol = config.suite.tolerance

    started = time.perf_counter()
    if mode == ExploreMode.FIND_PI_TOP_VIOLATION:
        weights: Optional[Sequence[float]] = getattr(args, "weights", None)
        result = find_pi_top_violation(rng, budget, weights or DEFAULT_WEIGHTS, tol)
    elif mode == ExploreMode.FIND_NONASSOC:
        result = find_nonassoc(rng, budget, settings.oracle_grid_step, tol)
    else:
        result = s_tau_census(rng, settings.census_sizes, settings.census_spaces, tol=tol)
    report = build_explore_report(mode.value, seed, budget, result, time.perf_counter() - started)

    if getattr(args, "out", None):
        write_json(report, args.out)
        logger.ok(f"Explore report written to {args.out}")
    else:
        logger.info(f"{mode.value}: found={result['found']}")

    if mode == ExploreMode.FIND_PI_TOP_VIOLATION and not result["found"]:
        logger.warning(result["error"]["error"])
        return 1
    return 0

