# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Theorem suites: each checks one family of claims on seeded instances."""

from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from ..config import SuiteConfig
from ..models import CheckReport
from .algebra_suites import run_ddf, run_dominance, run_scalar, run_triangle_axioms
from .hausdorff_suites import run_hausdorff, run_measurable
from .measure_suites import run_characterization, run_constructions, run_measures
from .metric_suites import run_ppm, run_product, run_semilattice

SuiteFn = Callable[[SuiteConfig, np.random.Generator], List[CheckReport]]


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    run: SuiteFn


SUITES: Dict[str, Suite] = {
    s.name: s for s in (
        Suite("ddf", "Step DDFs are canonical; eps_a, c (.) G and F(x) = mass strictly below x behave as defined",
              run_ddf),
        Suite("scalar", "M, Pi, W, D are t-norms with D <= W <= Pi <= M; K_alpha and ordinal sums are "
                        "L-operations; the dual is an involution", run_scalar),
        Suite("triangle-axioms", "tau_T, tau_{L,A}, Pi_T and convolution are triangle functions whose exact "
                                 "evaluation matches the Dirac laws and the grid oracles", run_triangle_axioms),
        Suite("dominance", "AM >> W and Pi_M dominates every triangle function", run_dominance),
        Suite("measures", "Dirac and scaled-profile set functions are tau-decomposable measures exactly "
                          "when the numeric set function is L-decomposable", run_measures),
        Suite("characterization", "gamma is a tau-measure iff tau(gamma(E u F), gamma(E n F)) = "
                                  "tau(gamma(E), gamma(F)) for all E, F", run_characterization),
        Suite("constructions", "Scaling, tau- and theta-combination and aggregation preserve "
                               "(sub)decomposability", run_constructions),
        Suite("ppm", "rho(E, F) = gamma(E xor F) is a translation-invariant PpM for an antimonotone "
                     "tau-submeasure gamma", run_ppm),
        Suite("semilattice", "Generated pseudo-metrics form a bounded semilattice under (+)_{Pi_M} and a "
                             "commutative semigroup under (+)_theta", run_semilattice),
        Suite("product", "Products of PpM spaces under a dominating aggregation are PpM spaces", run_product),
        Suite("hausdorff", "Lambda(E) = H(E^c, Omega) is an antimonotone Pi_M-submeasure on a PM-space",
              run_hausdorff),
        Suite("measurable", "S_tau is a ring containing empty set and Omega, and Lambda restricted to it is "
                            "a tau-measure", run_measurable),
    )
}


__all__ = ["Suite", "SUITES"]
