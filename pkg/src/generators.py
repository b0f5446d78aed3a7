# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Seeded random instance generators.

Every generator takes a numpy Generator so that a suite's instances are a
pure function of its seed.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .ddf_core import DiscreteDDF, epsilon, make_ddf
from .scalar_ops import K_1, K_INF, LOp


def random_ddf(
    rng: np.random.Generator,
    max_atoms: int = 3,
    x_max: float = 10.0,
    inf_mass_prob: float = 0.0,
    decimals: Optional[int] = 3,
) -> DiscreteDDF:
    """
    A random step DDF with 1..max_atoms atoms in [0, x_max].

    Locations are rounded to `decimals` places so sums of locations stay
    well separated from float noise; with probability inf_mass_prob some
    mass is put at +inf.
    """
    k = int(rng.integers(1, max_atoms + 1))
    locs = rng.uniform(0.0, x_max, size=k)
    if decimals is not None:
        locs = np.round(locs, decimals)
    masses = rng.dirichlet(np.ones(k + 1))
    inf_mass = 0.0
    if rng.random() < inf_mass_prob:
        inf_mass = float(masses[-1])
    else:
        masses[:-1] += masses[-1] / k
    return make_ddf(zip(locs, masses[:-1]), inf_mass)


def random_ddfs(rng: np.random.Generator, count: int, **kwargs) -> List[DiscreteDDF]:
    return [random_ddf(rng, **kwargs) for _ in range(count)]


def random_quadruples(rng: np.random.Generator, count: int, **kwargs) -> List[Tuple[DiscreteDDF, ...]]:
    return [tuple(random_ddf(rng, **kwargs) for _ in range(4)) for _ in range(count)]


def random_pairs(rng: np.random.Generator, count: int, **kwargs) -> List[Tuple[DiscreteDDF, DiscreteDDF]]:
    return [(random_ddf(rng, **kwargs), random_ddf(rng, **kwargs)) for _ in range(count)]


def random_weights(rng: np.random.Generator, n: int, low: float = 0.5, high: float = 5.0, decimals: int = 3) -> List[float]:
    return [float(w) for w in np.round(rng.uniform(low, high, size=n), decimals)]


def distinct_weights(n: int) -> List[float]:
    """Powers of two: every subset gets a different additive value."""
    return [float(2 ** i) for i in range(n)]


def l_fold_values(weights: Sequence[float], L: LOp) -> List[float]:
    """
    mu(E) = L-fold of the weights of E over all 2^n subsets (mu(empty) = 0).

    K_1 gives an additive set function, K_inf a maximum.
    """
    n = len(weights)
    values = [0.0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        i = low.bit_length() - 1
        values[mask] = float(L(values[mask ^ low], weights[i]))
    return values


def additive_values(weights: Sequence[float]) -> List[float]:
    return l_fold_values(weights, K_1)


def max_values(weights: Sequence[float]) -> List[float]:
    return l_fold_values(weights, K_INF)


def corrupt_values(
    rng: np.random.Generator,
    values: Sequence[DiscreteDDF],
    shift_min: float = 0.5,
) -> Tuple[List[DiscreteDDF], int]:
    """
    Replace the value of one random non-empty subset by a Dirac DDF moved by
    at least shift_min away from the original's smallest atom.

    Returns the corrupted table and the corrupted mask.
    """
    out = list(values)
    mask = int(rng.integers(1, len(values)))
    original = out[mask]
    base = float(original.locations[0]) if original.atoms else 0.0
    out[mask] = epsilon(base + shift_min + float(rng.uniform(0.0, 1.0)))
    return out, mask


def random_metric(
    rng: np.random.Generator,
    n: int,
    L: LOp = K_1,
    low: float = 1.0,
    high: float = 10.0,
    decimals: int = 3,
) -> np.ndarray:
    """
    A numeric (pseudo)metric on n points satisfying d(p,r) <= L(d(p,q), d(q,r)).

    Random symmetric weights in [low, high] are closed under L-paths with a
    Floyd-Warshall pass; K_1 gives a metric, K_inf an ultrametric.
    """
    w = np.round(rng.uniform(low, high, size=(n, n)), decimals)
    d = np.triu(w, 1)
    d = d + d.T
    for k in range(n):
        via = np.asarray(L(d[:, k][:, None], d[k, :][None, :]))
        d = np.minimum(d, via)
    np.fill_diagonal(d, 0.0)
    return d


def violating_metric(rng: np.random.Generator, n: int, low: float = 1.0, high: float = 2.0) -> np.ndarray:
    """
    A symmetric matrix that breaks the triangle inequality on points 0, 1, 2.

    Requires n >= 3.
    """
    w = np.round(rng.uniform(low, high, size=(n, n)), 3)
    d = np.triu(w, 1)
    d = d + d.T
    d[0, 2] = d[2, 0] = d[0, 1] + d[1, 2] + 5.0
    np.fill_diagonal(d, 0.0)
    return d
