# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Probabilistic pseudo-metric (PpM) spaces on finite point sets.

A space stores its full distance matrix of DDFs together with the triangle
function of its triangle inequality. Spaces generated by a submeasure
gamma use the subsets of the universe as points, in mask order, with
dist(E, F) = gamma(E xor F).
"""

import itertools
import threading
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .ddf_core import DEFAULT_TOL, EPSILON_0, DiscreteDDF, ddf_eq, ddf_leq, right_limit
from .delta_ops import (
    PI_M,
    ApplyCache,
    Aggregator,
    DeltaOp,
    check_delta_order,
    check_dominance_delta,
    check_dominance_nary,
)
from .errors import (
    ConfigError,
    DominanceUnverifiedError,
    InputNotAntimonotoneSubmeasureError,
    PointSetMismatchError,
    ProductTooLargeError,
)
from .generators import random_ddf, random_quadruples
from .logger import logger
from .measures import FiniteSetFunction, FiniteUniverse, classify
from .models import CheckReport
from .scalar_ops import LOp, ScalarOp
from .utils import rng_for

EXHAUSTIVE_LIMIT = 64
"""Spaces up to this many points get exhaustive triple scans"""

PRODUCT_CAP = 4096

DEFAULT_DOMINANCE_SAMPLES = 200


@dataclass(frozen=True)
class FinitePpMSpace:
    """A finite point set with a DDF-valued distance and a triangle function."""

    points: Tuple[str, ...]
    """Point labels"""

    dist: Tuple[Tuple[DiscreteDDF, ...], ...]
    """dist[i][j] is the distance distribution between points i and j"""

    tau: DeltaOp
    """Triangle function of the triangle inequality"""

    tag: str = ""
    """Name of the generating submeasure or construction"""

    universe: Optional[FiniteUniverse] = None
    """Set when the points are the subsets of a universe, in mask order"""

    @property
    def size(self) -> int:
        return len(self.points)

    def __getitem__(self, pair: Tuple[int, int]) -> DiscreteDDF:
        i, j = pair
        return self.dist[i][j]

    def with_dist(self, dist: Tuple[Tuple[DiscreteDDF, ...], ...], tag: str) -> "FinitePpMSpace":
        return FinitePpMSpace(self.points, dist, self.tau, tag, self.universe)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": list(self.points),
            "dist": {
                f"{self.points[i]}|{self.points[j]}": self.dist[i][j].to_dict()
                for i in range(self.size) for j in range(self.size)
            },
            "tau": self.tau.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FinitePpMSpace":
        try:
            points = tuple(str(p) for p in data["points"])
            table = data["dist"]
            dist = []
            for p in points:
                row = []
                for q in points:
                    key = f"{p}|{q}"
                    if key not in table:
                        key = f"{q}|{p}"
                    row.append(EPSILON_0 if p == q and key not in table else DiscreteDDF.from_dict(table[key]))
                dist.append(tuple(row))
            return cls(points, tuple(dist), DeltaOp.from_dict(data["tau"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"Invalid space description: {e}")


def nu_like(space: FinitePpMSpace) -> FinitePpMSpace:
    """The pseudo-metric nu: every distance eps_0."""
    n = space.size
    return space.with_dist(tuple((EPSILON_0,) * n for _ in range(n)), "nu")


def _triples(n: int, rng: Optional[np.random.Generator], sample_count: int,
             name: str) -> Tuple[Iterable[Tuple[int, int, int]], bool]:
    if n <= EXHAUSTIVE_LIMIT:
        return itertools.product(range(n), repeat=3), False
    if rng is None:
        rng = rng_for(n, f"triples:{name}")
    return (tuple(int(v) for v in rng.integers(0, n, size=3)) for _ in range(sample_count)), True


def check_ppm_axioms(
    space: FinitePpMSpace,
    tol: float = DEFAULT_TOL,
    rng: Optional[np.random.Generator] = None,
    sample_count: int = 20000,
) -> List[CheckReport]:
    """
    dist(p,p) = eps_0, symmetry, and dist(p,r) >= tau(dist(p,q), dist(q,r)).

    Triples are scanned exhaustively up to EXHAUSTIVE_LIMIT points and
    sampled beyond, from rng or from a generator seeded by the space size.
    """
    n = space.size
    reports = []

    exact = all(space.dist[i][i] == EPSILON_0 for i in range(n))
    bad = next((i for i in range(n) if not ddf_eq(space.dist[i][i], EPSILON_0, tol, tol)), None)
    reports.append(CheckReport(
        "dist(p,p) = eps_0", bad is None, n,
        None if bad is None else {"p": space.points[bad]},
        details={"exact": exact},
    ))

    exact = True
    witness = None
    checked = 0
    for i, j in itertools.combinations(range(n), 2):
        checked += 1
        if space.dist[i][j] != space.dist[j][i]:
            exact = False
            if not ddf_eq(space.dist[i][j], space.dist[j][i], tol, tol):
                witness = {"p": space.points[i], "q": space.points[j]}
                break
    reports.append(CheckReport("symmetry", witness is None, checked, witness, details={"exact": exact}))

    cached = ApplyCache(space.tau)
    triples, sampled = _triples(n, rng, sample_count, space.tag)
    witness = None
    checked = 0
    for p, q, r in triples:
        checked += 1
        if not ddf_leq(cached(space.dist[p][q], space.dist[q][r]), space.dist[p][r], tol, tol):
            witness = {"p": space.points[p], "q": space.points[q], "r": space.points[r]}
            break
    reports.append(CheckReport(f"triangle inequality under {space.tau.label}", witness is None, checked,
                               witness, sampled=sampled))
    return reports


def from_submeasure(gamma: FiniteSetFunction, tau: DeltaOp, tol: float = DEFAULT_TOL, tag: str = "gamma") -> FinitePpMSpace:
    """
    The pseudo-metric rho(E, F) = gamma(E xor F) on all subsets.
    """
    report = classify(gamma, tau, tol)
    if not (report.is_submeasure and report.is_antimonotone):
        raise InputNotAntimonotoneSubmeasureError(
            f"Generator is not an antimonotone {tau.label}-decomposable submeasure",
            witness=report.witnesses.get("submeasure") or report.witnesses.get("antimonotone"),
        )
    universe = gamma.universe
    size = universe.size
    points = tuple(universe.format(m) for m in range(size))
    dist = tuple(tuple(gamma[e ^ f] for f in range(size)) for e in range(size))
    return FinitePpMSpace(points, dist, tau, tag, universe)


def check_translation_invariance(space: FinitePpMSpace, rng: Optional[np.random.Generator] = None,
                                 sample_count: int = 20000) -> CheckReport:
    """rho(E, G) = rho(E xor F, F xor G) for all triples of subsets (sampled on large spaces)."""
    if space.universe is None:
        raise PointSetMismatchError("Translation invariance needs a space whose points are subsets")
    size = space.size
    witness = None
    checked = 0
    triples, sampled = _triples(size, rng, sample_count, space.tag)
    for e, f, g in triples:
        checked += 1
        if space.dist[e][g] != space.dist[e ^ f][f ^ g]:
            witness = {"E": space.points[e], "F": space.points[f], "G": space.points[g]}
            break
    return CheckReport("translation invariance", witness is None, checked, witness, sampled=sampled)


def check_menger_inequality(space: FinitePpMSpace, L: LOp, A: ScalarOp, tol: float = DEFAULT_TOL,
                            rng: Optional[np.random.Generator] = None, sample_count: int = 20000) -> CheckReport:
    """
    F_pr(L(x, y)) >= A(F_pq(x), F_qr(y)) for all x, y and all triples.

    For step DDFs the binding cases are x, y just above atoms, where the
    inequality reads F_pr(L(a, b)+) >= A(F_pq(a+), F_qr(b+)).
    """
    n = space.size
    witness = None
    checked = 0
    triples, sampled = _triples(n, rng, sample_count, space.tag)
    for p, q, r in triples:
        F_pq, F_qr, F_pr = space.dist[p][q], space.dist[q][r], space.dist[p][r]
        if not F_pq.atoms or not F_qr.atoms:
            continue
        a, g = F_pq.locations, F_pq.right_limits
        b, h = F_qr.locations, F_qr.right_limits
        corners = np.asarray(L(a[:, None], b[None, :]))
        bound = np.asarray(A(np.broadcast_to(g[:, None], corners.shape), np.broadcast_to(h[None, :], corners.shape)))
        have = np.asarray(right_limit(F_pr, corners + tol))
        checked += corners.size
        if np.any(have + tol < bound):
            k = int(np.argmax(bound - have))
            witness = {"p": space.points[p], "q": space.points[q], "r": space.points[r],
                       "x": float(np.broadcast_to(a[:, None], corners.shape).ravel()[k]),
                       "y": float(np.broadcast_to(b[None, :], corners.shape).ravel()[k])}
            break
    return CheckReport(f"Menger inequality with ({L.label}, {A.label})", witness is None, checked, witness,
                       sampled=sampled)


# ---------------------------------------------------------------------------
# the family of generated pseudo-metrics
# ---------------------------------------------------------------------------

_dominance_lock = threading.Lock()
_dominance_verdicts: Dict[Tuple[DeltaOp, DeltaOp, int, int], CheckReport] = {}


def sampled_dominance(theta: DeltaOp, tau: DeltaOp, samples: int = DEFAULT_DOMINANCE_SAMPLES, seed: int = 0) -> CheckReport:
    """theta >> tau on seeded random quadruples; verdicts are memoised."""
    key = (theta, tau, samples, seed)
    with _dominance_lock:
        report = _dominance_verdicts.get(key)
    if report is None:
        rng = rng_for(seed, f"dominance:{theta.label}:{tau.label}")
        report = check_dominance_delta(theta, tau, random_quadruples(rng, samples))
        with _dominance_lock:
            _dominance_verdicts[key] = report
    return report


def _same_points(rho: FinitePpMSpace, varrho: FinitePpMSpace) -> None:
    if rho.points != varrho.points:
        raise PointSetMismatchError(
            f"Point sets differ ({rho.size} vs {varrho.size} points)",
            witness={"left": rho.tag, "right": varrho.tag},
        )


def _combine(theta_apply, rho: FinitePpMSpace, varrho: FinitePpMSpace, tag: str) -> FinitePpMSpace:
    n = rho.size
    dist = tuple(tuple(theta_apply(rho.dist[i][j], varrho.dist[i][j]) for j in range(n)) for i in range(n))
    return rho.with_dist(dist, tag)


def oplus(
    theta: DeltaOp,
    rho: FinitePpMSpace,
    varrho: FinitePpMSpace,
    tau: Optional[DeltaOp] = None,
    dominance_samples: int = DEFAULT_DOMINANCE_SAMPLES,
    seed: int = 0,
    cache: Optional[ApplyCache] = None,
) -> FinitePpMSpace:
    """
    (rho (+)_theta varrho)(E, F) = theta(rho(E, F), varrho(E, F)).

    theta >> tau is verified on sampled quadruples first.
    """
    _same_points(rho, varrho)
    tau = tau or rho.tau
    report = sampled_dominance(theta, tau, dominance_samples, seed)
    if not report.passed:
        raise DominanceUnverifiedError(f"{theta.label} >> {tau.label} failed on samples", witness=report.witness)
    theta_apply = cache if cache is not None else ApplyCache(theta)
    return _combine(theta_apply, rho, varrho, f"({rho.tag} + {varrho.tag})")


def preceq(rho: FinitePpMSpace, varrho: FinitePpMSpace, tol: float = DEFAULT_TOL) -> bool:
    """rho <= varrho iff rho(E, F) >= varrho(E, F) pointwise for every pair."""
    _same_points(rho, varrho)
    n = rho.size
    for i in range(n):
        for j in range(n):
            G, H = varrho.dist[i][j], rho.dist[i][j]
            if G != H and not ddf_leq(G, H, tol, tol):
                return False
    return True


def same_metric(rho: FinitePpMSpace, varrho: FinitePpMSpace, tol: float = DEFAULT_TOL) -> bool:
    if rho.dist == varrho.dist:
        return True
    return preceq(rho, varrho, tol) and preceq(varrho, rho, tol)


@dataclass
class PseudoMetricFamily:
    """Finitely many generated pseudo-metrics on one point set, under one tau."""

    members: List[FinitePpMSpace]
    tau: DeltaOp

    def __post_init__(self):
        if not self.members:
            raise ConfigError("A family needs at least one member")
        for m in self.members[1:]:
            _same_points(self.members[0], m)

    @property
    def nu(self) -> FinitePpMSpace:
        return nu_like(self.members[0])

    def closure(self, theta: DeltaOp = PI_M, limit: int = 256) -> "PseudoMetricFamily":
        """
        Close the family (plus nu) under (+)_theta, deduplicating by distance table.
        """
        cache = ApplyCache(theta)
        found: Dict[Tuple, FinitePpMSpace] = {}
        for m in [self.nu] + list(self.members):
            found.setdefault(m.dist, m)
        frontier = list(found.values())
        while frontier:
            new = []
            current = list(found.values())
            for a in frontier:
                for b in current:
                    c = _combine(cache, a, b, f"({a.tag} + {b.tag})")
                    if c.dist not in found:
                        found[c.dist] = c
                        new.append(c)
                        if len(found) > limit:
                            raise ConfigError(f"Family closure exceeds {limit} members")
            frontier = new
        logger.debug(f"Closed family of {len(self.members)} members to {len(found)} under {theta.label}")
        return PseudoMetricFamily(list(found.values()), self.tau)


def check_semilattice(
    family: PseudoMetricFamily,
    theta: DeltaOp,
    tol: float = DEFAULT_TOL,
    dominance_samples: int = DEFAULT_DOMINANCE_SAMPLES,
    seed: int = 0,
) -> List[CheckReport]:
    """
    The closed family under (+)_{Pi_M} is a bounded semilattice:
    idempotent, commutative, nu neutral, and

    (i)  rho <= varrho  iff  rho (+) varrho = varrho
    (ii) (sigma (+)_theta rho) (+) (sigma (+)_theta varrho) <= sigma (+)_theta (rho (+) varrho)

    given theta >> tau (sampled).
    """
    closed = family.closure(PI_M)
    members = closed.members
    nu = closed.nu
    join_cache = ApplyCache(PI_M)
    theta_cache = ApplyCache(theta)
    reports = []

    def join(a, b):
        return _combine(join_cache, a, b, "join")

    def theta_sum(a, b):
        return oplus(theta, a, b, family.tau, dominance_samples, seed, theta_cache)

    witness = next(({"rho": m.tag} for m in members if not same_metric(join(m, m), m, tol)), None)
    reports.append(CheckReport("idempotent", witness is None, len(members), witness))

    witness = None
    checked = 0
    for a, b in itertools.combinations(members, 2):
        checked += 1
        if not same_metric(join(a, b), join(b, a), tol):
            witness = {"rho": a.tag, "varrho": b.tag}
            break
    reports.append(CheckReport("commutative", witness is None, checked, witness))

    witness = next(({"rho": m.tag} for m in members if not same_metric(join(nu, m), m, tol)), None)
    reports.append(CheckReport("nu neutral", witness is None, len(members), witness))

    witness = None
    checked = 0
    for a, b in itertools.product(members, repeat=2):
        checked += 1
        if preceq(a, b, tol) != same_metric(join(a, b), b, tol):
            witness = {"rho": a.tag, "varrho": b.tag}
            break
    reports.append(CheckReport("order equals join order", witness is None, checked, witness))

    witness = None
    checked = 0
    for s, a, b in itertools.product(members, repeat=3):
        checked += 1
        lhs = join(theta_sum(s, a), theta_sum(s, b))
        rhs = theta_sum(s, join(a, b))
        if not preceq(lhs, rhs, tol):
            witness = {"sigma": s.tag, "rho": a.tag, "varrho": b.tag}
            break
    reports.append(CheckReport(f"{theta.label} subdistributes over the join", witness is None, checked,
                               witness, sampled=True))
    return reports


def check_semigroup(
    family: PseudoMetricFamily,
    theta: DeltaOp,
    tol: float = DEFAULT_TOL,
    dominance_samples: int = DEFAULT_DOMINANCE_SAMPLES,
    seed: int = 0,
) -> List[CheckReport]:
    """
    The family closed under (+)_theta is a partially ordered commutative
    semigroup with neutral nu, and (+)_theta is monotone for <=.
    """
    closed = family.closure(theta)
    members = closed.members
    nu = closed.nu
    cache = ApplyCache(theta)

    def plus(a, b):
        return oplus(theta, a, b, family.tau, dominance_samples, seed, cache)

    reports = []
    witness = None
    checked = 0
    for a, b in itertools.combinations(members, 2):
        checked += 1
        if not same_metric(plus(a, b), plus(b, a), tol):
            witness = {"rho": a.tag, "varrho": b.tag}
            break
    reports.append(CheckReport(f"(+)_{theta.label} commutative", witness is None, checked, witness))

    witness = None
    checked = 0
    for a, b, c in itertools.combinations_with_replacement(members, 3):
        checked += 1
        if not same_metric(plus(plus(a, b), c), plus(a, plus(b, c)), tol):
            witness = {"rho": a.tag, "varrho": b.tag, "sigma": c.tag}
            break
    reports.append(CheckReport(f"(+)_{theta.label} associative", witness is None, checked, witness))

    witness = next(({"rho": m.tag} for m in members if not same_metric(plus(nu, m), m, tol)), None)
    reports.append(CheckReport(f"nu neutral for (+)_{theta.label}", witness is None, len(members), witness))

    witness = None
    checked = 0
    for a, b, s in itertools.product(members, repeat=3):
        if not preceq(a, b, tol):
            continue
        checked += 1
        if not preceq(plus(a, s), plus(b, s), tol):
            witness = {"rho": a.tag, "varrho": b.tag, "sigma": s.tag}
            break
    reports.append(CheckReport(f"(+)_{theta.label} monotone", witness is None, checked, witness))

    witness = next(({"rho": m.tag} for m in members if not preceq(nu, m, tol)), None)
    reports.append(CheckReport("nu is the least element", witness is None, len(members), witness))
    return reports


def check_members(family: PseudoMetricFamily, tol: float = DEFAULT_TOL,
                  rng: Optional[np.random.Generator] = None) -> CheckReport:
    """Every member satisfies the PpM axioms under the family's tau."""
    reports = []
    for m in family.members:
        space = FinitePpMSpace(m.points, m.dist, family.tau, m.tag, m.universe)
        reports.extend(check_ppm_axioms(space, tol, rng))
    return CheckReport.combine("members are pseudo-metrics", reports)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def product_space(
    spaces: Sequence[FinitePpMSpace],
    alpha: Aggregator,
    tau: DeltaOp,
    dominance_samples: int = DEFAULT_DOMINANCE_SAMPLES,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> FinitePpMSpace:
    """
    Cartesian product with rho(E, F) = alpha(rho1(E1, F1), ..., rhon(En, Fn)).

    Needs alpha >> tau and tau <= taui, both checked on seeded samples.
    """
    size = 1
    for s in spaces:
        size *= s.size
    if size > PRODUCT_CAP:
        raise ProductTooLargeError(f"Product has {size} points, cap is {PRODUCT_CAP}")

    rng = rng_for(seed, f"product:{alpha.label}:{tau.label}")
    k = len(spaces)
    tuples = [([random_ddf(rng) for _ in range(k)], [random_ddf(rng) for _ in range(k)])
              for _ in range(dominance_samples)]
    premise = check_dominance_nary(alpha, tau, tuples, tol)
    if not premise.passed:
        raise DominanceUnverifiedError(f"{alpha.label} >> {tau.label} failed on samples", witness=premise.witness)
    for s in spaces:
        if s.tau != tau:
            pairs = [(random_ddf(rng), random_ddf(rng)) for _ in range(dominance_samples)]
            order = check_delta_order(tau, s.tau, pairs, tol)
            if not order.passed:
                raise DominanceUnverifiedError(f"{tau.label} <= {s.tau.label} failed on samples", witness=order.witness)

    index = list(itertools.product(*(range(s.size) for s in spaces)))
    points = tuple("(" + ",".join(s.points[i] for s, i in zip(spaces, idx)) + ")" for idx in index)
    memo: Dict[Tuple[DiscreteDDF, ...], DiscreteDDF] = {}

    def combined(args: Tuple[DiscreteDDF, ...]) -> DiscreteDDF:
        value = memo.get(args)
        if value is None:
            value = alpha(list(args))
            memo[args] = value
        return value

    dist = tuple(
        tuple(combined(tuple(s.dist[i][j] for s, i, j in zip(spaces, p, q))) for q in index)
        for p in index
    )
    tag = "x".join(s.tag or "space" for s in spaces)
    return FinitePpMSpace(points, dist, tau, f"{alpha.label}[{tag}]")
