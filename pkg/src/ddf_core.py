# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Distance distribution functions as finitely supported step functions.

A DiscreteDDF stores atoms (location, mass) on [0, +inf) plus a separate
mass at +inf. Its CDF is F(x) = sum of masses strictly below x, which is
left-continuous, non-decreasing, F(0) = 0 and F(+inf) = 1.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .errors import BadGridError, NegativeLocationError, NegativeMassError, NonCanonicalError, NonNormalizedError


INF = math.inf

NORMALIZATION_TOL = 1e-12
"""Allowed deviation of the total mass from 1"""

DEFAULT_TOL = 1e-9
"""Default comparison tolerance (values and locations)"""

MASS_EPS = 1e-15
"""Masses at or below this are float noise and are not stored"""

Number = Union[int, float]


@dataclass(frozen=True)
class DiscreteDDF:
    """
    Finitely supported distance distribution function.

    Instances are canonical: locations strictly increasing, masses positive,
    total mass 1. Build them with make_ddf(), epsilon() or from_right_limits();
    the constructor only checks the invariants.
    """

    atoms: Tuple[Tuple[float, float], ...]
    """Sorted (location, mass) pairs with finite non-negative locations"""

    inf_mass: float = 0.0
    """Mass at the point +inf"""

    def __post_init__(self):
        previous = -1.0
        for loc, mass in self.atoms:
            if not 0.0 <= loc < INF:
                raise NegativeLocationError(f"Atom location must be finite and >= 0, got {loc!r}")
            if not mass > 0.0:
                raise NegativeMassError(f"Atom mass must be positive, got {mass!r}")
            if loc <= previous:
                raise NonCanonicalError(f"Atom locations must be strictly increasing, got {loc!r} after {previous!r}")
            previous = loc
        if not 0.0 <= self.inf_mass <= 1.0 + NORMALIZATION_TOL:
            raise NegativeMassError(f"Mass at infinity must lie in [0, 1], got {self.inf_mass!r}")
        total = sum(m for _, m in self.atoms) + self.inf_mass
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NonNormalizedError(f"DDF masses sum to {total!r}, expected 1")

    @cached_property
    def locations(self) -> np.ndarray:
        return np.fromiter((a for a, _ in self.atoms), dtype=np.float64, count=len(self.atoms))

    @cached_property
    def masses(self) -> np.ndarray:
        return np.fromiter((m for _, m in self.atoms), dtype=np.float64, count=len(self.atoms))

    @cached_property
    def right_limits(self) -> np.ndarray:
        """F(a+) at each atom location a, i.e. the mass at or below a."""
        return np.cumsum(self.masses)

    @property
    def is_dirac(self) -> bool:
        """True for {0,1}-valued CDFs: a single unit atom or all mass at +inf."""
        return (len(self.atoms) == 1 and self.inf_mass <= NORMALIZATION_TOL) or \
            (not self.atoms and self.inf_mass >= 1.0 - NORMALIZATION_TOL)

    @property
    def finite_mass(self) -> float:
        return 1.0 - self.inf_mass

    def __call__(self, x):
        return evaluate(self, x)

    def to_dict(self) -> Dict[str, Any]:
        """Canonical JSON form."""
        return {
            "atoms": [[float(a), float(m)] for a, m in self.atoms],
            "inf_mass": float(self.inf_mass),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DiscreteDDF":
        return make_ddf([tuple(p) for p in data.get("atoms", [])], data.get("inf_mass", 0.0))

    def __repr__(self) -> str:
        body = ", ".join(f"({a:g}, {m:g})" for a, m in self.atoms)
        tail = f", inf={self.inf_mass:g}" if self.inf_mass else ""
        return f"DDF[{body}{tail}]"


def make_ddf(atoms: Iterable[Tuple[Number, Number]], mass_at_infinity: Number = 0.0) -> DiscreteDDF:
    """
    Build a canonical DiscreteDDF.

    Atoms are sorted, atoms at the same location are merged, zero masses are
    dropped and an atom placed at +inf is moved to the mass at infinity.
    The result is rescaled to total mass exactly 1 after validation.
    """
    merged: Dict[float, float] = {}
    inf_mass = float(mass_at_infinity)
    if inf_mass < 0 or math.isnan(inf_mass):
        raise NegativeMassError(f"Mass at infinity must be non-negative, got {mass_at_infinity!r}")

    for loc, mass in atoms:
        loc = float(loc)
        mass = float(mass)
        if math.isnan(loc) or loc < 0:
            raise NegativeLocationError(f"Atom location must be >= 0, got {loc!r}")
        if math.isnan(mass) or mass < 0:
            raise NegativeMassError(f"Atom mass must be >= 0, got {mass!r}")
        if loc == INF:
            inf_mass += mass
            continue
        # +0.0 and -0.0 share one key
        merged[loc + 0.0] = merged.get(loc + 0.0, 0.0) + mass

    total = sum(merged.values()) + inf_mass
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise NonNormalizedError(f"Masses sum to {total!r}, expected 1 within {NORMALIZATION_TOL}")

    canonical = tuple(
        (loc, mass / total) for loc, mass in sorted(merged.items()) if mass / total > MASS_EPS
    )
    return DiscreteDDF(atoms=canonical, inf_mass=inf_mass / total)


def epsilon(a: Number) -> DiscreteDDF:
    """The Dirac DDF eps_a: 0 for x <= a, 1 for x > a."""
    a = float(a)
    if math.isnan(a) or a < 0:
        raise NegativeLocationError(f"epsilon location must be >= 0, got {a!r}")
    if a == INF:
        return DiscreteDDF(atoms=(), inf_mass=1.0)
    return DiscreteDDF(atoms=((a + 0.0, 1.0),), inf_mass=0.0)


EPSILON_0 = epsilon(0.0)
"""Neutral element of every triangle function"""

EPSILON_INF = epsilon(INF)
"""All mass at +inf (the defective 1 - eps_0 of the distance conventions)"""


def evaluate(F: DiscreteDDF, x):
    """
    F(x) = sum of masses strictly below x; F(+inf) = 1.

    Accepts a scalar or a numpy array of extended non-negative reals.
    """
    xs = np.asarray(x, dtype=np.float64)
    if F.atoms:
        idx = np.searchsorted(F.locations, xs, side="left")
        cum = np.concatenate(([0.0], F.right_limits))
        values = cum[idx]
    else:
        values = np.zeros_like(xs)
    values = np.where(np.isposinf(xs), 1.0, values)
    values = np.clip(values, 0.0, 1.0)
    if values.ndim == 0:
        return float(values)
    return values


def right_limit(F: DiscreteDDF, x):
    """F(x+): the mass at or below x."""
    xs = np.asarray(x, dtype=np.float64)
    if F.atoms:
        idx = np.searchsorted(F.locations, xs, side="right")
        values = np.concatenate(([0.0], F.right_limits))[idx]
    else:
        values = np.zeros_like(xs)
    values = np.where(np.isposinf(xs), 1.0, np.clip(values, 0.0, 1.0))
    if values.ndim == 0:
        return float(values)
    return values


def from_right_limits(locations: Sequence[float], values: Sequence[float]) -> DiscreteDDF:
    """
    Build a DDF from a step CDF given by its breakpoints.

    values[k] is the CDF on (locations[k], locations[k+1]], i.e. the right
    limit at locations[k]; the CDF is 0 on [0, locations[0]] and whatever
    is missing from 1 after the last breakpoint sits at +inf. Values are
    clipped to [0,1] and made non-decreasing.
    """
    locs = np.asarray(locations, dtype=np.float64)
    vals = np.clip(np.asarray(values, dtype=np.float64), 0.0, 1.0)
    if locs.size == 0:
        return EPSILON_INF
    finite = np.isfinite(locs)
    locs, vals = locs[finite], vals[finite]
    if locs.size == 0:
        return EPSILON_INF
    order = np.argsort(locs, kind="stable")
    locs, vals = locs[order], np.maximum.accumulate(vals[order])
    # one breakpoint per location: the last of a run carries the largest value
    last = np.append(locs[1:] != locs[:-1], True)
    locs, vals = locs[last], vals[last]
    masses = np.diff(np.concatenate(([0.0], vals)))
    keep = masses > MASS_EPS
    if not keep.any():
        return EPSILON_INF
    atoms = tuple((float(a) + 0.0, float(m)) for a, m in zip(locs[keep], masses[keep]))
    kept = float(masses[keep].sum())
    if 1.0 - float(vals[-1]) <= NORMALIZATION_TOL:
        # float noise goes onto the last atom, not to infinity
        last_loc, last_mass = atoms[-1]
        atoms = atoms[:-1] + ((last_loc, last_mass + (1.0 - kept)),)
        return DiscreteDDF(atoms=atoms, inf_mass=0.0)
    return DiscreteDDF(atoms=atoms, inf_mass=1.0 - kept)


def scalar_multiply(c: Number, G: DiscreteDDF) -> DiscreteDDF:
    """
    c (.) G: the DDF x -> G(x / c); eps_0 for c in {0, +inf}.
    """
    c = float(c)
    if c < 0 or math.isnan(c):
        raise NegativeLocationError(f"Scaling constant must be >= 0, got {c!r}")
    if c == 0.0 or c == INF:
        return EPSILON_0
    if c == 1.0:
        return G
    atoms = tuple((a * c, m) for a, m in G.atoms)
    # overflow to inf or underflow onto a neighbour needs re-canonicalising
    if any(a == INF for a, _ in atoms) or any(b <= a for (a, _), (b, _) in zip(atoms, atoms[1:])):
        return make_ddf(atoms, G.inf_mass)
    return DiscreteDDF(atoms=atoms, inf_mass=G.inf_mass)


def _test_points(G: DiscreteDDF, H: DiscreteDDF, shift: float) -> np.ndarray:
    pts = np.concatenate((G.locations, np.maximum(H.locations - shift, 0.0)))
    beyond = (float(pts.max()) if pts.size else 0.0) + 1.0 + shift
    return np.append(pts, beyond)


def ddf_leq(G: DiscreteDDF, H: DiscreteDDF, tol: float = DEFAULT_TOL, loc_tol: float = None) -> bool:
    """
    Pointwise order G <= H.

    Checks G(x) <= H(x + loc_tol) + tol at every atom location of G, at every
    shifted atom location of H and beyond the last atom, which covers every
    step of both functions. loc_tol defaults to tol; it absorbs float noise
    in atom locations produced by different evaluation paths.
    """
    shift = tol if loc_tol is None else loc_tol
    xs = _test_points(G, H, shift)
    return bool(np.all(evaluate(G, xs) <= evaluate(H, xs + shift) + tol))


def ddf_eq(G: DiscreteDDF, H: DiscreteDDF, tol: float = DEFAULT_TOL, loc_tol: float = None) -> bool:
    """Equality within tolerance: G <= H and H <= G."""
    if G == H:
        return True
    return ddf_leq(G, H, tol, loc_tol) and ddf_leq(H, G, tol, loc_tol)


def ddf_sup_gap(G: DiscreteDDF, H: DiscreteDDF) -> float:
    """max_x (G(x) - H(x)) over the joint breakpoints; positive means G <= H fails."""
    xs = _test_points(G, H, 0.0)
    return float(np.max(evaluate(G, xs) - evaluate(H, xs)))


def grid_sample(F: DiscreteDDF, x_max: float, step: float) -> List[Tuple[float, float]]:
    """
    Tabulate F on {0, step, 2 step, ..., x_max}.
    """
    if not step > 0:
        raise BadGridError(f"Grid step must be positive, got {step!r}")
    if not x_max > 0:
        raise BadGridError(f"Grid end must be positive, got {x_max!r}")
    n = int(math.floor(x_max / step + 1e-9))
    xs = step * np.arange(n + 1, dtype=np.float64)
    if x_max - xs[-1] > 1e-9 * step:
        xs = np.concatenate((xs, [x_max]))
    values = evaluate(F, xs)
    return [(float(x), float(v)) for x, v in zip(xs, values)]


def union_locations(ddfs: Iterable[DiscreteDDF], include_zero: bool = False) -> np.ndarray:
    """Sorted union of the atom locations of several DDFs."""
    arrays = [F.locations for F in ddfs if F.atoms]
    if include_zero:
        arrays.append(np.zeros(1))
    if not arrays:
        return np.zeros(0)
    return np.unique(np.concatenate(arrays))


def pointwise(fn: Callable[[np.ndarray], np.ndarray], ddfs: Sequence[DiscreteDDF]) -> DiscreteDDF:
    """
    Combine DDFs pointwise: x -> fn(F_1(x), ..., F_n(x)).

    fn receives a (n, m) array of right limits at the m joint breakpoints and
    returns m values. fn must be non-decreasing and map zeros to zero so the
    result is again a DDF.
    """
    grid = union_locations(ddfs)
    if grid.size == 0:
        return EPSILON_INF
    values = np.vstack([right_limit(F, grid) for F in ddfs])
    return from_right_limits(grid, fn(values))


def pointwise_min(G: DiscreteDDF, H: DiscreteDDF) -> DiscreteDDF:
    return pointwise(lambda v: v.min(axis=0), (G, H))


def ddf_to_json(F: DiscreteDDF) -> Dict[str, Any]:
    return F.to_dict()


def ddf_from_json(data: Dict[str, Any]) -> DiscreteDDF:
    return DiscreteDDF.from_dict(data)
