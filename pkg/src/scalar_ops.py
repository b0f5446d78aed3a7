# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Scalar operations: t-norms, aggregation functions, dual quasi-copulas on
[0,1] and the pseudo-additions L on [0, +inf], with grid-based property
checks.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BadGridError, NegativeInputError, OutOfUnitIntervalError, ConfigError
from .logger import logger
from .models import CheckReport, LKind, ScalarKind


UNIT_TOL = 1e-12
"""Allowance for float noise at the boundary of [0,1]"""

ONE_TOL = 1e-12
"""An argument within this of 1 counts as 1 (drastic product)"""

DEFAULT_2D_STEP = 0.01
DEFAULT_4D_STEP = 0.05


@dataclass(frozen=True)
class ScalarOp:
    """
    Evaluable descriptor of a binary operation on [0,1].

    Calling the descriptor evaluates it elementwise on scalars or numpy arrays.
    """

    kind: ScalarKind
    """Which operation"""

    of: Optional["ScalarOp"] = None
    """The quasi-copula Q for kind QUASICOPULA_DUAL"""

    table: Optional[Tuple[Tuple[float, ...], ...]] = None
    """Values on a uniform grid of [0,1]^2 for CUSTOM tables (bilinear interpolation)"""

    fn: Optional[Callable[[np.ndarray, np.ndarray], np.ndarray]] = field(default=None, compare=False)
    """Vectorised closure for CUSTOM operations"""

    name: str = ""
    """Display name for CUSTOM operations"""

    custom_left_continuous: bool = True
    """Left-continuity flag for CUSTOM operations"""

    @property
    def left_continuous(self) -> bool:
        if self.kind == ScalarKind.TNORM_D:
            return False
        if self.kind == ScalarKind.QUASICOPULA_DUAL:
            return self.of.left_continuous
        if self.kind == ScalarKind.CUSTOM:
            return self.custom_left_continuous
        return True

    @property
    def is_tnorm(self) -> bool:
        return self.kind in (ScalarKind.TNORM_M, ScalarKind.TNORM_PI, ScalarKind.TNORM_W, ScalarKind.TNORM_D)

    @property
    def label(self) -> str:
        if self.kind == ScalarKind.QUASICOPULA_DUAL:
            return f"dual({self.of.label})"
        if self.kind == ScalarKind.CUSTOM:
            return self.name or "custom"
        return _LABELS[self.kind]

    def __call__(self, x, y):
        return eval_scalar(self, x, y)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.kind == ScalarKind.QUASICOPULA_DUAL:
            data["of"] = self.of.to_dict()
        elif self.kind == ScalarKind.CUSTOM:
            if self.table is None:
                raise ConfigError(f"Custom scalar op '{self.label}' has no table form")
            data["name"] = self.name
            data["table"] = [list(row) for row in self.table]
            data["left_continuous"] = self.custom_left_continuous
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ScalarOp":
        try:
            kind = ScalarKind(data["kind"])
        except (KeyError, ValueError, TypeError):
            raise ConfigError(f"Unknown scalar op descriptor: {data!r}")
        if kind == ScalarKind.QUASICOPULA_DUAL:
            return dual(cls.from_dict(data["of"]))
        if kind == ScalarKind.CUSTOM:
            return custom_table(data["table"], name=data.get("name", "custom"),
                                left_continuous=data.get("left_continuous", True))
        return cls(kind=kind)


_LABELS = {
    ScalarKind.TNORM_M: "M",
    ScalarKind.TNORM_PI: "Pi",
    ScalarKind.TNORM_W: "W",
    ScalarKind.TNORM_D: "D",
    ScalarKind.AGG_AM: "AM",
}

M = ScalarOp(ScalarKind.TNORM_M)
PI = ScalarOp(ScalarKind.TNORM_PI)
W = ScalarOp(ScalarKind.TNORM_W)
D = ScalarOp(ScalarKind.TNORM_D)
AM = ScalarOp(ScalarKind.AGG_AM)

TNORMS = (M, PI, W, D)


def dual(q: ScalarOp) -> ScalarOp:
    """Dual of a quasi-copula: x + y - Q(x, y)."""
    return ScalarOp(ScalarKind.QUASICOPULA_DUAL, of=q)


def custom(fn: Callable, name: str, left_continuous: bool = True) -> ScalarOp:
    """
    Custom operation from a vectorised closure.

    Closures have no descriptor form: to_dict raises ConfigError.
    """
    return ScalarOp(ScalarKind.CUSTOM, fn=fn, name=name, custom_left_continuous=left_continuous)


def custom_table(table: Sequence[Sequence[float]], name: str = "custom", left_continuous: bool = True) -> ScalarOp:
    """Custom operation from its values on a uniform (n x n) grid of [0,1]^2."""
    arr = np.asarray(table, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 2:
        raise ConfigError(f"Custom table for '{name}' must be a square grid of size >= 2")
    if np.any(arr < -UNIT_TOL) or np.any(arr > 1 + UNIT_TOL):
        raise OutOfUnitIntervalError(f"Custom table for '{name}' has values outside [0,1]")
    frozen = tuple(tuple(float(v) for v in row) for row in arr)
    return ScalarOp(ScalarKind.CUSTOM, table=frozen, name=name, custom_left_continuous=left_continuous)


def _bilinear(table: Tuple[Tuple[float, ...], ...], x: np.ndarray, y: np.ndarray) -> np.ndarray:
    grid = np.asarray(table, dtype=np.float64)
    n = grid.shape[0] - 1
    fx, fy = x * n, y * n
    i = np.clip(np.floor(fx).astype(int), 0, n - 1)
    j = np.clip(np.floor(fy).astype(int), 0, n - 1)
    tx, ty = fx - i, fy - j
    return (grid[i, j] * (1 - tx) * (1 - ty) + grid[i + 1, j] * tx * (1 - ty)
            + grid[i, j + 1] * (1 - tx) * ty + grid[i + 1, j + 1] * tx * ty)


def _unit(values, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr < -UNIT_TOL) or np.any(arr > 1 + UNIT_TOL):
        raise OutOfUnitIntervalError(f"{what} must lie in [0,1]")
    return np.clip(arr, 0.0, 1.0)


def eval_scalar(op: ScalarOp, x, y):
    """
    Evaluate a scalar operation on [0,1]^2 (elementwise for arrays).
    """
    xs = _unit(x, "x")
    ys = _unit(y, "y")
    kind = op.kind

    if kind == ScalarKind.TNORM_M:
        out = np.minimum(xs, ys)
    elif kind == ScalarKind.TNORM_PI:
        out = xs * ys
    elif kind == ScalarKind.TNORM_W:
        out = np.maximum(xs + ys - 1.0, 0.0)
    elif kind == ScalarKind.TNORM_D:
        out = np.where(np.maximum(xs, ys) >= 1.0 - ONE_TOL, np.minimum(xs, ys), 0.0)
    elif kind == ScalarKind.AGG_AM:
        out = (xs + ys) / 2.0
    elif kind == ScalarKind.QUASICOPULA_DUAL:
        out = xs + ys - np.asarray(eval_scalar(op.of, xs, ys))
    elif op.fn is not None:
        out = np.asarray(op.fn(xs, ys), dtype=np.float64)
    else:
        out = _bilinear(op.table, xs, ys)

    out = np.clip(out, 0.0, 1.0)
    if out.ndim == 0:
        return float(out)
    return out


def unit_grid(step: float) -> np.ndarray:
    """The grid {0, step, ..., 1}; step must divide 1 (up to rounding)."""
    if not (0 < step <= 0.5):
        raise BadGridError(f"Grid step must lie in (0, 0.5], got {step!r}")
    n = int(round(1.0 / step))
    return np.linspace(0.0, 1.0, n + 1)


def check_scalar_dominance(f: ScalarOp, g: ScalarOp, grid_step: float = DEFAULT_4D_STEP) -> CheckReport:
    """
    f >> g on the 4-dimensional grid: f(g(x,y), g(u,v)) >= g(f(x,u), f(y,v)).

    The scan is chunked along x so memory stays at one 3-d slab.
    """
    grid = unit_grid(grid_step)
    Y, U, V = np.meshgrid(grid, grid, grid, indexing="ij")
    g_uv = g(U, V)
    min_margin = math.inf
    witness = None
    checked = 0

    for x in grid:
        X = np.full_like(Y, x)
        lhs = f(g(X, Y), g_uv)
        rhs = g(f(X, U), f(Y, V))
        margin = lhs - rhs
        checked += margin.size
        idx = np.unravel_index(np.argmin(margin), margin.shape)
        if margin[idx] < min_margin:
            min_margin = float(margin[idx])
            if min_margin < -UNIT_TOL and witness is None:
                witness = {
                    "x": float(x), "y": float(Y[idx]), "u": float(U[idx]), "v": float(V[idx]),
                    "lhs": float(lhs[idx]), "rhs": float(rhs[idx]),
                }

    passed = min_margin >= -UNIT_TOL
    return CheckReport(
        name=f"dominance {f.label} >> {g.label}",
        passed=passed,
        checked=checked,
        witness=witness,
        details={"min_margin": min_margin, "grid_step": grid_step},
    )


def check_tnorm_axioms(op: ScalarOp, grid_step: float = DEFAULT_4D_STEP, tol: float = UNIT_TOL) -> List[CheckReport]:
    """Commutativity, associativity, monotonicity and identity 1 on a grid."""
    grid = unit_grid(grid_step)
    X, Y = np.meshgrid(grid, grid, indexing="ij")
    Z = op(X, Y)
    reports = []

    diff = np.abs(Z - Z.T)
    reports.append(_grid_report(f"{op.label} commutative", diff, tol, (X, Y)))

    A, B, C = np.meshgrid(grid, grid, grid, indexing="ij")
    assoc = np.abs(op(op(A, B), C) - op(A, op(B, C)))
    reports.append(_grid_report(f"{op.label} associative", assoc, tol, (A, B, C)))

    drops = np.concatenate((
        np.maximum(Z[:-1, :] - Z[1:, :], 0.0).ravel(),
        np.maximum(Z[:, :-1] - Z[:, 1:], 0.0).ravel(),
    ))
    reports.append(CheckReport(
        name=f"{op.label} monotone",
        passed=bool(drops.max(initial=0.0) <= tol),
        checked=drops.size,
        details={"max_drop": float(drops.max(initial=0.0))},
    ))

    ident = np.abs(op(grid, np.ones_like(grid)) - grid)
    reports.append(_grid_report(f"{op.label} identity 1", ident, tol, (grid,)))
    return reports


def _grid_report(name: str, errors: np.ndarray, tol: float, axes) -> CheckReport:
    worst = int(np.argmax(errors))
    worst_err = float(errors.ravel()[worst])
    witness = None
    if worst_err > tol:
        witness = {"args": [float(a.ravel()[worst]) for a in axes], "error": worst_err}
    return CheckReport(name=name, passed=worst_err <= tol, checked=errors.size,
                       witness=witness, details={"max_error": worst_err})


def check_pointwise_order(ops: Sequence[ScalarOp], grid_step: float = DEFAULT_2D_STEP) -> CheckReport:
    """ops[0] <= ops[1] <= ... pointwise on the grid."""
    grid = unit_grid(grid_step)
    X, Y = np.meshgrid(grid, grid, indexing="ij")
    values = [op(X, Y) for op in ops]
    labels = " <= ".join(op.label for op in ops)
    for lower, upper, lo_op, up_op in zip(values, values[1:], ops, ops[1:]):
        gap = lower - upper
        if gap.max() > UNIT_TOL:
            idx = np.unravel_index(np.argmax(gap), gap.shape)
            return CheckReport(
                name=f"order {labels}", passed=False, checked=gap.size,
                witness={"lower": lo_op.label, "upper": up_op.label,
                         "x": float(X[idx]), "y": float(Y[idx]), "gap": float(gap[idx])},
            )
    return CheckReport(name=f"order {labels}", passed=True, checked=len(values) * X.size)


def check_dual_involution(q: ScalarOp, grid_step: float = DEFAULT_2D_STEP) -> CheckReport:
    """dual(dual(Q)) = Q on the grid."""
    grid = unit_grid(grid_step)
    X, Y = np.meshgrid(grid, grid, indexing="ij")
    err = np.abs(dual(dual(q))(X, Y) - q(X, Y))
    return _grid_report(f"dual(dual({q.label})) = {q.label}", err, UNIT_TOL, (X, Y))


def check_associative(op: ScalarOp, grid_step: float = DEFAULT_4D_STEP, tol: float = 1e-9) -> CheckReport:
    """Associativity probe usable for any descriptor, including duals of quasi-copulas."""
    grid = unit_grid(grid_step)
    A, B, C = np.meshgrid(grid, grid, grid, indexing="ij")
    err = np.abs(op(op(A, B), C) - op(A, op(B, C)))
    return _grid_report(f"{op.label} associative", err, tol, (A, B, C))


def check_scalar_class(op: ScalarOp, grid_step: float = DEFAULT_4D_STEP) -> Dict[str, Any]:
    """
    Classify a descriptor: aggregation function, semi-copula, t-norm.
    """
    grid = unit_grid(grid_step)
    X, Y = np.meshgrid(grid, grid, indexing="ij")
    Z = op(X, Y)
    monotone = bool(np.all(np.diff(Z, axis=0) >= -UNIT_TOL) and np.all(np.diff(Z, axis=1) >= -UNIT_TOL))
    boundary = abs(op(0.0, 0.0)) <= UNIT_TOL and abs(op(1.0, 1.0) - 1.0) <= UNIT_TOL
    aggregation = monotone and boundary
    neutral_one = bool(np.all(np.abs(op(grid, np.ones_like(grid)) - grid) <= UNIT_TOL)
                       and np.all(np.abs(op(np.ones_like(grid), grid) - grid) <= UNIT_TOL))
    commutative = bool(np.all(np.abs(Z - Z.T) <= UNIT_TOL))
    associative = check_associative(op, grid_step, tol=UNIT_TOL).passed
    return {
        "op": op.label,
        "aggregation": aggregation,
        "semi_copula": aggregation and neutral_one,
        "t_norm": aggregation and neutral_one and commutative and associative,
        "commutative": commutative,
        "associative": associative,
        "left_continuous": op.left_continuous,
    }


# ---------------------------------------------------------------------------
# Operations L on the extended non-negative reals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LOp:
    """
    Evaluable descriptor of a pseudo-addition L on [0, +inf].

    Ordinal sums carry, per open interval ]a_k, b_k[, an increasing
    bijection l_k: [a_k, b_k] -> [0, +inf] given as a knot table
    ((a_k, 0), (t_1, y_1), ...). Between knots the map is linear; after the
    last knot it grows to +inf at b_k (or linearly when b_k = +inf).
    """

    kind: LKind
    """Which operation"""

    alpha: float = 1.0
    """Exponent of K_alpha"""

    intervals: Tuple[Tuple[float, float], ...] = ()
    """Disjoint open intervals of an ordinal sum"""

    bijections: Tuple[Tuple[Tuple[float, float], ...], ...] = ()
    """Knot tables of the ordinal-sum bijections"""

    @property
    def label(self) -> str:
        if self.kind == LKind.PLUS or (self.kind == LKind.K_ALPHA and self.alpha == 1.0):
            return "K_1"
        if self.kind == LKind.K_ALPHA:
            return f"K_{self.alpha:g}"
        if self.kind == LKind.K_INFINITY:
            return "K_inf"
        return "ordinal-sum"

    @property
    def is_plus(self) -> bool:
        return self.kind == LKind.PLUS or (self.kind == LKind.K_ALPHA and self.alpha == 1.0)

    def __call__(self, u, v):
        return eval_L(self, u, v)

    def residual(self, x, u):
        return residual_L(self, x, u)

    def to_dict(self) -> Dict[str, Any]:
        if self.is_plus:
            return {"kind": LKind.K_ALPHA.value, "alpha": 1.0}
        if self.kind == LKind.K_ALPHA:
            return {"kind": self.kind.value, "alpha": self.alpha}
        if self.kind == LKind.K_INFINITY:
            return {"kind": self.kind.value}
        return {
            "kind": self.kind.value,
            "intervals": [list(iv) for iv in self.intervals],
            "bijections": [[list(k) for k in table] for table in self.bijections],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LOp":
        try:
            kind = LKind(data["kind"])
        except (KeyError, ValueError, TypeError):
            raise ConfigError(f"Unknown L descriptor: {data!r}")
        if kind == LKind.PLUS:
            return K_1
        if kind == LKind.K_ALPHA:
            return k_alpha(data.get("alpha", 1.0))
        if kind == LKind.K_INFINITY:
            return K_INF
        return ordinal_sum(data["intervals"], data["bijections"])


def k_alpha(alpha: float) -> LOp:
    alpha = float(alpha)
    if not alpha > 0 or math.isnan(alpha):
        raise ConfigError(f"K_alpha needs alpha > 0, got {alpha!r}")
    if math.isinf(alpha):
        return K_INF
    if alpha == 1.0:
        return K_1
    return LOp(LKind.K_ALPHA, alpha=alpha)


K_1 = LOp(LKind.PLUS)
K_2 = LOp(LKind.K_ALPHA, alpha=2.0)
K_INF = LOp(LKind.K_INFINITY)


def ordinal_sum(intervals: Sequence[Sequence[float]], bijections: Sequence[Sequence[Sequence[float]]]) -> LOp:
    """Validated ordinal-sum descriptor."""
    if len(intervals) != len(bijections):
        raise ConfigError("Ordinal sum needs one bijection table per interval")
    ivs = tuple(sorted((float(a), float(b)) for a, b in intervals))
    order = sorted(range(len(intervals)), key=lambda k: float(intervals[k][0]))
    tables = tuple(tuple((float(t), float(y)) for t, y in bijections[k]) for k in order)

    prev_end = 0.0
    for (a, b), table in zip(ivs, tables):
        if not (0 <= a < b) or a < prev_end:
            raise ConfigError(f"Ordinal-sum intervals must be disjoint subintervals of ]0,inf[, got {ivs}")
        prev_end = b
        if not table or table[0] != (a, 0.0):
            raise ConfigError(f"Bijection on ]{a},{b}[ must start at knot ({a}, 0)")
        ts = [t for t, _ in table]
        ys = [y for _, y in table]
        if any(t2 <= t1 for t1, t2 in zip(ts, ts[1:])) or any(y2 <= y1 for y1, y2 in zip(ys, ys[1:])):
            raise ConfigError(f"Bijection on ]{a},{b}[ must be strictly increasing")
        if ts[-1] >= b:
            raise ConfigError(f"Bijection knots on ]{a},{b}[ must stay below {b}")
    return LOp(LKind.ORDINAL_SUM, intervals=ivs, bijections=tables)


def _ell(table, b: float, t: np.ndarray) -> np.ndarray:
    ts = np.array([k[0] for k in table])
    ys = np.array([k[1] for k in table])
    inside = np.interp(t, ts, ys) if len(ts) > 1 else np.zeros_like(t)
    t_m, y_m = ts[-1], ys[-1]
    if math.isinf(b):
        slope = (ys[-1] - ys[-2]) / (ts[-1] - ts[-2]) if len(ts) > 1 else 1.0
        tail = y_m + slope * (t - t_m)
    else:
        with np.errstate(divide="ignore", invalid="ignore"):
            tail = np.where(t >= b, math.inf, y_m + (b - t_m) * (t - t_m) / (b - t))
    return np.where(t <= t_m, inside, tail)


def _ell_inv(table, b: float, y: np.ndarray) -> np.ndarray:
    ts = np.array([k[0] for k in table])
    ys = np.array([k[1] for k in table])
    inside = np.interp(y, ys, ts) if len(ts) > 1 else np.full_like(y, ts[0])
    t_m, y_m = ts[-1], ys[-1]
    if math.isinf(b):
        slope = (ys[-1] - ys[-2]) / (ts[-1] - ts[-2]) if len(ts) > 1 else 1.0
        tail = t_m + (y - y_m) / slope
    else:
        s = b - t_m
        with np.errstate(divide="ignore", invalid="ignore"):
            tail = np.where(np.isinf(y), b, (b * (y - y_m) + s * t_m) / ((y - y_m) + s))
    return np.where(y <= y_m, inside, tail)


def _nonneg(values, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise NegativeInputError(f"{what} must be >= 0 or +inf")
    return arr


def eval_L(op: LOp, u, v):
    """
    Evaluate L(u, v) on [0, +inf]^2; L(u, +inf) = +inf for every kind.
    """
    us = _nonneg(u, "u")
    vs = _nonneg(v, "v")
    us, vs = np.broadcast_arrays(us, vs)

    if op.is_plus:
        out = us + vs
    elif op.kind == LKind.K_INFINITY:
        out = np.maximum(us, vs)
    elif op.kind == LKind.K_ALPHA:
        if op.alpha == 2.0:
            out = np.hypot(us, vs)
        else:
            m = np.maximum(us, vs)
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = (np.where(m > 0, us / m, 0.0) ** op.alpha + np.where(m > 0, vs / m, 0.0) ** op.alpha)
                out = np.where(np.isinf(m), math.inf, m * ratio ** (1.0 / op.alpha))
    else:
        out = np.array(np.maximum(us, vs), dtype=np.float64)
        for (a, b), table in zip(op.intervals, op.bijections):
            mask = (us > a) & (us < b) & (vs > a) & (vs < b)
            if np.any(mask):
                s = _ell(table, b, us[mask]) + _ell(table, b, vs[mask])
                out[mask] = _ell_inv(table, b, s)

    out = np.where(np.isinf(us) | np.isinf(vs), math.inf, out)
    if out.ndim == 0:
        return float(out)
    return out


def residual_L(op: LOp, x, u):
    """
    The least v >= 0 with L(u, v) = x, for u <= x; 0 when u >= x.

    This parametrises the constraint curve L(u, v) = x by u.
    """
    xs = _nonneg(x, "x")
    us = _nonneg(u, "u")
    xs, us = np.broadcast_arrays(xs, us)
    below = us < xs

    if op.is_plus:
        with np.errstate(invalid="ignore"):
            out = np.where(below, xs - us, 0.0)
    elif op.kind == LKind.K_INFINITY:
        out = np.where(below, xs, 0.0)
    elif op.kind == LKind.K_ALPHA:
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(xs > 0, us / np.where(np.isinf(xs), 1.0, xs), 0.0)
            finite = xs * np.maximum(1.0 - ratio ** op.alpha, 0.0) ** (1.0 / op.alpha)
        out = np.where(below, np.where(np.isinf(xs), math.inf, finite), 0.0)
    else:
        out = np.where(below, xs, 0.0).astype(np.float64)
        for (a, b), table in zip(op.intervals, op.bijections):
            mask = below & (xs > a) & (xs < b) & (us > a)
            if np.any(mask):
                out[mask] = _ell_inv(table, b, _ell(table, b, xs[mask]) - _ell(table, b, us[mask]))

    if out.ndim == 0:
        return float(out)
    return out


def check_L_axioms(op: LOp, samples: Sequence[float], tol: float = 1e-9) -> List[CheckReport]:
    """
    Commutativity, associativity, neutrality of 0 and joint strict
    monotonicity on sampled points. Relative tolerance for large values.
    """
    s = np.asarray(samples, dtype=np.float64)
    U, V = np.meshgrid(s, s, indexing="ij")
    reports = []

    def rel(err, scale):
        return err / np.maximum(1.0, np.abs(scale))

    comm = rel(np.abs(op(U, V) - op(V, U)), op(U, V))
    reports.append(_grid_report(f"{op.label} commutative", comm, tol, (U, V)))

    A, B, C = np.meshgrid(s, s, s, indexing="ij")
    lhs = op(op(A, B), C)
    assoc = rel(np.abs(lhs - op(A, op(B, C))), lhs)
    reports.append(_grid_report(f"{op.label} associative", assoc, tol, (A, B, C)))

    neutral = rel(np.abs(op(s, np.zeros_like(s)) - s), s)
    reports.append(_grid_report(f"{op.label} neutral 0", neutral, tol, (s,)))

    srt = np.unique(s)
    lo_u, hi_u = np.meshgrid(srt[:-1], srt[1:], indexing="ij")
    ok = lo_u < hi_u
    u1, u2 = lo_u[ok], hi_u[ok]
    # pair every strictly ordered (u1 < u2) with every strictly ordered (v1 < v2)
    P1, Q1 = np.meshgrid(u1, u1, indexing="ij")
    P2, Q2 = np.meshgrid(u2, u2, indexing="ij")
    strict = op(P1, Q1) < op(P2, Q2)
    witness = None
    if not np.all(strict):
        k = int(np.argmin(strict))
        witness = {"u1": float(P1.ravel()[k]), "u2": float(P2.ravel()[k]),
                   "v1": float(Q1.ravel()[k]), "v2": float(Q2.ravel()[k])}
    reports.append(CheckReport(name=f"{op.label} jointly strictly increasing",
                               passed=bool(np.all(strict)), checked=strict.size, witness=witness))

    for report in reports:
        if not report.passed:
            logger.debug(f"L axiom failed: {report.name} witness={report.witness}")
    return reports
