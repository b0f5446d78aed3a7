# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Brute-force grid oracles.

These evaluate the defining sup/inf formulas literally on a uniform grid,
independently of the corner-enumeration algorithms in delta_ops, so that
the two can be compared.
"""

import math
from typing import Callable, Optional

import numpy as np

from .ddf_core import DiscreteDDF, evaluate, from_right_limits
from .errors import BadGridError
from .models import CheckReport
from .scalar_ops import LOp, ScalarOp

DEFAULT_ORACLE_STEP = 1e-3

_ROW_CHUNK = 256


def _check_step(step: float) -> None:
    if not step > 0 or math.isinf(step):
        raise BadGridError(f"Oracle grid step must be positive and finite, got {step!r}")


def sup_oracle(L: LOp, A: ScalarOp, G: DiscreteDDF, H: DiscreteDDF, xs, step: float = DEFAULT_ORACLE_STEP) -> np.ndarray:
    """
    sup of A(G(u), H(v)) over grid pairs (u, v) with L(u, v) < x, for each x.

    For every grid u < x the largest grid v with L(u, v) < x is the one
    just below the residual of x at u. An empty pair set gives 0.
    """
    _check_step(step)
    xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    out = np.zeros(xs.shape)
    finite = np.isfinite(xs)
    out[~finite] = 1.0
    if not finite.any():
        return out

    x_top = float(xs[finite].max())
    us = step * np.arange(int(math.floor(x_top / step)) + 1, dtype=np.float64)
    g_u = evaluate(G, us)

    idx = np.flatnonzero(finite)
    for start in range(0, idx.size, _ROW_CHUNK):
        rows = idx[start:start + _ROW_CHUNK]
        X = xs[rows][:, None]
        U = np.broadcast_to(us[None, :], (rows.size, us.size))
        valid = U < X
        r = np.asarray(L.residual(np.broadcast_to(X, U.shape), U))
        k = np.ceil(r / step) - 1.0
        valid &= k >= 0
        v = np.where(valid, np.maximum(k, 0.0) * step, 0.0)
        vals = np.asarray(A(np.broadcast_to(g_u, U.shape), evaluate(H, v)))
        out[rows] = np.where(valid, vals, 0.0).max(axis=1, initial=0.0)
    return out


def inf_oracle(L: LOp, Q_dual: ScalarOp, G: DiscreteDDF, H: DiscreteDDF, xs, step: float = DEFAULT_ORACLE_STEP) -> np.ndarray:
    """
    inf of Q_dual(G(u), H(v)) over sampled points of the curve L(u, v) = x.

    The curve is sampled from both sides: u on the grid with v the residual,
    and v on the grid with u the residual, plus the endpoints u = x and v = x.
    """
    _check_step(step)
    xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    out = np.zeros(xs.shape)
    finite = np.isfinite(xs)
    out[~finite] = 1.0
    if not finite.any():
        return out

    x_top = float(xs[finite].max())
    grid = step * np.arange(int(math.floor(x_top / step)) + 1, dtype=np.float64)

    idx = np.flatnonzero(finite)
    for start in range(0, idx.size, _ROW_CHUNK):
        rows = idx[start:start + _ROW_CHUNK]
        x = xs[rows][:, None]
        T = np.concatenate((np.broadcast_to(grid[None, :], (rows.size, grid.size)), x), axis=1)
        X = np.broadcast_to(x, T.shape)
        valid = T <= X
        partner = np.asarray(L.residual(X, np.minimum(T, X)))
        u_side = np.asarray(Q_dual(evaluate(G, T), evaluate(H, partner)))
        v_side = np.asarray(Q_dual(evaluate(G, partner), evaluate(H, T)))
        both = np.minimum(u_side, v_side)
        out[rows] = np.where(valid, both, np.inf).min(axis=1)
    return np.clip(out, 0.0, 1.0)


def oracle_ddf(values_at: Callable[[np.ndarray], np.ndarray], x_max: float, step: float = DEFAULT_ORACLE_STEP) -> DiscreteDDF:
    """
    Step DDF from oracle values on the grid {step, 2 step, ..., x_max}.

    The value computed at a grid point x_k is taken on (x_{k-1}, x_k];
    mass missing at x_max goes to +inf.
    """
    _check_step(step)
    if not x_max > 0:
        raise BadGridError(f"Oracle grid end must be positive, got {x_max!r}")
    n = int(math.ceil(x_max / step))
    xs = step * np.arange(1, n + 1, dtype=np.float64)
    values = values_at(xs)
    return from_right_limits(xs - step, values)


def left_sup_oracle(fn: Callable[[np.ndarray], np.ndarray], ts, step: float = DEFAULT_ORACLE_STEP) -> np.ndarray:
    """
    Literal sup_{s < t} fn(s) over grid points s = t - k step, k >= 1.

    fn maps an array of s values to values; the sup over an empty set
    (t <= 0) is 0.
    """
    _check_step(step)
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    out = np.zeros(ts.shape)
    for i, t in enumerate(ts):
        if not t > 0:
            continue
        if math.isinf(t):
            out[i] = 1.0
            continue
        s = t - step * np.arange(1, int(math.ceil(t / step)) + 1, dtype=np.float64)
        s = s[s >= 0]
        if s.size:
            out[i] = float(np.max(fn(s)))
    return out


def check_band_agreement(
    name: str,
    exact: DiscreteDDF,
    xs,
    oracle_values,
    step: float,
    tol: float = 1e-9,
    band: Optional[float] = None,
) -> CheckReport:
    """
    exact(x - band) - tol <= oracle(x) <= exact(x + band) + tol at every x.

    band defaults to two grid steps, the discretisation error of the oracles.
    """
    band = 2.0 * step if band is None else band
    xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    oracle_values = np.asarray(oracle_values, dtype=np.float64)
    lower = np.asarray(evaluate(exact, np.maximum(xs - band, 0.0)))
    upper = np.asarray(evaluate(exact, xs + band))
    bad = (oracle_values < lower - tol) | (oracle_values > upper + tol)
    witness = None
    if bad.any():
        k = int(np.argmax(bad))
        witness = {
            "x": float(xs[k]),
            "oracle": float(oracle_values[k]),
            "exact_lower": float(lower[k]),
            "exact_upper": float(upper[k]),
        }
    return CheckReport(name=name, passed=not bad.any(), checked=int(xs.size), witness=witness,
                       details={"band": band})
