# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Binary operations on distance distribution functions.

Exact algorithms for step DDFs:

- tau_{L,A}: a sup over the curve L(u, v) = x is attained just above a pair
  of atom locations, so the result jumps only at the candidates L(a_i, b_j)
  and its value above a candidate is the best level A(G+(a_i), H+(b_j))
  among pairs lying below.
- rho_{L,Q}: an inf over the curve is attained at an endpoint of a piece
  where both CDFs are constant, i.e. at an atom of G, at the residual of an
  atom of H, or at a curve endpoint.
- pi_top: pointwise on the union of breakpoints.
- convolution: the law of the independent sum.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .ddf_core import (
    DEFAULT_TOL,
    EPSILON_0,
    DiscreteDDF,
    ddf_eq,
    ddf_leq,
    ddf_sup_gap,
    evaluate,
    from_right_limits,
    make_ddf,
    pointwise,
    pointwise_min,
    scalar_multiply,
)
from .errors import ConfigError, NegativeInputError, NonLeftContinuousScalarError
from .logger import logger
from .models import AggregationKind, CheckReport, DeltaKind, EvalMethod
from .oracles import DEFAULT_ORACLE_STEP, inf_oracle, oracle_ddf, sup_oracle
from .scalar_ops import AM, K_1, K_INF, M, PI, W, LOp, ScalarOp, dual


@dataclass(frozen=True)
class DeltaOp:
    """
    Evaluable descriptor of a binary operation on DDFs.

    `A` holds the scalar operation of every kind that has one: T of tau_T,
    A of tau_LA, the t-norm of pi_top and the quasi-copula Q of rho_LQ.
    """

    kind: DeltaKind
    """Which operation"""

    A: Optional[ScalarOp] = None
    """Scalar operation on [0,1]"""

    L: Optional[LOp] = None
    """Operation on [0, +inf] (tau_LA, rho_LQ)"""

    @property
    def label(self) -> str:
        if self.kind == DeltaKind.TAU_T:
            return f"tau_T({self.A.label})"
        if self.kind == DeltaKind.TAU_LA:
            return f"tau_{{{self.L.label},{self.A.label}}}"
        if self.kind == DeltaKind.PI_TOP:
            return f"Pi_{self.A.label}"
        if self.kind == DeltaKind.RHO_LQ:
            return f"rho_{{{self.L.label},{self.A.label}}}"
        return "convolution"

    @property
    def effective_L(self) -> Optional[LOp]:
        """The L of the sup/inf formula (K_1 for tau_T, K_inf for pi_top)."""
        if self.kind == DeltaKind.TAU_T:
            return K_1
        if self.kind == DeltaKind.PI_TOP:
            return K_INF
        return self.L

    def __call__(self, G: DiscreteDDF, H: DiscreteDDF) -> DiscreteDDF:
        return apply(self, G, H)

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == DeltaKind.TAU_T:
            return {"kind": self.kind.value, "T": self.A.to_dict()}
        if self.kind == DeltaKind.TAU_LA:
            return {"kind": self.kind.value, "L": self.L.to_dict(), "A": self.A.to_dict()}
        if self.kind == DeltaKind.PI_TOP:
            return {"kind": self.kind.value, "top": self.A.to_dict()}
        if self.kind == DeltaKind.RHO_LQ:
            return {"kind": self.kind.value, "L": self.L.to_dict(), "Q": self.A.to_dict()}
        return {"kind": self.kind.value}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DeltaOp":
        try:
            kind = DeltaKind(data["kind"])
            if kind == DeltaKind.TAU_T:
                return tau_T(ScalarOp.from_dict(data["T"]))
            if kind == DeltaKind.TAU_LA:
                return tau_LA(LOp.from_dict(data["L"]), ScalarOp.from_dict(data["A"]))
            if kind == DeltaKind.PI_TOP:
                return pi_top(ScalarOp.from_dict(data["top"]))
            if kind == DeltaKind.RHO_LQ:
                return rho_LQ(LOp.from_dict(data["L"]), ScalarOp.from_dict(data["Q"]))
            return CONVOLUTION
        except (KeyError, ValueError, TypeError) as e:
            raise ConfigError(f"Invalid triangle-function descriptor {data!r}: {e}")


def tau_T(T: ScalarOp) -> DeltaOp:
    return DeltaOp(DeltaKind.TAU_T, A=T)


def tau_LA(L: LOp, A: ScalarOp) -> DeltaOp:
    return DeltaOp(DeltaKind.TAU_LA, A=A, L=L)


def pi_top(top: ScalarOp) -> DeltaOp:
    return DeltaOp(DeltaKind.PI_TOP, A=top)


def rho_LQ(L: LOp, Q: ScalarOp) -> DeltaOp:
    return DeltaOp(DeltaKind.RHO_LQ, A=Q, L=L)


CONVOLUTION = DeltaOp(DeltaKind.CONVOLUTION)

PI_M = pi_top(M)


# ---------------------------------------------------------------------------
# apply
# ---------------------------------------------------------------------------

def _levels(F: DiscreteDDF) -> Tuple[np.ndarray, np.ndarray]:
    """Atom locations with right limits, preceded by the virtual level 0 at 0."""
    return np.concatenate(([0.0], F.locations)), np.concatenate(([0.0], F.right_limits))


def _sup_corners(L: LOp, A: ScalarOp, G: DiscreteDDF, H: DiscreteDDF) -> DiscreteDDF:
    a, g = _levels(G)
    b, h = _levels(H)
    if L.is_plus:
        cand = np.add.outer(a, b)
    else:
        cand = np.asarray(L(a[:, None], b[None, :]))
    level = np.asarray(A(np.broadcast_to(g[:, None], cand.shape), np.broadcast_to(h[None, :], cand.shape)))
    return from_right_limits(cand.ravel(), level.ravel())


def _inf_corners(L: LOp, Q: ScalarOp, G: DiscreteDDF, H: DiscreteDDF) -> DiscreteDDF:
    q_dual = dual(Q)
    a, _ = _levels(G)
    b, _ = _levels(H)
    breaks = np.unique(np.concatenate((np.asarray(L(a[:, None], b[None, :])).ravel(), a, b)))
    breaks = breaks[np.isfinite(breaks)]
    # the value on (c_k, c_{k+1}] is the value at the midpoint; beyond the last break, at last + 1
    probes = np.append((breaks[:-1] + breaks[1:]) / 2.0, breaks[-1] + 1.0)

    X = probes[:, None]
    # u-side candidates: atoms of G below x, the curve endpoints u = 0 and u = x
    U = np.concatenate((np.broadcast_to(a[None, :], (probes.size, a.size)), X), axis=1)
    XU = np.broadcast_to(X, U.shape)
    u_val = np.asarray(q_dual(evaluate(G, U), evaluate(H, np.asarray(L.residual(XU, np.minimum(U, XU))))))
    u_val = np.where(U <= XU, u_val, np.inf)
    # v-side candidates: atoms of H below x and v = x
    V = np.concatenate((np.broadcast_to(b[None, :], (probes.size, b.size)), X), axis=1)
    XV = np.broadcast_to(X, V.shape)
    v_val = np.asarray(q_dual(evaluate(G, np.asarray(L.residual(XV, np.minimum(V, XV)))), evaluate(H, V)))
    v_val = np.where(V <= XV, v_val, np.inf)

    values = np.minimum(u_val.min(axis=1), v_val.min(axis=1))
    return from_right_limits(breaks, values)


def _convolve(G: DiscreteDDF, H: DiscreteDDF) -> DiscreteDDF:
    locs = np.add.outer(G.locations, H.locations).ravel()
    masses = np.multiply.outer(G.masses, H.masses).ravel()
    inf_mass = 1.0 - G.finite_mass * H.finite_mass
    return make_ddf(zip(locs, masses), max(inf_mass, 0.0))


def _is_dirac_pair(G: DiscreteDDF, H: DiscreteDDF) -> bool:
    return G.is_dirac and H.is_dirac


def oracle_x_max(G: DiscreteDDF, H: DiscreteDDF, L: LOp, step: float) -> float:
    a = float(G.locations.max()) if G.atoms else 0.0
    b = float(H.locations.max()) if H.atoms else 0.0
    top = float(L(a, b)) if L is not None else a + b
    return max(a, b, top) + 4.0 * step


def apply(
    op: DeltaOp,
    G: DiscreteDDF,
    H: DiscreteDDF,
    method: EvalMethod = EvalMethod.EXACT,
    step: float = DEFAULT_ORACLE_STEP,
) -> DiscreteDDF:
    """
    Apply a DDF operation.

    The exact corner path of tau_T / tau_LA requires a left-continuous
    scalar operation unless both arguments are {0,1}-valued; otherwise
    request EvalMethod.ORACLE.
    """
    kind = op.kind

    if kind == DeltaKind.CONVOLUTION:
        return _convolve(G, H)

    if kind == DeltaKind.PI_TOP and method == EvalMethod.EXACT:
        top = op.A
        return pointwise(lambda v: top(v[0], v[1]), (G, H))

    if method == EvalMethod.ORACLE:
        L = op.effective_L
        x_max = oracle_x_max(G, H, L, step)
        if kind == DeltaKind.RHO_LQ:
            q_dual = dual(op.A)
            return oracle_ddf(lambda xs: inf_oracle(L, q_dual, G, H, xs, step), x_max, step)
        return oracle_ddf(lambda xs: sup_oracle(L, op.A, G, H, xs, step), x_max, step)

    if kind == DeltaKind.RHO_LQ:
        return _inf_corners(op.L, op.A, G, H)

    if not op.A.left_continuous and not _is_dirac_pair(G, H):
        raise NonLeftContinuousScalarError(
            f"{op.label}: exact path needs a left-continuous scalar op for non-Dirac arguments; use the oracle path",
            witness={"G": G.to_dict(), "H": H.to_dict()},
        )
    return _sup_corners(op.effective_L, op.A, G, H)


class ApplyCache:
    """
    Memoised applications of one operation during a check.

    Keys are the (hashable, canonical) argument DDFs.
    """

    def __init__(self, op: DeltaOp, method: EvalMethod = EvalMethod.EXACT, step: float = DEFAULT_ORACLE_STEP):
        self.op = op
        self.method = method
        self.step = step
        self._results: Dict[Tuple[DiscreteDDF, DiscreteDDF], DiscreteDDF] = {}

    def __call__(self, G: DiscreteDDF, H: DiscreteDDF) -> DiscreteDDF:
        key = (G, H)
        result = self._results.get(key)
        if result is None:
            result = apply(self.op, G, H, self.method, self.step)
            self._results[key] = result
        return result


# ---------------------------------------------------------------------------
# n-ary pointwise aggregation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Aggregator:
    """Pointwise n-ary aggregation operator on DDFs (Pi_M, Pi_AM, Pi_Pi, identity)."""

    kind: AggregationKind

    @property
    def label(self) -> str:
        return {
            AggregationKind.MIN: "Pi_M",
            AggregationKind.MEAN: "Pi_AM",
            AggregationKind.PRODUCT: "Pi_Pi",
            AggregationKind.IDENTITY: "identity",
        }[self.kind]

    def __call__(self, ddfs: Sequence[DiscreteDDF]) -> DiscreteDDF:
        ddfs = list(ddfs)
        if not ddfs:
            raise ConfigError("Aggregation needs at least one argument")
        if self.kind == AggregationKind.IDENTITY:
            if len(ddfs) != 1:
                raise ConfigError("The identity aggregation takes exactly one argument")
            return ddfs[0]
        if len(ddfs) == 1:
            return ddfs[0]
        if self.kind == AggregationKind.MIN:
            return pointwise(lambda v: v.min(axis=0), ddfs)
        if self.kind == AggregationKind.MEAN:
            return pointwise(lambda v: v.mean(axis=0), ddfs)
        return pointwise(lambda v: v.prod(axis=0), ddfs)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Aggregator":
        try:
            return cls(AggregationKind(data["kind"]))
        except (KeyError, ValueError, TypeError):
            raise ConfigError(f"Unknown aggregation descriptor: {data!r}")


AGG_MIN = Aggregator(AggregationKind.MIN)
AGG_MEAN = Aggregator(AggregationKind.MEAN)
AGG_PRODUCT = Aggregator(AggregationKind.PRODUCT)
AGG_IDENTITY = Aggregator(AggregationKind.IDENTITY)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def _witness(**ddfs: DiscreteDDF) -> Dict[str, Any]:
    return {name: F.to_dict() for name, F in ddfs.items()}


def check_triangle_axioms(
    op: DeltaOp,
    samples: Sequence[DiscreteDDF],
    tol: float = DEFAULT_TOL,
    method: EvalMethod = EvalMethod.EXACT,
    step: float = DEFAULT_ORACLE_STEP,
) -> List[CheckReport]:
    """
    Commutativity, associativity, monotonicity and neutrality of eps_0 on
    all sample pairs and triples.

    Associativity compares the three groupings (GH)K, (GK)H and (HK)G of
    every multiset of three samples. Monotonicity pairs each sample with the
    pointwise minimum of itself and another sample, which lies below both.
    """
    samples = list(samples)
    cached = ApplyCache(op, method, step)
    loc_tol = tol if method == EvalMethod.EXACT else 4 * step
    reports = []

    checked = 0
    witness = None
    for G, H in itertools.combinations_with_replacement(samples, 2):
        checked += 1
        if witness is None and not ddf_eq(cached(G, H), cached(H, G), tol, loc_tol):
            witness = _witness(G=G, H=H)
    reports.append(CheckReport(f"{op.label} commutative", witness is None, checked, witness))

    checked = 0
    witness = None
    for G, H, K in itertools.combinations_with_replacement(samples, 3):
        checked += 1
        first = cached(cached(G, H), K)
        for other in (cached(cached(G, K), H), cached(cached(H, K), G)):
            if not ddf_eq(first, other, tol, loc_tol):
                witness = _witness(G=G, H=H, K=K)
                break
        if witness is not None:
            break
    reports.append(CheckReport(f"{op.label} associative", witness is None, checked, witness))

    checked = 0
    witness = None
    n = len(samples)
    for i, j in itertools.combinations(range(n), 2):
        lower = pointwise_min(samples[i], samples[j])
        H = samples[(i + j) % n]
        for upper in (samples[i], samples[j]):
            checked += 1
            if not ddf_leq(cached(lower, H), cached(upper, H), tol, loc_tol):
                witness = _witness(lower=lower, upper=upper, H=H)
                break
        if witness is not None:
            break
    reports.append(CheckReport(f"{op.label} monotone", witness is None, checked, witness))

    checked = 0
    witness = None
    for G in samples + [EPSILON_0]:
        checked += 1
        if not ddf_eq(cached(G, EPSILON_0), G, tol, loc_tol):
            witness = _witness(G=G, result=cached(G, EPSILON_0))
            break
    reports.append(CheckReport(f"{op.label} neutral eps_0", witness is None, checked, witness))

    for report in reports:
        if not report.passed:
            logger.debug(f"Triangle axiom failed: {report.name}")
    return reports


def check_dominance_delta(
    theta: DeltaOp,
    tau: DeltaOp,
    quadruples: Iterable[Sequence[DiscreteDDF]],
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """
    theta >> tau on sampled quadruples:
    theta(tau(G1, H1), tau(G2, H2)) >= tau(theta(G1, G2), theta(H1, H2)).
    """
    th = ApplyCache(theta)
    ta = ApplyCache(tau)
    checked = 0
    worst = 0.0
    witness = None
    for G1, H1, G2, H2 in quadruples:
        checked += 1
        lhs = th(ta(G1, H1), ta(G2, H2))
        rhs = ta(th(G1, G2), th(H1, H2))
        if not ddf_leq(rhs, lhs, tol, tol):
            gap = ddf_sup_gap(rhs, lhs)
            if witness is None or gap > worst:
                worst = gap
                witness = _witness(G1=G1, H1=H1, G2=G2, H2=H2)
    return CheckReport(
        name=f"{theta.label} >> {tau.label}",
        passed=witness is None,
        checked=checked,
        witness=witness,
        details={"worst_gap": worst},
        sampled=True,
    )


def check_dominance_nary(
    alpha: Aggregator,
    tau: DeltaOp,
    tuples: Iterable[Tuple[Sequence[DiscreteDDF], Sequence[DiscreteDDF]]],
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """
    alpha >> tau for an n-ary aggregation on sampled tuples (Gs, Hs):
    alpha(tau(G1, H1), ..., tau(Gn, Hn)) >= tau(alpha(Gs), alpha(Hs)).
    """
    ta = ApplyCache(tau)
    checked = 0
    witness = None
    for Gs, Hs in tuples:
        checked += 1
        lhs = alpha([ta(G, H) for G, H in zip(Gs, Hs)])
        rhs = ta(alpha(Gs), alpha(Hs))
        if not ddf_leq(rhs, lhs, tol, tol):
            witness = {"Gs": [G.to_dict() for G in Gs], "Hs": [H.to_dict() for H in Hs]}
            break
    return CheckReport(f"{alpha.label} >> {tau.label}", witness is None, checked, witness, sampled=True)


def check_delta_order(
    lower: DeltaOp,
    upper: DeltaOp,
    pairs: Iterable[Tuple[DiscreteDDF, DiscreteDDF]],
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """lower(G, H) <= upper(G, H) on sampled pairs."""
    checked = 0
    witness = None
    for G, H in pairs:
        checked += 1
        if not ddf_leq(apply(lower, G, H), apply(upper, G, H), tol, tol):
            witness = _witness(G=G, H=H)
            break
    return CheckReport(f"{lower.label} <= {upper.label}", witness is None, checked, witness, sampled=True)


def _check_constants(constants: Iterable[float]) -> List[float]:
    out = []
    for c in constants:
        c = float(c)
        if not (0 < c < math.inf):
            raise NegativeInputError(f"Scaling constants must be finite and positive, got {c!r}")
        out.append(c)
    return out


def check_distributive(
    op: DeltaOp,
    samples: Sequence[DiscreteDDF],
    constants: Iterable[float],
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """c (.) op(G, H) = op(c (.) G, c (.) H) for all constants and sample pairs."""
    constants = _check_constants(constants)
    cached = ApplyCache(op)
    checked = 0
    witness = None
    for c in constants:
        for G, H in itertools.combinations_with_replacement(samples, 2):
            checked += 1
            lhs = scalar_multiply(c, cached(G, H))
            rhs = cached(scalar_multiply(c, G), scalar_multiply(c, H))
            if not ddf_eq(lhs, rhs, tol, tol * max(1.0, c)):
                witness = {"c": c, **_witness(G=G, H=H)}
                break
        if witness is not None:
            break
    return CheckReport(f"{op.label} distributive", witness is None, checked, witness, sampled=True)


def check_scaling_law(
    L: LOp,
    samples: Sequence[DiscreteDDF],
    constants: Iterable[float],
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """tau_{L,M}(c1 (.) H, c2 (.) H) = L(c1, c2) (.) H for all constant pairs."""
    constants = _check_constants(constants)
    op = tau_LA(L, M)
    checked = 0
    witness = None
    for H in samples:
        for c1, c2 in itertools.combinations_with_replacement(constants, 2):
            checked += 1
            lhs = apply(op, scalar_multiply(c1, H), scalar_multiply(c2, H))
            rhs = scalar_multiply(float(L(c1, c2)), H)
            if not ddf_eq(lhs, rhs, tol, tol * max(1.0, c1 + c2)):
                witness = {"c1": c1, "c2": c2, **_witness(H=H)}
                break
        if witness is not None:
            break
    return CheckReport(f"tau_{{{L.label},M}} scaling law", witness is None, checked, witness, sampled=True)


def check_specialization(
    general: DeltaOp,
    special: DeltaOp,
    pairs: Iterable[Tuple[DiscreteDDF, DiscreteDDF]],
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """Two descriptors of the same operation agree on sampled pairs."""
    checked = 0
    witness = None
    for G, H in pairs:
        checked += 1
        if not ddf_eq(apply(general, G, H), apply(special, G, H), tol, tol):
            witness = _witness(G=G, H=H)
            break
    return CheckReport(f"{general.label} = {special.label}", witness is None, checked, witness)


TRIANGLE_FUNCTIONS = (
    tau_T(M),
    tau_T(PI),
    tau_T(W),
    PI_M,
    pi_top(PI),
    pi_top(W),
    CONVOLUTION,
)
"""The triangle functions checked by default"""

PI_AM = pi_top(AM)
