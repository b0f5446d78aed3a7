# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

import math

import numpy as np
import pytest

from src.errors import ConfigError, NegativeInputError, OutOfUnitIntervalError
from src.models import ScalarKind
from src.scalar_ops import (
    AM,
    D,
    K_1,
    K_2,
    K_INF,
    M,
    PI,
    TNORMS,
    W,
    LOp,
    ScalarOp,
    check_associative,
    check_dual_involution,
    check_L_axioms,
    check_pointwise_order,
    check_scalar_class,
    check_scalar_dominance,
    check_tnorm_axioms,
    custom_table,
    dual,
    eval_L,
    eval_scalar,
    k_alpha,
    ordinal_sum,
)

ORDINAL = ordinal_sum([(1, 4)], [[(1, 0), (2, 1), (3, 3)]])
L_SAMPLES = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 5.0, 8.25]


class TestScalarValues:

    @pytest.mark.parametrize("op, expected", [
        (M, 0.6),
        (PI, 0.42),
        (W, 0.3),
        (D, 0.0),
        (AM, 0.65),
    ])
    def test_worked_values(self, op, expected):
        assert op(0.7, 0.6) == pytest.approx(expected)

    def test_drastic_product_on_the_border(self):
        assert D(1.0, 0.4) == pytest.approx(0.4)
        assert D(0.4, 1.0) == pytest.approx(0.4)

    def test_dual_of_w(self):
        assert dual(W)(0.7, 0.6) == pytest.approx(1.0)

    def test_out_of_unit_interval(self):
        with pytest.raises(OutOfUnitIntervalError):
            M(1.5, 0.2)

    def test_left_continuity(self):
        assert all(op.left_continuous for op in (M, PI, W, AM))
        assert not D.left_continuous

    def test_descriptor_round_trip(self):
        assert ScalarOp.from_dict(dual(PI).to_dict()) == dual(PI)
        assert ScalarOp.from_dict({"kind": "tnorm-W"}) is not None

    def test_unknown_descriptor(self):
        with pytest.raises(ConfigError):
            ScalarOp.from_dict({"kind": "tnorm-Z"})

    def test_custom_table_interpolates(self):
        # bilinear table of the product on the 3x3 grid {0, .5, 1}
        op = custom_table([[0, 0, 0], [0, 0.25, 0.5], [0, 0.5, 1]], name="product-table")
        assert op.kind == ScalarKind.CUSTOM
        assert op(0.5, 0.5) == pytest.approx(0.25)
        assert op(1.0, 0.75) == pytest.approx(0.75)


class TestTNormLaws:

    @pytest.mark.parametrize("op", TNORMS, ids=lambda op: op.label)
    def test_tnorm_axioms(self, op):
        reports = check_tnorm_axioms(op, grid_step=0.1)
        failed = [r.name for r in reports if not r.passed]
        assert not failed

    def test_pointwise_order(self):
        assert check_pointwise_order([D, W, PI, M], grid_step=0.05).passed

    def test_dual_involution(self):
        assert check_dual_involution(W, grid_step=0.05).passed

    def test_arithmetic_mean_not_associative(self):
        report = check_associative(AM, grid_step=0.1)
        assert not report.passed
        assert report.witness is not None


class TestDominance:

    def test_am_dominates_w(self):
        assert check_scalar_dominance(AM, W, grid_step=0.05).passed

    def test_m_dominates_itself(self):
        assert check_scalar_dominance(M, M, grid_step=0.1).passed

    def test_w_does_not_dominate_am(self):
        report = check_scalar_dominance(W, AM, grid_step=0.1)
        assert not report.passed
        assert {"x", "y", "u", "v"} <= set(report.witness)
        assert report.witness["lhs"] < report.witness["rhs"]


class TestLOperations:

    @pytest.mark.parametrize("op, u, v, expected", [
        (K_1, 2, 3, 5),
        (K_2, 3, 4, 5),
        (K_INF, 2, 3, 3),
        (k_alpha(3), 0, 2, 2),
    ])
    def test_worked_values(self, op, u, v, expected):
        assert op(u, v) == pytest.approx(expected)

    @pytest.mark.parametrize("op", [K_1, K_2, k_alpha(3), K_INF, ORDINAL], ids=lambda op: op.label)
    def test_zero_is_neutral(self, op):
        us = np.array([0.0, 0.5, 2.0, 3.5, 10.0])
        np.testing.assert_allclose(op(us, 0.0), us)

    @pytest.mark.parametrize("op", [K_1, K_2, k_alpha(3), K_INF, ORDINAL], ids=lambda op: op.label)
    def test_infinity_absorbs(self, op):
        assert op(2.0, math.inf) == math.inf

    @pytest.mark.parametrize("op", [K_1, K_2, k_alpha(3), K_INF, ORDINAL], ids=lambda op: op.label)
    def test_l_axioms(self, op):
        failed = [r.name for r in check_L_axioms(op, L_SAMPLES) if not r.passed]
        assert not failed

    def test_ordinal_sum_inside_interval(self):
        assert ORDINAL(2.0, 2.0) == pytest.approx(2.5)

    def test_ordinal_sum_outside_interval_is_max(self):
        assert ORDINAL(0.5, 5.0) == pytest.approx(5.0)

    def test_residual_inverts_plus(self):
        assert K_1.residual(5.0, 2.0) == pytest.approx(3.0)
        assert K_INF.residual(5.0, 2.0) == pytest.approx(5.0)

    def test_special_alphas(self):
        assert k_alpha(1) == K_1
        assert k_alpha(math.inf) == K_INF

    def test_bad_alpha(self):
        with pytest.raises(ConfigError):
            k_alpha(0)

    def test_negative_input(self):
        with pytest.raises(NegativeInputError):
            K_1(-1.0, 2.0)

    def test_ordinal_sum_rejects_overlap(self):
        with pytest.raises(ConfigError):
            ordinal_sum([(1, 4), (3, 6)], [[(1, 0), (2, 1)], [(3, 0), (4, 1)]])

    def test_descriptor_round_trip(self):
        assert LOp.from_dict(ORDINAL.to_dict()) == ORDINAL
        assert LOp.from_dict(K_2.to_dict()) == K_2


class TestEvaluation:

    def test_eval_scalar_on_arrays(self):
        xs = np.array([0.0, 0.25, 1.0])
        np.testing.assert_allclose(eval_scalar(PI, xs, 0.5), [0.0, 0.125, 0.5])
        assert eval_scalar(W, 0.25, 0.5) == 0.0

    def test_eval_scalar_rejects_out_of_range(self):
        with pytest.raises(OutOfUnitIntervalError):
            eval_scalar(M, np.array([0.5, 1.5]), 0.5)

    def test_eval_l(self):
        assert eval_L(K_2, 3.0, 4.0) == pytest.approx(5.0)
        assert eval_L(K_INF, 3.0, 4.0) == 4.0
        assert eval_L(K_1, 2.0, math.inf) == math.inf

    def test_eval_l_rejects_negative(self):
        with pytest.raises(NegativeInputError):
            eval_L(K_1, np.array([1.0, -0.5]), 1.0)

    @pytest.mark.parametrize("op, t_norm, semi_copula", [
        (M, True, True),
        (PI, True, True),
        (W, True, True),
        (AM, False, False),
    ], ids=["M", "Pi", "W", "AM"])
    def test_scalar_class(self, op, t_norm, semi_copula):
        info = check_scalar_class(op, grid_step=0.1)
        assert info["aggregation"]
        assert info["t_norm"] is t_norm
        assert info["semi_copula"] is semi_copula
        assert info["commutative"]


class TestClosureOperations:

    def test_values(self, hamacher):
        assert hamacher(0.5, 0.5) == pytest.approx(1.0 / 3.0)
        assert hamacher(0.0, 0.0) == 0.0
        assert hamacher.label == "H0"
        assert hamacher.left_continuous

    def test_tnorm_axioms(self, hamacher):
        failed = [r.name for r in check_tnorm_axioms(hamacher, grid_step=0.1, tol=1e-9) if not r.passed]
        assert not failed

    def test_classified_as_tnorm(self, hamacher):
        assert check_scalar_class(hamacher, grid_step=0.1)["t_norm"]

    def test_self_dominance_and_bounds(self, hamacher):
        assert check_scalar_dominance(hamacher, hamacher, grid_step=0.1).passed
        grid = np.linspace(0.0, 1.0, 11)
        X, Y = np.meshgrid(grid, grid)
        assert np.all(hamacher(X, Y) >= PI(X, Y) - 1e-12)
        assert np.all(hamacher(X, Y) <= M(X, Y) + 1e-12)

    def test_closure_has_no_descriptor(self, hamacher):
        with pytest.raises(ConfigError):
            hamacher.to_dict()
