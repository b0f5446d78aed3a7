# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

import numpy as np
import pytest

from src.ddf_core import EPSILON_0, EPSILON_INF, ddf_leq, epsilon
from src.delta_ops import PI_M, tau_T
from src.errors import EmptySetError, NotProbBoundedError
from src.generators import random_metric, violating_metric
from src.hausdorff import (
    HausdorffContext,
    check_closed_forms,
    check_lambda_theorem,
    check_restriction_measure,
    dirac_context,
    enumerate_measurable,
    hausdorff_distance,
    is_prob_bounded,
    lambda_H,
    prob_bounded_sets,
    prob_diameter,
    prob_distance,
    prob_distance_point,
)
from src.models import CheckStatus
from src.ppm import FinitePpMSpace
from src.scalar_ops import K_INF, M

P, Q, BOTH = 0b01, 0b10, 0b11


@pytest.fixture
def metric_ctx(rng):
    return dirac_context(random_metric(rng, 4), tau_T(M))


class TestTwoPointSpace:

    def test_diameter(self, two_point_ctx):
        assert prob_diameter(two_point_ctx, P) == EPSILON_0
        assert prob_diameter(two_point_ctx, BOTH) == epsilon(1)

    def test_diameter_of_empty_set(self, two_point_ctx):
        with pytest.raises(EmptySetError):
            prob_diameter(two_point_ctx, 0)

    def test_directed_distance(self, two_point_ctx):
        assert prob_distance(two_point_ctx, P, Q) == epsilon(1)
        assert prob_distance_point(two_point_ctx, 0, Q) == epsilon(1)

    def test_empty_set_conventions(self, two_point_ctx):
        assert prob_distance(two_point_ctx, 0, BOTH) == EPSILON_0
        assert prob_distance(two_point_ctx, P, 0) == EPSILON_INF

    def test_hausdorff_distance(self, two_point_ctx):
        assert hausdorff_distance(two_point_ctx, P, Q) == epsilon(1)
        assert hausdorff_distance(two_point_ctx, BOTH, BOTH) == EPSILON_0

    def test_lambda(self, two_point_ctx):
        assert lambda_H(two_point_ctx, 0) == EPSILON_0
        assert lambda_H(two_point_ctx, P) == epsilon(1)

    def test_every_set_bounded(self, two_point_ctx):
        assert prob_bounded_sets(two_point_ctx) == [0, P, Q, BOTH]


class TestBoundedness:

    def test_unbounded_pair(self):
        far = ((EPSILON_0, EPSILON_INF), (EPSILON_INF, EPSILON_0))
        ctx = HausdorffContext(FinitePpMSpace(("p", "q"), far, tau_T(M)))
        assert is_prob_bounded(ctx, P)
        assert not is_prob_bounded(ctx, BOTH)
        with pytest.raises(NotProbBoundedError):
            hausdorff_distance(ctx, P, BOTH)


class TestLambdaTheorem:

    @pytest.mark.parametrize("L", [None, K_INF], ids=["metric", "ultrametric"])
    def test_holds_on_dirac_metric_spaces(self, rng, L):
        d = random_metric(rng, 5) if L is None else random_metric(rng, 5, L)
        reports = check_lambda_theorem(dirac_context(d, tau_T(M)))
        assert len(reports) == 3
        assert all(r.passed for r in reports)

    def test_single_point(self):
        ctx = dirac_context(np.zeros((1, 1)), tau_T(M))
        assert all(r.passed for r in check_lambda_theorem(ctx))

    def test_precondition_unmet(self, rng):
        ctx = dirac_context(violating_metric(rng, 4), tau_T(M))
        reports = check_lambda_theorem(ctx)
        assert len(reports) == 1
        assert reports[0].status == CheckStatus.PRECONDITION_UNMET

    def test_lambda_antimonotone(self, metric_ctx):
        lam = metric_ctx.lambda_table
        assert ddf_leq(lam[0b1111], lam[0b0011])
        assert ddf_leq(lam[0b0011], lam[0b0001])


class TestMeasurable:

    @pytest.mark.parametrize("tau", [tau_T(M), PI_M], ids=lambda op: op.label)
    def test_structure(self, metric_ctx, tau):
        report = enumerate_measurable(metric_ctx, tau)
        assert 0 in report.members
        assert metric_ctx.omega in report.members
        assert all(c.passed for c in report.checks)

    @pytest.mark.parametrize("tau", [tau_T(M), PI_M], ids=lambda op: op.label)
    def test_restriction_is_a_measure(self, metric_ctx, tau):
        assert all(r.passed for r in check_restriction_measure(metric_ctx, tau))

    def test_empty_omega_note(self, metric_ctx):
        notes = enumerate_measurable(metric_ctx, tau_T(M)).notes
        assert notes["H_empty_Omega_is_eps0"] is False
        assert notes["H_empty_Omega"] == EPSILON_INF.to_dict()

    def test_report_json(self, metric_ctx):
        data = enumerate_measurable(metric_ctx, PI_M).to_dict()
        assert data["size"] == len(data["members"])


class TestClosedForms:

    def test_closed_forms_match_oracle(self, metric_ctx):
        reports = check_closed_forms(metric_ctx, 0b0011, 0b0110, step=0.01)
        assert len(reports) == 3
        assert all(r.passed for r in reports)

    def test_empty_first_argument(self, metric_ctx):
        reports = check_closed_forms(metric_ctx, 0, 0b0110, step=0.01)
        assert [r.name for r in reports] == ["distance vs oracle", "Hausdorff distance vs oracle"]
        assert all(r.passed for r in reports)
