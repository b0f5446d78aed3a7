# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

import pytest

from src.ddf_core import EPSILON_0, ddf_eq, epsilon, make_ddf
from src.delta_ops import AGG_IDENTITY, AGG_MEAN, AGG_MIN, PI_M, pi_top, tau_LA, tau_T
from src.errors import (
    ConfigError,
    InputNotMeasureError,
    NotLDecomposableError,
    UniverseTooLargeError,
)
from src.measures import (
    FiniteSetFunction,
    FiniteUniverse,
    NumericSetFunction,
    aggregate,
    build_dirac,
    build_scaled_profile,
    check_arbitrary_unions,
    check_characterization,
    classify,
    transform,
)
from src.models import TransformKind
from src.scalar_ops import D, K_1, K_INF, M, PI, W

PROFILE = make_ddf([(1, 0.5), (2, 0.5)])


class TestUniverse:

    def test_subsets_and_complement(self):
        universe = FiniteUniverse.of_size(3)
        assert universe.size == 8
        assert universe.full == 0b111
        assert universe.complement(0b101) == 0b010
        assert universe.format(0b101) == "{a,c}"

    def test_cap(self):
        with pytest.raises(UniverseTooLargeError):
            FiniteUniverse.of_size(17)

    def test_gamma_of_empty_set_must_be_eps0(self):
        universe = FiniteUniverse.of_size(1)
        with pytest.raises(ConfigError):
            FiniteSetFunction(universe, (epsilon(1), epsilon(1)))

    def test_generator_form(self):
        gamma = FiniteSetFunction.from_dict({
            "universe": ["a", "b"],
            "generator": {"type": "dirac-additive", "weights": [1, 2]},
        })
        assert gamma[0b11] == epsilon(3)

    def test_table_form_round_trip(self, additive_gamma):
        assert FiniteSetFunction.from_dict(additive_gamma.to_dict()) == additive_gamma


class TestBuildDirac:

    def test_additive_values(self, additive_gamma):
        assert additive_gamma[0b101] == epsilon(5)
        assert additive_gamma[0b111] == epsilon(7)

    def test_zero_measure(self):
        gamma = build_dirac(NumericSetFunction.from_weights([0.0, 0.0]))
        assert all(F == EPSILON_0 for F in gamma.values)


class TestClassify:

    @pytest.mark.parametrize("T", [M, PI, W], ids=lambda t: t.label)
    def test_additive_dirac_is_tau_t_measure(self, additive_gamma, T):
        report = classify(additive_gamma, tau_T(T))
        assert report.is_measure
        assert report.is_submeasure
        assert report.is_antimonotone

    def test_additive_dirac_is_not_pi_m_measure(self, additive_gamma):
        report = classify(additive_gamma, PI_M)
        assert not report.is_measure
        witness = report.witnesses["measure"]
        assert witness["E_mask"] & witness["F_mask"] == 0

    def test_drastic_on_dirac(self, additive_gamma):
        assert classify(additive_gamma, tau_T(D)).is_measure

    @pytest.mark.parametrize("T", [M, PI, W], ids=lambda t: t.label)
    def test_maxitive_dirac_is_pi_top_measure(self, T):
        gamma = build_dirac(NumericSetFunction.max_of_weights([1.0, 2.0, 4.0]))
        assert classify(gamma, pi_top(T)).is_measure

    @pytest.mark.parametrize("tau", [tau_T(W), PI_M, tau_LA(K_INF, PI)], ids=lambda op: op.label)
    def test_constant_eps0_is_always_a_measure(self, tau):
        gamma = FiniteSetFunction.constant_eps0(FiniteUniverse.of_size(3))
        assert classify(gamma, tau).is_measure

    def test_sub_ring_scan(self, additive_gamma):
        ring = [0, 0b001, 0b110, 0b111]
        report = classify(additive_gamma, PI_M, ring=ring)
        assert not report.is_measure
        assert report.checked_pairs < classify(additive_gamma, PI_M).checked_pairs

    def test_arbitrary_unions(self, additive_gamma):
        assert check_arbitrary_unions(additive_gamma, tau_T(W)).passed


class TestCharacterization:

    def test_identity_holds_for_measure(self, additive_gamma):
        report = check_characterization(additive_gamma, tau_T(PI))
        assert report.passed
        assert report.details["agrees_with_classify"]

    def test_corrupted_value_breaks_identity(self, additive_gamma):
        corrupted = additive_gamma.replace(0b011, epsilon(9.5))
        report = check_characterization(corrupted, tau_T(PI))
        assert not report.passed
        assert report.witness is not None
        assert report.details["agrees_with_classify"]

    def test_empty_universe_is_vacuous(self):
        gamma = FiniteSetFunction.constant_eps0(FiniteUniverse.of_size(0))
        assert check_characterization(gamma, tau_T(M)).passed


class TestScaledProfile:

    def test_dirac_profile_reproduces_dirac(self, additive_gamma):
        m = NumericSetFunction.from_weights([1.0, 2.0, 4.0])
        gamma = build_scaled_profile(m, K_1, epsilon(1))
        assert all(ddf_eq(F, G) for F, G in zip(gamma.values, additive_gamma.values))

    def test_profile_is_tau_lm_measure(self):
        m = NumericSetFunction.from_weights([1.0, 2.0, 4.0])
        gamma = build_scaled_profile(m, K_1, PROFILE)
        assert classify(gamma, tau_LA(K_1, M)).is_measure

    def test_profile_is_not_tau_pi_measure(self):
        m = NumericSetFunction.from_weights([1.0, 2.0, 4.0])
        gamma = build_scaled_profile(m, K_1, PROFILE)
        assert not classify(gamma, tau_T(PI)).is_measure

    def test_rejects_non_decomposable_generator(self):
        m = NumericSetFunction.max_of_weights([1.0, 2.0])
        with pytest.raises(NotLDecomposableError):
            build_scaled_profile(m, K_1, PROFILE)


class TestConstructions:

    @pytest.mark.parametrize("c", [0.0, 0.5, 2.0])
    def test_scale(self, additive_gamma, c):
        result = transform(TransformKind.SCALE, [additive_gamma], tau_T(M), c=c)
        assert result.verdict
        assert result.gamma[0b011] == epsilon(3 * c)

    def test_combine_tau(self, additive_gamma):
        other = build_dirac(NumericSetFunction.from_weights([0.5, 0.25, 1.0]))
        result = transform(TransformKind.COMBINE_TAU, [additive_gamma, other], tau_T(PI))
        assert result.verdict
        assert ddf_eq(result.gamma[0b001], epsilon(1.5))

    def test_combine_theta(self, additive_gamma):
        other = build_dirac(NumericSetFunction.from_weights([3.0, 1.0, 2.0]))
        result = transform(TransformKind.COMBINE_THETA, [additive_gamma, other], tau_T(W), theta=PI_M)
        assert result.verdict
        assert result.premises[0].passed

    def test_rejects_non_measure_input(self, additive_gamma):
        with pytest.raises(InputNotMeasureError):
            transform(TransformKind.COMBINE_TAU, [additive_gamma, additive_gamma], PI_M)

    def test_scale_needs_constant(self, additive_gamma):
        with pytest.raises(ConfigError):
            transform(TransformKind.SCALE, [additive_gamma], tau_T(M))


class TestAggregate:

    def test_mean_of_w_submeasures(self, additive_gamma):
        tau = tau_LA(K_1, W)
        m = NumericSetFunction.from_weights([1.0, 2.0, 4.0])
        profile = build_scaled_profile(m, K_1, PROFILE)
        result = aggregate(AGG_MEAN, [additive_gamma, profile], tau, [tau, tau])
        assert result.error_code is None
        assert result.verdict

    def test_min_of_w_submeasures(self, additive_gamma):
        other = build_dirac(NumericSetFunction.from_weights([2.0, 0.5, 1.0]))
        result = aggregate(AGG_MIN, [additive_gamma, other], tau_T(W), [tau_T(W), tau_T(W)])
        assert result.verdict

    def test_identity_returns_input(self, additive_gamma):
        result = aggregate(AGG_IDENTITY, [additive_gamma], tau_T(PI), [tau_T(PI)])
        assert result.gamma == additive_gamma
        assert result.verdict

    def test_rejects_non_submeasure(self, additive_gamma):
        corrupted = additive_gamma.replace(0b111, epsilon(20))
        with pytest.raises(InputNotMeasureError):
            aggregate(AGG_MIN, [corrupted], PI_M, [PI_M])
