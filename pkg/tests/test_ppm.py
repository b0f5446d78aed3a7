# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

import pytest

from src.ddf_core import EPSILON_0, epsilon
from src.delta_ops import AGG_IDENTITY, AGG_MEAN, AGG_MIN, PI_M, tau_T
from src.errors import InputNotAntimonotoneSubmeasureError, PointSetMismatchError, ProductTooLargeError
from src.measures import FiniteSetFunction, FiniteUniverse, NumericSetFunction, build_dirac
from src.ppm import (
    EXHAUSTIVE_LIMIT,
    FinitePpMSpace,
    PseudoMetricFamily,
    check_members,
    check_menger_inequality,
    check_ppm_axioms,
    check_semigroup,
    check_semilattice,
    check_translation_invariance,
    from_submeasure,
    nu_like,
    oplus,
    preceq,
    product_space,
    same_metric,
)
from src.scalar_ops import K_1, PI, W


def _dirac_space(weights, tau, tag):
    return from_submeasure(build_dirac(NumericSetFunction.from_weights(weights)), tau, tag=tag)


@pytest.fixture
def rho(additive_gamma):
    return from_submeasure(additive_gamma, tau_T(PI), tag="rho")


class TestFromSubmeasure:

    def test_distance_is_value_of_symmetric_difference(self, rho):
        assert rho[0b001, 0b100] == epsilon(5)
        assert rho[0b011, 0b011] == EPSILON_0
        assert rho.size == 8

    def test_ppm_axioms_exhaustive(self, rho):
        reports = check_ppm_axioms(rho)
        assert all(r.passed for r in reports)
        assert reports[2].checked == 8 ** 3
        assert not reports[2].sampled

    def test_translation_invariance(self, rho):
        assert check_translation_invariance(rho).passed

    def test_menger_inequality(self, rho):
        assert check_menger_inequality(rho, K_1, PI).passed

    def test_constant_eps0_gives_nu(self):
        gamma = FiniteSetFunction.constant_eps0(FiniteUniverse.of_size(2))
        space = from_submeasure(gamma, tau_T(W))
        assert all(F == EPSILON_0 for row in space.dist for F in row)

    def test_rejects_non_antimonotone(self, additive_gamma):
        broken = additive_gamma.replace(0b111, EPSILON_0)
        with pytest.raises(InputNotAntimonotoneSubmeasureError):
            from_submeasure(broken, tau_T(PI))

    def test_broken_triangle_is_detected(self, rho):
        n = rho.size
        dist = [list(row) for row in rho.dist]
        dist[0][n - 1] = dist[n - 1][0] = epsilon(1000)
        broken = rho.with_dist(tuple(tuple(row) for row in dist), "broken")
        triangle = check_ppm_axioms(broken)[2]
        assert not triangle.passed
        assert set(triangle.witness) == {"p", "q", "r"}

    def test_json_form(self, rho):
        again = FinitePpMSpace.from_dict(rho.to_dict())
        assert again.dist == rho.dist
        assert again.tau == rho.tau


class TestOplus:

    def test_nu_is_neutral(self, rho):
        assert same_metric(oplus(PI_M, nu_like(rho), rho, dominance_samples=30), rho)

    def test_idempotent(self, rho):
        assert same_metric(oplus(PI_M, rho, rho, dominance_samples=30), rho)

    def test_sum_of_generated_spaces_is_ppm(self):
        a = _dirac_space([1.0, 2.0], tau_T(W), "a")
        b = _dirac_space([3.0, 0.5], tau_T(W), "b")
        combined = oplus(PI_M, a, b, dominance_samples=30)
        assert all(r.passed for r in check_ppm_axioms(combined))

    def test_point_set_mismatch(self, rho):
        other = _dirac_space([1.0, 2.0], tau_T(PI), "small")
        with pytest.raises(PointSetMismatchError):
            oplus(PI_M, rho, other)


class TestOrder:

    def test_nu_below_everything(self, rho):
        assert preceq(nu_like(rho), rho)

    def test_reflexive(self, rho):
        assert preceq(rho, rho)

    def test_smaller_weights_are_below(self):
        small = _dirac_space([1.0, 1.0], tau_T(W), "small")
        large = _dirac_space([2.0, 3.0], tau_T(W), "large")
        assert preceq(small, large)
        assert not preceq(large, small)


class TestFamilies:

    @pytest.fixture
    def family(self):
        tau = tau_T(W)
        members = [
            _dirac_space([1.0, 2.0], tau, "a"),
            _dirac_space([2.0, 0.5], tau, "b"),
            _dirac_space([0.5, 3.0], tau, "c"),
        ]
        return PseudoMetricFamily(members, tau)

    def test_members_are_pseudo_metrics(self, family):
        assert check_members(family).passed

    def test_semilattice(self, family):
        failed = [r.name for r in check_semilattice(family, PI_M, dominance_samples=30) if not r.passed]
        assert not failed

    def test_semigroup(self, family):
        failed = [r.name for r in check_semigroup(family, PI_M, dominance_samples=30) if not r.passed]
        assert not failed

    def test_corrupted_member_is_detected(self, family):
        first = family.members[0]
        dist = [list(row) for row in first.dist]
        dist[0][3] = dist[3][0] = epsilon(100)
        corrupted = first.with_dist(tuple(tuple(row) for row in dist), "corrupted")
        assert not check_members(PseudoMetricFamily([corrupted] + family.members[1:], family.tau)).passed

    def test_family_with_nu(self, rho):
        family = PseudoMetricFamily([nu_like(rho), rho], rho.tau)
        assert all(r.passed for r in check_semilattice(family, PI_M, dominance_samples=30))


class TestProducts:

    def test_two_factor_product(self):
        a = _dirac_space([1.0, 2.0], tau_T(W), "a")
        b = _dirac_space([0.5, 1.5], tau_T(W), "b")
        for alpha in (AGG_MIN, AGG_MEAN):
            product = product_space([a, b], alpha, tau_T(W), dominance_samples=30)
            assert product.size == 16
            assert all(r.passed for r in check_ppm_axioms(product))

    def test_single_factor_identity_is_a_copy(self):
        a = _dirac_space([1.0, 2.0], tau_T(W), "a")
        product = product_space([a], AGG_IDENTITY, tau_T(W), dominance_samples=10)
        assert product.dist == a.dist

    def test_single_point_factors(self):
        gamma = FiniteSetFunction.constant_eps0(FiniteUniverse.of_size(0))
        point = from_submeasure(gamma, tau_T(W), tag="point")
        product = product_space([point, point], AGG_MIN, tau_T(W), dominance_samples=10)
        assert product.size == 1
        assert product[0, 0] == EPSILON_0

    def test_large_product_samples_triples(self):
        tau = tau_T(W)
        factors = [
            _dirac_space([1.0, 2.0], tau, "a"),
            _dirac_space([0.5, 1.5], tau, "b"),
            _dirac_space([1.0, 0.5, 2.0], tau, "c"),
        ]
        product = product_space(factors, AGG_MIN, tau, dominance_samples=10)
        assert product.size == 128 > EXHAUSTIVE_LIMIT
        triangle = check_ppm_axioms(product, sample_count=500)[2]
        assert triangle.sampled
        assert triangle.checked == 500
        assert triangle.passed
        again = check_ppm_axioms(product, sample_count=500)[2]
        assert again.to_dict() == triangle.to_dict()

    def test_too_large(self):
        big = nu_like(from_submeasure(FiniteSetFunction.constant_eps0(FiniteUniverse.of_size(6)), tau_T(W)))
        with pytest.raises(ProductTooLargeError):
            product_space([big, big, big], AGG_MIN, tau_T(W))
