# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.ddf_core import (
    EPSILON_0,
    EPSILON_INF,
    DiscreteDDF,
    ddf_eq,
    ddf_leq,
    epsilon,
    evaluate,
    from_right_limits,
    grid_sample,
    make_ddf,
    pointwise_min,
    right_limit,
    scalar_multiply,
)
from src.errors import BadGridError, NegativeLocationError, NegativeMassError, NonCanonicalError, NonNormalizedError


class TestMakeDDF:

    def test_unit_atom_at_zero_is_eps0(self):
        assert make_ddf([(0, 1.0)]) == EPSILON_0

    def test_two_step_value_between_atoms(self, two_step):
        assert evaluate(two_step, 2) == pytest.approx(0.5)

    def test_mass_at_infinity(self):
        F = make_ddf([(1, 0.5)], 0.5)
        assert evaluate(F, 1e12) == pytest.approx(0.5)
        assert evaluate(F, math.inf) == 1.0
        assert F.inf_mass == pytest.approx(0.5)

    def test_atoms_at_same_location_merge(self):
        F = make_ddf([(2, 0.25), (1, 0.5), (2, 0.25)])
        assert F.atoms == ((1.0, 0.5), (2.0, 0.5))

    def test_zero_masses_dropped(self):
        assert make_ddf([(1, 0.0), (2, 1.0)]) == epsilon(2)

    def test_atom_at_infinity_moves_to_inf_mass(self):
        assert make_ddf([(math.inf, 1.0)]) == EPSILON_INF

    def test_not_normalized(self):
        with pytest.raises(NonNormalizedError):
            make_ddf([(1, 0.5), (2, 0.4)])

    def test_negative_location(self):
        with pytest.raises(NegativeLocationError):
            make_ddf([(-1, 1.0)])

    def test_negative_mass(self):
        with pytest.raises(NegativeMassError):
            make_ddf([(1, 1.5), (2, -0.5)])

    def test_constructor_rejects_bad_total(self):
        with pytest.raises(NonNormalizedError):
            DiscreteDDF(atoms=((1.0, 0.3),))

    @pytest.mark.parametrize("atoms, inf_mass, error", [
        (((2.0, 0.5), (1.0, 0.5)), 0.0, NonCanonicalError),
        (((1.0, 0.5), (1.0, 0.5)), 0.0, NonCanonicalError),
        (((-1.0, 1.0),), 0.0, NegativeLocationError),
        (((math.inf, 1.0),), 0.0, NegativeLocationError),
        (((1.0, 1.5), (2.0, -0.5)), 0.0, NegativeMassError),
        (((1.0, 0.0), (2.0, 1.0)), 0.0, NegativeMassError),
        (((1.0, 1.5),), -0.5, NegativeMassError),
    ], ids=["unsorted", "duplicate", "negative-location", "infinite-location",
            "negative-mass", "zero-mass", "negative-inf-mass"])
    def test_constructor_checks_canonical_form(self, atoms, inf_mass, error):
        with pytest.raises(error):
            DiscreteDDF(atoms=atoms, inf_mass=inf_mass)

    def test_json_form_reproduces(self, two_step):
        assert DiscreteDDF.from_dict(two_step.to_dict()) == two_step


class TestEpsilon:

    def test_eps0_is_one_just_above_zero(self):
        assert evaluate(EPSILON_0, 0.001) == 1.0
        assert evaluate(EPSILON_0, 0.0) == 0.0

    def test_jump_is_strictly_after_the_atom(self):
        F = epsilon(2)
        assert evaluate(F, 2) == 0.0
        assert evaluate(F, 2.0001) == 1.0

    def test_eps_infinity(self):
        F = epsilon(math.inf)
        assert evaluate(F, 1e300) == 0.0
        assert evaluate(F, math.inf) == 1.0

    def test_negative_location(self):
        with pytest.raises(NegativeLocationError):
            epsilon(-0.5)

    def test_is_dirac(self, two_step):
        assert epsilon(3).is_dirac
        assert EPSILON_INF.is_dirac
        assert not two_step.is_dirac


class TestEvaluate:

    def test_left_limit_at_atom(self, two_step):
        assert evaluate(two_step, 3) == pytest.approx(0.5)

    def test_right_limit_at_atom(self, two_step):
        assert right_limit(two_step, 3) == pytest.approx(1.0)
        assert right_limit(two_step, 1) == pytest.approx(0.5)

    def test_infinity_is_one(self, two_step):
        assert evaluate(two_step, math.inf) == 1.0
        assert evaluate(make_ddf([(1, 0.2)], 0.8), math.inf) == 1.0

    def test_vectorised(self, two_step):
        values = evaluate(two_step, np.array([0.0, 1.0, 1.5, 3.0, 3.5]))
        np.testing.assert_allclose(values, [0.0, 0.0, 0.5, 0.5, 1.0])


class TestScalarMultiply:

    def test_zero_and_infinity_give_eps0(self, two_step):
        assert scalar_multiply(0, two_step) == EPSILON_0
        assert scalar_multiply(math.inf, two_step) == EPSILON_0

    def test_scales_dirac_location(self):
        assert scalar_multiply(2, epsilon(3)) == epsilon(6)

    def test_scales_every_atom(self, two_step):
        assert ddf_eq(scalar_multiply(0.5, two_step), make_ddf([(0.5, 0.5), (1.5, 0.5)]))

    def test_composition(self, two_step):
        assert ddf_eq(scalar_multiply(2, scalar_multiply(3, two_step)), scalar_multiply(6, two_step))

    def test_negative_constant(self, two_step):
        with pytest.raises(NegativeLocationError):
            scalar_multiply(-1, two_step)

    def test_underflow_merges_atoms(self):
        F = scalar_multiply(5e-324, make_ddf([(1.0, 0.5), (1.2, 0.5)]))
        assert len(F.atoms) == 1
        assert F.atoms[0][1] == pytest.approx(1.0)


class TestOrder:

    def test_larger_location_is_smaller_ddf(self):
        assert ddf_leq(epsilon(3), epsilon(1))
        assert not ddf_leq(epsilon(1), epsilon(3))

    def test_reflexive(self, two_step):
        assert ddf_leq(two_step, two_step)
        assert ddf_eq(two_step, two_step)

    def test_everything_between_eps_inf_and_eps0(self, two_step):
        assert ddf_leq(EPSILON_INF, two_step)
        assert ddf_leq(two_step, EPSILON_0)

    def test_pointwise_min_is_below_both(self, two_step):
        low = pointwise_min(two_step, epsilon(2))
        assert ddf_leq(low, two_step)
        assert ddf_leq(low, epsilon(2))

    def test_location_tolerance(self):
        assert not ddf_eq(epsilon(1.0), epsilon(1.0 + 1e-6), tol=1e-9, loc_tol=1e-9)
        assert ddf_eq(epsilon(1.0), epsilon(1.0 + 1e-6), tol=1e-9, loc_tol=1e-5)


class TestFromRightLimits:

    def test_running_max(self):
        F = from_right_limits([1.0, 2.0, 3.0], [0.5, 0.2, 1.0])
        assert ddf_eq(F, make_ddf([(1, 0.5), (3, 0.5)]))

    def test_missing_mass_goes_to_infinity(self):
        F = from_right_limits([1.0], [0.25])
        assert F.inf_mass == pytest.approx(0.75)

    def test_all_zero_is_eps_inf(self):
        assert from_right_limits([0.0, 1.0], [0.0, 0.0]) == EPSILON_INF


class TestGridSample:

    def test_eps1_on_0_2_step_0_1(self):
        rows = grid_sample(epsilon(1), 2.0, 0.1)
        assert len(rows) == 21
        assert rows[10] == (pytest.approx(1.0), 0.0)
        assert rows[11][1] == 1.0

    def test_small_grids(self, two_step):
        assert grid_sample(epsilon(1), 2, 1) == [(0.0, 0.0), (1.0, 0.0), (2.0, 1.0)]
        assert grid_sample(EPSILON_0, 1, 0.5) == [(0.0, 0.0), (0.5, 1.0), (1.0, 1.0)]
        assert grid_sample(two_step, 4, 2) == [(0.0, 0.0), (2.0, 0.5), (4.0, 1.0)]

    def test_bad_step(self):
        with pytest.raises(BadGridError):
            grid_sample(EPSILON_0, 1.0, 0.0)


atoms_strategy = st.lists(
    st.tuples(st.integers(min_value=0, max_value=50), st.integers(min_value=1, max_value=20)),
    min_size=1, max_size=6,
)


@settings(max_examples=60, deadline=None)
@given(atoms=atoms_strategy, split=st.integers(min_value=0, max_value=5))
def test_canonical_form_ignores_order_and_splitting(atoms, split):
    total = sum(m for _, m in atoms)
    normalized = [(loc / 10.0, m / total) for loc, m in atoms]
    F = make_ddf(normalized)

    k = split % len(normalized)
    loc, mass = normalized[k]
    pieces = normalized[:k] + [(loc, mass / 2), (loc, mass / 2)] + normalized[k + 1:]
    G = make_ddf(list(reversed(pieces)))

    assert ddf_eq(F, G, 1e-12, 0.0)
    assert all(a < b for (a, _), (b, _) in zip(F.atoms, F.atoms[1:]))
    assert all(m > 0 for _, m in F.atoms)
