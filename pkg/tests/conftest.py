# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Shared fixtures for the pmmeas test-suite."""

import numpy as np
import pytest

from src.ddf_core import make_ddf
from src.delta_ops import tau_T
from src.hausdorff import dirac_context
from src.measures import NumericSetFunction, build_dirac
from src.scalar_ops import PI, ScalarOp, custom


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def two_step():
    """{(1, 0.5), (3, 0.5)}"""
    return make_ddf([(1, 0.5), (3, 0.5)])


@pytest.fixture
def additive_gamma():
    """gamma(E) = eps_{mu(E)} for the additive mu of weights (1, 2, 4)."""
    return build_dirac(NumericSetFunction.from_weights([1.0, 2.0, 4.0]))


@pytest.fixture
def two_point_ctx():
    """Two points at distance eps_1."""
    d = np.array([[0.0, 1.0], [1.0, 0.0]])
    return dirac_context(d, tau_T(PI), labels=("p", "q"))


def _hamacher(x, y):
    denom = x + y - x * y
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(denom > 0, x * y / np.where(denom > 0, denom, 1.0), 0.0)


@pytest.fixture
def hamacher() -> ScalarOp:
    """The Hamacher product xy / (x + y - xy) as a closure t-norm."""
    return custom(_hamacher, "H0")


@pytest.fixture
def no_config_files(tmp_path, monkeypatch):
    """Run from an empty directory with no PMMEAS_* overrides."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr("src.config.DEFAULT_PATHS", ("pmmeas_config.yaml", "config/pmmeas_config.yaml"))
    for var in ("PMMEAS_SEED", "PMMEAS_TOL", "PMMEAS_THREADS"):
        monkeypatch.delenv(var, raising=False)
    return tmp_path
