# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

import pytest

from src.config import ALL_SUITES, DEFAULT_SEED, Config, SuiteConfig, thread_cap
from src.delta_ops import PI_M, tau_T
from src.errors import ConfigError, SuiteUnknownError
from src.scalar_ops import W


class TestSuiteConfig:

    def test_defaults(self):
        config = SuiteConfig().validate()
        assert config.seed == DEFAULT_SEED
        assert config.suites == list(ALL_SUITES)
        assert config.negative_tests

    def test_from_dict(self):
        config = SuiteConfig.from_dict({
            "seed": 7,
            "tolerance": 1e-6,
            "suites": ["ddf", "scalar"],
            "delta_ops": [{"kind": "tau_T", "T": {"kind": "tnorm-W"}}],
            "instances": {"measures": 2},
        })
        assert config.seed == 7
        assert config.delta_ops == [tau_T(W)]
        assert config.instance_count("measures") == 2
        assert config.instance_count("hausdorff") == 10

    def test_pi_top_descriptor(self):
        config = SuiteConfig.from_dict({"measurable_ops": [{"kind": "pi_top", "top": {"kind": "tnorm-M"}}]})
        assert config.measurable_ops == [PI_M]

    def test_unknown_key(self):
        with pytest.raises(ConfigError):
            SuiteConfig.from_dict({"sead": 1})

    def test_unknown_suite(self):
        with pytest.raises(SuiteUnknownError):
            SuiteConfig(suites=["ddf", "nope"]).validate()

    @pytest.mark.parametrize("overrides", [
        {"tolerance": 0.0},
        {"oracle_grid_step": 0.75},
        {"universe_sizes": [17]},
        {"threads": 0},
    ])
    def test_invalid_values(self, overrides):
        with pytest.raises(ConfigError):
            SuiteConfig().with_overrides(**overrides)

    def test_overrides_skip_none(self):
        config = SuiteConfig().with_overrides(seed=None, tolerance=1e-6, suites=[])
        assert config.seed == DEFAULT_SEED
        assert config.tolerance == 1e-6
        assert config.suites == []

    def test_echo_excludes_threads(self):
        assert "threads" not in SuiteConfig(threads=2).to_dict()


class TestConfigFile:

    def test_defaults_without_file(self, no_config_files):
        config = Config()
        assert config.source is None
        assert config.suite.seed == DEFAULT_SEED
        assert config.explore.budget == 500
        assert config.export.step == 0.1

    def test_yaml_file(self, no_config_files):
        path = no_config_files / "pmmeas.yaml"
        path.write_text("verify:\n  seed: 99\n  suites: [ddf]\nexplore:\n  budget: 12\n")
        config = Config(str(path))
        assert config.source == str(path)
        assert config.suite.seed == 99
        assert config.suite.suites == ["ddf"]
        assert config.explore.budget == 12

    def test_json_file(self, no_config_files):
        path = no_config_files / "pmmeas.json"
        path.write_text('{"verify": {"tolerance": 1e-7}}')
        assert Config(str(path)).suite.tolerance == 1e-7

    def test_default_location(self, no_config_files):
        (no_config_files / "pmmeas_config.yaml").write_text("verify:\n  seed: 5\n")
        assert Config().suite.seed == 5

    def test_environment_overrides(self, no_config_files, monkeypatch):
        monkeypatch.setenv("PMMEAS_SEED", "42")
        monkeypatch.setenv("PMMEAS_TOL", "1e-5")
        config = Config()
        assert config.suite.seed == 42
        assert config.suite.tolerance == 1e-5

    def test_bad_environment_value(self, no_config_files, monkeypatch):
        monkeypatch.setenv("PMMEAS_SEED", "many")
        with pytest.raises(ConfigError):
            Config()

    def test_missing_file(self, no_config_files):
        with pytest.raises(ConfigError):
            Config(str(no_config_files / "absent.yaml"))

    def test_malformed_yaml(self, no_config_files):
        path = no_config_files / "broken.yaml"
        path.write_text("verify: [unclosed\n")
        with pytest.raises(ConfigError):
            Config(str(path))

    def test_non_mapping(self, no_config_files):
        path = no_config_files / "list.yaml"
        path.write_text("- a\n- b\n")
        with pytest.raises(ConfigError):
            Config(str(path))

    def test_bad_explore_section(self, no_config_files):
        path = no_config_files / "explore.yaml"
        path.write_text("explore:\n  budget: lots\n")
        with pytest.raises(ConfigError):
            Config(str(path)).explore


class TestThreadCap:

    def test_capped_by_jobs(self, monkeypatch):
        monkeypatch.delenv("PMMEAS_THREADS", raising=False)
        assert thread_cap(None, 3) == 3
        assert thread_cap(8, 3) == 3
        assert thread_cap(2, 3) == 2

    def test_environment_cap(self, monkeypatch):
        monkeypatch.setenv("PMMEAS_THREADS", "1")
        assert thread_cap(None, 12) == 1

    def test_never_below_one(self, monkeypatch):
        monkeypatch.delenv("PMMEAS_THREADS", raising=False)
        assert thread_cap(None, 0) == 1
