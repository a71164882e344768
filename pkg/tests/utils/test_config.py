"""
Unit tests for the configuration layer.
"""
from lie2weyl.utils.config import Config, EngineConfig, SuiteConfig, config


class TestConfig:
    """Tests for the global configuration."""

    def test_sections(self):
        """Test that the sections are built and consistent."""
        assert isinstance(config.engine, EngineConfig)
        assert isinstance(config.suites, SuiteConfig)
        assert config.engine.max_order >= config.engine.default_order

    def test_as_dict(self):
        """Test the grouped settings used by the startup log."""
        values = Config().as_dict()
        assert set(values) == {"engine", "suites", "runtime", "debug"}
        assert "max_terms" in values["engine"]
        assert "jsi_max" in values["suites"]
        assert "threads" in values["runtime"]

    def test_suite_defaults(self):
        """Test that the default suite bounds reach the full check ranges."""
        fields = SuiteConfig.model_fields
        assert fields["tensor_max_n"].default >= 5
        assert fields["oracle_degree"].default >= 6
        assert fields["max_n"].default >= 40
        assert fields["coth_max_i"].default >= 30

    def test_environment_override(self, monkeypatch):
        """Test that a field default can be overridden from the environment."""
        monkeypatch.setenv("LIE2WEYL_DEBUG", "true")
        assert Config().debug
        monkeypatch.setenv("LIE2WEYL_DEBUG", "no")
        assert not Config().debug
