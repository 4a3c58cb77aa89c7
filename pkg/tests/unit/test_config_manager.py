"""Unit tests for ConfigManager."""

import pytest
import yaml

from src.errors import UsageError
from src.utils.config_manager import SEED_ENV_VAR, ConfigManager, SimConfig


@pytest.fixture
def config_dir(tmp_path):
    """A config directory with both YAML files."""
    (tmp_path / "config.yaml").write_text(
        yaml.dump(
            {
                "simulation": {"tolerance": 1e-9, "default_shots": 256, "default_seed": 42},
                "output": {"format": "csv"},
                "logging": {"level": "DEBUG", "run_log_path": str(tmp_path / "runs.log"), "retention_days": 3},
            }
        )
    )
    (tmp_path / "runners.yaml").write_text(
        yaml.dump({"runners": {"qpe": {"enabled": True, "defaults": {"ancillas": 5}}, "dj": {"enabled": False}}})
    )
    return tmp_path


@pytest.fixture(autouse=True)
def no_seed_env(monkeypatch):
    # setenv first so teardown also removes values loaded from a .env file
    monkeypatch.setenv(SEED_ENV_VAR, "")
    monkeypatch.delenv(SEED_ENV_VAR)


class TestLoading:
    def test_values_from_yaml(self, config_dir):
        manager = ConfigManager(str(config_dir))
        manager.load_all()
        cfg = manager.sim_config
        assert cfg.tolerance == 1e-9
        assert cfg.default_shots == 256
        assert cfg.default_seed == 42
        assert cfg.output_format == "csv"
        assert cfg.log_level == "DEBUG"
        assert cfg.log_retention_days == 3
        assert manager.validate() == []

    def test_missing_files_give_defaults(self, tmp_path):
        manager = ConfigManager(str(tmp_path / "absent"))
        manager.load_all()
        assert manager.sim_config == SimConfig()
        assert manager.runner_configs == {}

    def test_non_mapping_yaml_ignored(self, tmp_path):
        (tmp_path / "config.yaml").write_text("- just\n- a list\n")
        manager = ConfigManager(str(tmp_path))
        assert manager.load_yaml("config.yaml") == {}

    def test_runner_settings(self, config_dir):
        manager = ConfigManager(str(config_dir))
        manager.load_all()
        settings = manager.runner_settings()
        assert settings["qpe"] == {"enabled": True, "defaults": {"ancillas": 5}}
        assert settings["dj"]["enabled"] is False


class TestValidation:
    def test_not_loaded(self):
        assert ConfigManager().validate() == ["Configuration not loaded"]

    def test_reports_every_problem(self, tmp_path):
        (tmp_path / "config.yaml").write_text(
            yaml.dump(
                {
                    "simulation": {"tolerance": 0, "default_shots": 0, "default_seed": -1},
                    "output": {"format": "xml"},
                    "logging": {"level": "LOUD"},
                }
            )
        )
        manager = ConfigManager(str(tmp_path))
        manager.load_all()
        assert len(manager.validate()) == 5


class TestSeedResolution:
    def test_flag_wins(self, config_dir, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "9")
        manager = ConfigManager(str(config_dir))
        manager.load_all()
        assert manager.resolve_seed(3) == 3

    def test_environment_beats_config(self, config_dir, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "9")
        manager = ConfigManager(str(config_dir))
        manager.load_all()
        assert manager.resolve_seed(None) == 9

    def test_config_default(self, config_dir):
        manager = ConfigManager(str(config_dir))
        manager.load_all()
        assert manager.resolve_seed(None) == 42

    def test_dotenv_file(self, config_dir):
        (config_dir / ".env").write_text(f"{SEED_ENV_VAR}=123\n")
        manager = ConfigManager(str(config_dir))
        manager.load_all()
        assert manager.resolve_seed(None) == 123

    @pytest.mark.parametrize("raw", ["abc", "-1", str(2**64)])
    def test_bad_environment_seed(self, config_dir, monkeypatch, raw):
        monkeypatch.setenv(SEED_ENV_VAR, raw)
        manager = ConfigManager(str(config_dir))
        manager.load_all()
        with pytest.raises(UsageError):
            manager.resolve_seed(None)
