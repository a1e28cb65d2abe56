import logging
from pathlib import Path
import pytest
import yaml
from src import config_log
from src.config import ConfigError, ConfigParser, GymNavEnvironment, LogCfg, check_range


@pytest.fixture
def parser():
    return ConfigParser()


@pytest.fixture
def default_data():
    with open(ConfigParser.DEFAULT_PATH, encoding="utf8") as file:
        return yaml.safe_load(file)


def write(tmp_path, data) -> Path:
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(data), encoding="utf8")
    return path


class TestConfigParser:
    def test_default(self, parser):
        cfg = parser.default()
        assert parser.is_default(cfg)
        assert cfg.logs.level == "INFO"
        assert cfg.environment.n_beams == 5
        assert cfg.environment.rewards.crash == -200.0
        assert cfg.agent.decay == 0.9986
        assert cfg.training.episodes == 3000
        assert cfg.training.interval == 200

    def test_custom_file(self, parser, tmp_path, default_data):
        default_data["agent"]["alpha"] = 0.5
        default_data["logs"]["level"] = "debug"
        cfg = parser.get_config(write(tmp_path, default_data))
        assert cfg.agent.alpha == 0.5
        assert cfg.logs.level == "DEBUG"
        assert not parser.is_default(cfg)

    def test_integers_accepted_as_floats(self, parser, tmp_path, default_data):
        default_data["environment"]["max_range"] = 6
        cfg = parser.get_config(write(tmp_path, default_data))
        assert cfg.environment.max_range == 6.0
        assert isinstance(cfg.environment.max_range, float)

    def test_environment_kwargs(self, parser):
        kwargs = parser.default().environment.as_kwargs()
        assert kwargs["substeps"] == 8
        assert kwargs["rewards"] == {"forward": 5.0, "turn": 1.0, "crash": -200.0}

    @pytest.mark.parametrize(
        "section, key, value, message",
        [
            ("logs", "level", "LOUD", "options"),
            ("agent", "alpha", 1.5, "Must be in"),
            ("agent", "gamma", 1.0, "Must be in"),
            ("agent", "decay", 0.0, "Must be in"),
            ("training", "episodes", 0, "Must be in"),
            ("training", "episodes", 1.5, "Invalid type"),
            ("environment", "n_beams", True, "got bool"),
            ("environment", "max_range", "far", "Invalid type"),
            ("logs", "write_file", "yes", "Invalid type"),
        ],
    )
    def test_invalid_values(self, parser, tmp_path, default_data, section, key, value, message):
        default_data[section][key] = value
        with pytest.raises(ConfigError, match=message):
            parser.get_config(write(tmp_path, default_data))

    def test_unknown_key(self, parser, tmp_path, default_data):
        default_data["agent"]["lambda"] = 0.5
        with pytest.raises(ConfigError, match="agent.lambda"):
            parser.get_config(write(tmp_path, default_data))

    def test_missing_key(self, parser, tmp_path, default_data):
        del default_data["environment"]["rewards"]["turn"]
        with pytest.raises(ConfigError, match="environment.rewards.turn"):
            parser.get_config(write(tmp_path, default_data))

    def test_section_not_a_mapping(self, parser, tmp_path, default_data):
        default_data["training"] = [1, 2]
        with pytest.raises(ConfigError, match="training"):
            parser.get_config(write(tmp_path, default_data))

    def test_missing_file(self, parser, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            parser.get_config(tmp_path / "absent.yaml")

    def test_invalid_yaml(self, parser, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("agent: {alpha: [\n", encoding="utf8")
        with pytest.raises(ConfigError, match="not valid yaml"):
            parser.get_config(path)

    def test_empty_file(self, parser, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf8")
        with pytest.raises(ConfigError):
            parser.get_config(path)


class TestCheckRange:
    @pytest.mark.parametrize("name, value", [("alpha", 0.0), ("alpha", 1.0), ("gamma", 0.0), ("decay", 1.0), ("seed", 0)])
    def test_accepts(self, name, value):
        check_range(name, value)

    @pytest.mark.parametrize(
        "name, value", [("alpha", -0.1), ("gamma", 1.0), ("decay", 0.0), ("seed", -1), ("jobs", 0), ("seeds", 0)]
    )
    def test_rejects(self, name, value):
        with pytest.raises(ConfigError):
            check_range(name, value)

    def test_unranged_name(self):
        check_range("forward", -1e9)


class TestEnvironmentVariables:
    def test_unset(self, monkeypatch):
        for var in ("GYMNAV_CONFIG", "GYMNAV_WORLDS", "GYMNAV_LOG_DIR"):
            monkeypatch.delenv(var, raising=False)
        env = GymNavEnvironment()
        assert env.config_path is None
        assert env.worlds_dir is None
        assert env.log_dir is None

    def test_reads_paths(self, monkeypatch, tmp_path):
        monkeypatch.setenv("GYMNAV_CONFIG", f" {tmp_path / 'cfg.yaml'} ")
        monkeypatch.setenv("GYMNAV_WORLDS", str(tmp_path))
        monkeypatch.setenv("GYMNAV_LOG_DIR", "")
        env = GymNavEnvironment()
        assert env.config_path == tmp_path / "cfg.yaml"
        assert env.worlds_dir == tmp_path
        assert env.log_dir is None
        assert "gymnav_worlds" in env.raw_vars


class TestConfigLog:
    def test_file_handler(self, tmp_path):
        log_dir = tmp_path / "logs"
        config_log(LogCfg(level="DEBUG", write_file=True), log_dir)
        logging.getLogger("Config-Test").debug("written to file")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written to file" in (log_dir / "gymnav.log").read_text(encoding="utf8")
        config_log(LogCfg())

    def test_console_only(self, tmp_path):
        config_log(LogCfg(), tmp_path / "logs")
        assert not (tmp_path / "logs").exists()
