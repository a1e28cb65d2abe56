"""Gymnav Configuration Manager"""

import math
from pathlib import Path
import yaml
from .models import Config, LogLevels
from .exceptions import ConfigError

NUMBER = (int, float)

CONFIG_SCHEMA = {
    "logs": {
        "level": str,
        "write_file": bool,
    },
    "environment": {
        "fov": NUMBER,
        "n_beams": int,
        "max_range": NUMBER,
        "bin_width": NUMBER,
        "action_duration": NUMBER,
        "substeps": int,
        "collision_threshold": NUMBER,
        "rewards": {
            "forward": NUMBER,
            "turn": NUMBER,
            "crash": NUMBER,
        },
    },
    "agent": {
        "alpha": NUMBER,
        "gamma": NUMBER,
        "epsilon0": NUMBER,
        "decay": NUMBER,
        "eps_min": NUMBER,
    },
    "training": {
        "episodes": int,
        "max_steps": int,
        "interval": int,
        "window": int,
        "seed": int,
        "jobs": int,
    },
}

# key -> (low, high, low inclusive, high inclusive)
VALUE_RANGES = {
    "alpha": (0.0, 1.0, True, True),
    "gamma": (0.0, 1.0, True, False),
    "epsilon0": (0.0, 1.0, True, True),
    "decay": (0.0, 1.0, False, True),
    "eps_min": (0.0, 1.0, True, True),
    "fov": (0.0, math.tau, False, True),
    "max_range": (0.0, math.inf, False, False),
    "bin_width": (0.0, math.inf, False, False),
    "action_duration": (0.0, math.inf, False, False),
    "collision_threshold": (0.0, math.inf, False, False),
    "n_beams": (1, math.inf, True, False),
    "substeps": (1, math.inf, True, False),
    "episodes": (1, math.inf, True, False),
    "max_steps": (1, math.inf, True, False),
    "interval": (1, math.inf, True, False),
    "window": (1, math.inf, True, False),
    "seed": (0, 2**64 - 1, True, True),
    "jobs": (1, math.inf, True, False),
    "seeds": (1, math.inf, True, False),
}


def check_range(name: str, value: float) -> None:
    """Raise ConfigError when `value` falls outside the documented range of `name`"""
    if name not in VALUE_RANGES:
        return
    low, high, low_inc, high_inc = VALUE_RANGES[name]
    above = value >= low if low_inc else value > low
    below = value <= high if high_inc else value < high
    if not (above and below):
        lo_br = "[" if low_inc else "("
        hi_br = "]" if high_inc else ")"
        raise ConfigError(f"Invalid value for '{name}' got {value}. Must be in {lo_br}{low}, {high}{hi_br}")


class ConfigParser:
    """Parse and validate config files"""

    DEFAULT_PATH = Path(__file__).with_name("default_config.yaml")

    @classmethod
    def _validate_config(cls, config: dict, schema: dict, path: list[str] = None) -> None:
        """Validate config based on a schema. This method is called recursively
        validating each part of the config against the schema.

        Args:
            config (dict): The config parsed from yaml as a dict
            schema (dict): The schema to validate against
            path (list[str], optional): Not used upon initial call. Defaults to None.

        Raises:
            ConfigError: Indicating the issue and location
        """
        if path is None:
            path = []
        if not isinstance(config, dict):
            raise ConfigError(f"Expected a mapping at '{'.'.join(path) or '<root>'}', got {type(config)}.")

        for key in config:
            if key not in schema:
                raise ConfigError(f"Unknown key '{'.'.join(path + [key])}' in the config.")

        for key, expected_type in schema.items():
            current_path = path + [key]
            current_path_str = ".".join(current_path)
            if key not in config:
                raise ConfigError(f"'{current_path_str}' is missing in the config.")

            actual_value = config[key]
            if isinstance(expected_type, dict):
                # Recursive call for nested dictionaries
                cls._validate_config(actual_value, expected_type, current_path)
                continue

            # bool is an int subclass, reject it anywhere a number is expected
            if isinstance(actual_value, bool) and expected_type is not bool:
                raise ConfigError(f"Invalid type for '{current_path_str}', expected {expected_type}, got bool.")

            if not isinstance(actual_value, expected_type):
                val_type = type(actual_value)
                raise ConfigError(f"Invalid type for '{current_path_str}', expected {expected_type}, got {val_type}.")

            # Validate log.level field
            if key == "level":
                if actual_value.upper() not in LogLevels.values():
                    opts = ", ".join(LogLevels.values())
                    raise ConfigError(f"Invalid value for '{current_path_str}', options: {opts}, got {actual_value}")
                continue

            if isinstance(actual_value, NUMBER):
                try:
                    check_range(key, actual_value)
                except ConfigError as e:
                    raise ConfigError(f"{e} (at '{current_path_str}')") from e

    def default(self) -> Config:
        """The shipped default configuration"""
        return self.get_config(self.DEFAULT_PATH)

    def is_default(self, config: Config) -> bool:
        """Checks if a config object is the default.

        Args:
            config (Config): Object previously parsed by get_config

        Returns:
            bool: True if the provided config is the default
        """
        return self.default() == config

    def get_config(self, config_path: Path) -> Config:
        """Parse and validate a config file at the provided path.

        Args:
            config_path (Path): Path to a config file in yaml format

        Returns:
            Config: Object containing all user settings
        """
        try:
            with open(config_path, mode="r", encoding="utf8") as file:
                cfg = yaml.safe_load(file.read())
        except FileNotFoundError as e:
            raise ConfigError(f"Config file not found at '{config_path}'") from e
        except OSError as e:
            raise ConfigError(f"Failed to read config file. Error: {e}") from e
        except yaml.YAMLError as e:
            raise ConfigError(f"Config file is not valid yaml. Error: {e}") from e

        try:
            self._validate_config(cfg, CONFIG_SCHEMA)
        except ConfigError as e:
            raise ConfigError(f"Invalid Config file. Error: {e}") from e

        return Config.from_dict(cfg)
