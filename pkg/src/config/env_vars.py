"""Gymnav Environment Variable Parsing"""

from dataclasses import dataclass, field, fields
from os import environ
from pathlib import Path

PREFIX = "gymnav"


@dataclass
class GymNavEnvironment:
    """Process environment variables read at startup"""

    worlds_dir: Path = field(default=None, metadata={"var": "GYMNAV_WORLDS"})
    log_dir: Path = field(default=None, metadata={"var": "GYMNAV_LOG_DIR"})
    config_path: Path = field(default=None, metadata={"var": "GYMNAV_CONFIG"})
    raw_vars: dict = field(default=None, repr=False)

    def __post_init__(self) -> None:
        # Get environment variables
        self.raw_vars = {k.lower().strip(): v for k, v in environ.items() if k.lower().startswith(PREFIX)}

        # Loop through dataclass fields
        for attr in fields(self):
            var_name = attr.metadata.get("var")
            if not var_name:
                continue

            value = self.raw_vars.get(var_name.lower())
            if not value or not value.strip():
                continue

            # Every variable currently names a filesystem location
            if attr.type is Path:
                self.__setattr__(attr.name, Path(value.strip()).expanduser())
