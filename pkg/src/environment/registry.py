"""Environment registry"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from src.geometry import WorldFormatError, WorldMap, load_world, wall_clearance
from .exceptions import UnknownEnvironment
from .models import EnvConfig
from .turtlebot_lidar import TurtlebotLidarEnv

WORLDS_DIR = Path(__file__).with_name("worlds")
ENV_SUFFIX = "TurtlebotLidar-v0"

BUILTIN_ENVS = [
    ("CircuitTurtlebotLidar-v0", "circuit.world", "A simple circuit with a diagonal wall"),
    ("Circuit2TurtlebotLidar-v0", "circuit2.world", "Straight tracks and 90 degree turns, five right and one left"),
    ("MazeTurtlebotLidar-v0", "maze.world", "A complex maze with different wall shapes and some narrow tracks"),
    ("RoundTurtlebotLidar-v0", "round.world", "A simple oval shaped circuit"),
]


def env_id_for(world_name: str) -> str:
    """Environment id derived from a world name, e.g. `my_track` -> `MyTrackTurtlebotLidar-v0`"""
    parts = re.split(r"[_\-]+", world_name)
    return "".join(part[:1].upper() + part[1:] for part in parts if part) + ENV_SUFFIX


@dataclass(frozen=True)
class EnvSpec:
    """Registered environment"""

    env_id: str
    world: WorldMap
    description: str

    def __str__(self) -> str:
        return f"{self.env_id}  {self.world.name}  {self.description}"


class Registry:
    """Maps environment ids to worlds and builds environments"""

    def __init__(self) -> None:
        self.log = logging.getLogger("Env-Registry")
        self._specs: dict[str, EnvSpec] = {}

    def __contains__(self, env_id: str) -> bool:
        return env_id in self._specs

    def __len__(self) -> int:
        return len(self._specs)

    def register(self, env_id: str, world: WorldMap, description: str = "") -> EnvSpec:
        """Register (or replace) an environment id"""
        if env_id in self._specs:
            self.log.warning("Replacing registered environment %s", env_id)
        spec = EnvSpec(env_id=env_id, world=world, description=description)
        self._specs[env_id] = spec
        return spec

    def register_file(self, path: Path, env_id: str = None, description: str = None) -> EnvSpec:
        """Load a world file and register it"""
        world = load_world(path)
        env_id = env_id or env_id_for(world.name)
        description = description or f"User world from {Path(path).name}"
        return self.register(env_id, world, description)

    def load_world_dir(self, directory: Path, collision_threshold: float = 0.21) -> list[str]:
        """Register every `*.world` file in a directory.

        Files that fail to load are skipped with a warning.

        Returns:
            list[str]: Environment ids registered
        """
        directory = Path(directory)
        if not directory.is_dir():
            self.log.warning("World directory %s does not exist. No extra worlds loaded.", directory)
            return []

        added = []
        for path in sorted(directory.glob("*.world")):
            try:
                spec = self.register_file(path)
            except WorldFormatError as e:
                self.log.warning("Skipping world file. %s", e)
                continue

            clearance = wall_clearance(spec.world)
            if clearance < 2 * collision_threshold:
                self.log.warning(
                    "World %s has a %.2f m gap between walls, narrower than the robot. Episodes may end instantly.",
                    spec.world.name,
                    clearance,
                )
            self.log.info("Registered %s from %s", spec.env_id, path)
            added.append(spec.env_id)
        return added

    def ids(self) -> list[str]:
        """Registered ids, sorted"""
        return sorted(self._specs)

    def specs(self) -> list[EnvSpec]:
        """Registered specs, sorted by id"""
        return [self._specs[env_id] for env_id in self.ids()]

    def spec(self, env_id: str) -> EnvSpec:
        """Look up one environment.

        Raises:
            UnknownEnvironment: The id is not registered
        """
        try:
            return self._specs[env_id]
        except KeyError as e:
            raise UnknownEnvironment(env_id, self.ids()) from e

    def make(self, env_id: str, **overrides) -> TurtlebotLidarEnv:
        """Fresh environment for `env_id`, default config unless overridden"""
        spec = self.spec(env_id)
        return TurtlebotLidarEnv(EnvConfig(world=spec.world, **overrides), env_id=env_id)


def default_registry() -> Registry:
    """Registry holding the built-in Turtlebot worlds"""
    registry = Registry()
    for env_id, file_name, description in BUILTIN_ENVS:
        registry.register(env_id, load_world(WORLDS_DIR / file_name), description)
    return registry


REGISTRY = default_registry()


def make(env_id: str, registry: Registry = None, **overrides) -> TurtlebotLidarEnv:
    """Build a registered environment, Gym style"""
    return (registry if registry is not None else REGISTRY).make(env_id, **overrides)
