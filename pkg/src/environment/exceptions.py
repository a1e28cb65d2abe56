"""Gym environment exceptions"""


class GymEnvError(Exception):
    """An Environment Error has ocurred"""


class EnvConfigError(GymEnvError):
    """Environment configuration is inconsistent"""


class EpisodeTerminated(GymEnvError):
    """step() was called on an episode that already ended"""


class UnknownEnvironment(GymEnvError):
    """Requested environment id is not registered"""

    def __init__(self, env_id: str, known_ids: list[str], *args: object) -> None:
        super().__init__(*args)
        self.env_id = env_id
        self.known_ids = known_ids

    def __str__(self) -> str:
        known = ", ".join(self.known_ids) if self.known_ids else "none"
        return f"Unknown environment '{self.env_id}'. Registered: [{known}]"
