"""Agent exceptions"""


class AgentError(Exception):
    """An Agent Error has ocurred"""


class UnknownAlgorithm(AgentError):
    """Requested learning algorithm does not exist"""


class QTableFormatError(AgentError):
    """Q-table file could not be parsed"""

    def __init__(self, source: str, message: str, line_no: int | None = None, *args: object) -> None:
        super().__init__(*args)
        self.source = source
        self.message = message
        self.line_no = line_no

    def __str__(self) -> str:
        if self.line_no is None:
            return f"{self.source}: {self.message}"
        return f"{self.source}:{self.line_no}: {self.message}"
