"""Q-table text export/import

One entry per line, `<state key> <action name> <value>`, lines sorted
lexicographically, values with 17 significant digits so they read back exactly.
"""

import logging
import math
from pathlib import Path
from src.environment import Action
from .exceptions import QTableFormatError
from .models import QTable

log = logging.getLogger("QTable-IO")


def format_qtable(q: QTable) -> str:
    """Text form of a table"""
    lines = sorted(f"{state} {action.value} {value:.17g}" for (state, action), value in q.items())
    return "".join(f"{line}\n" for line in lines)


def parse_qtable(text: str, source: str = "<string>") -> QTable:
    """Rebuild a table from its text form.

    Raises:
        QTableFormatError: Indicating the issue and line
    """
    q = QTable()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue

        parts = line.split()
        if len(parts) != 3:
            raise QTableFormatError(source, f"Expected '<state> <action> <value>', got '{line}'", line_no)
        state, action_name, raw_value = parts

        try:
            action = Action(action_name)
        except ValueError as e:
            raise QTableFormatError(source, f"Unknown action '{action_name}'", line_no) from e

        try:
            value = float(raw_value)
        except ValueError as e:
            raise QTableFormatError(source, f"Value '{raw_value}' is not a number", line_no) from e
        if not math.isfinite(value):
            raise QTableFormatError(source, f"Value '{raw_value}' is not finite", line_no)

        if (state, action) in q:
            raise QTableFormatError(source, f"Duplicate entry for ({state}, {action.value})", line_no)
        q.set(state, action, value)

    return q


def save_qtable(q: QTable, path: Path) -> None:
    """Write a table to `path`"""
    Path(path).write_text(format_qtable(q), encoding="utf8")
    log.info("Wrote %s entries to %s", len(q), path)


def load_qtable(path: Path) -> QTable:
    """Read a table written by `save_qtable`.

    Raises:
        QTableFormatError: File unreadable or malformed
    """
    try:
        text = Path(path).read_text(encoding="utf8")
    except OSError as e:
        raise QTableFormatError(str(path), f"Failed to read Q-table. Error: {e}") from e
    return parse_qtable(text, source=Path(path).name)
